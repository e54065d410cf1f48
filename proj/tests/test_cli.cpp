#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "snasym/cli.hpp"

using namespace snasym;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"snasym"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("snasym_test_" + name);
}

}  // namespace

TEST(Cli, ScanToStdoutKeepsCsvClean) {
  const auto r = run({"scan", "--eps", "0.01", "--approx", "composite", "--tmin", "0", "--tmax", "1", "--samples",
                      "2", "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,oracle,approx,abs_err,rel_err");
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 3);
  EXPECT_EQ(r.out.find("summary"), std::string::npos);
  EXPECT_NE(r.err.find("summary approx=composite"), std::string::npos);
}

TEST(Cli, ScanToFileIsDeterministic) {
  const auto p1 = temp_file("a.csv"), p2 = temp_file("b.csv");
  const auto a = run({"scan", "--eps", "0.01", "--approx", "full-period", "--tmin", "-2.3", "--tmax", "6.9",
                      "--samples", "300", "--out", p1.c_str()});
  const auto b = run({"scan", "--eps", "0.01", "--approx", "full-period", "--tmin", "-2.3", "--tmax", "6.9",
                      "--samples", "300", "--out", p2.c_str()});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(b.code, 0);
  EXPECT_NE(a.out.find("rows=300"), std::string::npos);
  EXPECT_EQ(slurp(p1), slurp(p2));
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, InvalidArgumentsExitOne) {
  EXPECT_EQ(run({"scan", "--eps", "0", "--approx", "outer", "--tmin", "0", "--tmax", "1"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"scan", "--eps", "0.1", "--approx", "bogus", "--tmin", "0", "--tmax", "1"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"scan", "--eps", "0.1", "--approx", "outer", "--tmin", "1", "--tmax", "0"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"scan", "--eps", "0.1", "--approx", "outer", "--tmin", "0", "--tmax", "1", "--samples", "1"}).code,
            kExitInvalidArgs);
  EXPECT_EQ(run({"scan", "--eps", "abc", "--approx", "outer", "--tmin", "0", "--tmax", "1"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"scan", "--approx", "outer"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"order", "--approx", "outer", "--eps-list", "0.1,0.01"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"order", "--approx", "outer", "--window", "wide"}).code, kExitInvalidArgs);
  EXPECT_EQ(run({"kcompare", "--eps-list", "0.5,1.5"}).code, kExitInvalidArgs);
}

TEST(Cli, UnwritablePathExitsTwo) {
  const auto r = run({"scan", "--eps", "0.1", "--approx", "outer", "--tmin", "0", "--tmax", "1", "--out",
                      "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("/nonexistent-dir/x.csv"), std::string::npos);
  EXPECT_EQ(run({"kcompare", "--out", "/nonexistent-dir/k.csv"}).code, kExitIo);
}

TEST(Cli, KCompareReportsHandbookBound) {
  const auto r = run({"kcompare", "--eps-list", "0.9,0.5,0.1,0.01,0.001"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "eps,K_oracle,K_handbook,K_asym4,K_mu_series,res_handbook,res_asym4,res_mu_series");
  EXPECT_NE(r.err.find("within=5/5"), std::string::npos);
}

TEST(Cli, OrderPrintsFit) {
  const auto r = run({"order", "--approx", "k-asym", "--eps-list", "0.1,0.01,0.001"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fitted_order="), std::string::npos);
  EXPECT_NE(r.out.find("eps=0.001 max_err="), std::string::npos);
}

TEST(Cli, OrderCsvToStdout) {
  const auto r = run({"order", "--approx", "outer", "--eps-list", "0.1,0.03,0.01", "--out", "-"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "eps,max_err");
  EXPECT_NE(r.err.find("fitted_order="), std::string::npos);
}

TEST(Cli, SelftestPassesAndIsDeterministic) {
  const auto a = run({"selftest"});
  const auto b = run({"selftest"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all checks passed"), std::string::npos);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("scan"), std::string::npos);
}
