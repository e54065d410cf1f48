#include <gtest/gtest.h>

#include <sstream>

#include "snasym/selftest.hpp"

using namespace snasym;

namespace {

std::string render(const std::vector<CheckResult>& results, int& code) {
  std::ostringstream out;
  code = print_selftest(results, out);
  return out.str();
}

}  // namespace

TEST(Selftest, FreshBuildPasses) {
  int code = -1;
  const auto text = render(run_selftest(), code);
  EXPECT_EQ(code, 0) << text;
  EXPECT_EQ(text.find("FAIL"), std::string::npos);
}

TEST(Selftest, RunsTwiceByteIdentical) {
  int c1 = -1, c2 = -1;
  EXPECT_EQ(render(run_selftest(), c1), render(run_selftest(), c2));
}

TEST(Selftest, CorruptedSeriesCoefficientIsNamed) {
  SelftestFixture fx;
  fx.k_series.const_part[2] *= 1.001;
  int code = -1;
  const auto text = render(run_selftest(fx), code);
  EXPECT_EQ(code, 3);
  EXPECT_NE(text.find("FAIL  k.coefficients_exact_vs_decimal"), std::string::npos) << text;
}

TEST(Selftest, CorruptedLogCoefficientIsNamed) {
  SelftestFixture fx;
  fx.k_series.log_coeff[1] = 0.124;
  int code = -1;
  const auto text = render(run_selftest(fx), code);
  EXPECT_EQ(code, 3);
  EXPECT_NE(text.find("FAIL  k.coefficients_exact_vs_decimal"), std::string::npos) << text;
}

TEST(Selftest, TransposedHandbookConstantIsNamed) {
  SelftestFixture fx;
  fx.handbook.a[0] = kMisprintedHandbookA0;
  int code = -1;
  const auto text = render(run_selftest(fx), code);
  EXPECT_EQ(code, 3);
  EXPECT_NE(text.find("FAIL  k.handbook_within_2e-8"), std::string::npos) << text;
}

TEST(Selftest, ReportOnlyRowsNeverFail) {
  std::vector<CheckResult> results{{"a", true, "", false}, {"b", true, "residual 1e3", true}};
  int code = -1;
  const auto text = render(results, code);
  EXPECT_EQ(code, 0);
  EXPECT_NE(text.find("NOTE  b"), std::string::npos);
}
