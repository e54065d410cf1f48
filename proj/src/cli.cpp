#include "snasym/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "snasym/csv.hpp"
#include "snasym/order_fit.hpp"
#include "snasym/scan.hpp"
#include "snasym/selftest.hpp"

namespace snasym {

namespace {

const std::map<std::string, ApproxKind>& approx_tags() {
  static const std::map<std::string, ApproxKind> tags{
      {"handbook-sn", ApproxKind::handbook_sn},
      {"outer", ApproxKind::outer},
      {"inner", ApproxKind::inner},
      {"composite", ApproxKind::composite_first_half},
      {"composite-second-half", ApproxKind::composite_second_half},
      {"full-period", ApproxKind::full_period},
  };
  return tags;
}

const std::map<std::string, KFormula>& k_tags() {
  static const std::map<std::string, KFormula> tags{
      {"k-asym", KFormula::asymptotic},
      {"k-handbook", KFormula::handbook},
      {"k-mu", KFormula::mu_series},
  };
  return tags;
}

std::string known_tags(bool with_k) {
  std::string s;
  for (const auto& [tag, kind] : approx_tags()) s += (s.empty() ? "" : ", ") + tag;
  if (with_k)
    for (const auto& [tag, kind] : k_tags()) s += ", " + tag;
  return s;
}

int default_order(const std::string& tag) { return tag == "k-asym" ? 4 : 2; }

/// Writes through `write` to path ("-" = out). Returns kExitIo on failure.
int emit(const std::string& path, std::ostream& out, std::ostream& err,
         const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(out);
    out.flush();
    return out ? kExitOk : kExitIo;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  write(file);
  file.flush();
  if (!file) {
    err << "error: write to '" << path << "' failed\n";
    return kExitIo;
  }
  return kExitOk;
}

struct ScanArgs {
  double eps = 0.01;
  std::string approx;
  std::optional<int> order;
  double t_min = 0;
  double t_max = 0;
  int samples = 1000;
  std::string out = "-";
};

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const auto it = approx_tags().find(a.approx);
  if (it == approx_tags().end()) {
    err << "error: unknown --approx '" << a.approx << "' (expected one of " << known_tags(false) << ")\n";
    return kExitInvalidArgs;
  }
  ScanConfig config{a.eps, it->second, a.order.value_or(default_order(a.approx)),
                    a.t_min, a.t_max, a.samples, a.out};
  const auto report = run_scan(config);
  if (const int rc = emit(a.out, out, err, [&](std::ostream& os) { write_scan_csv(os, report.rows); }); rc != 0)
    return rc;
  // Keep stdout pure CSV when streaming.
  (a.out == "-" ? err : out) << summary_line(report) << '\n';
  return kExitOk;
}

struct KCompareArgs {
  std::vector<double> eps_list{0.9, 0.5, 0.1, 0.01, 0.001, 1e-8};
  std::string out = "-";
};

int cmd_kcompare(const KCompareArgs& a, std::ostream& out, std::ostream& err) {
  const auto rows = k_compare(a.eps_list);
  if (const int rc = emit(a.out, out, err, [&](std::ostream& os) { write_kcompare_csv(os, rows); }); rc != 0)
    return rc;
  int within = 0;
  std::string violators;
  for (const auto& r : rows) {
    if (r.res_handbook < kHandbookK.err_bound) {
      ++within;
    } else {
      violators += " " + format_double(r.eps);
    }
  }
  (a.out == "-" ? err : out) << "summary handbook_bound=" << format_double(kHandbookK.err_bound)
                             << " within=" << within << "/" << rows.size()
                             << (violators.empty() ? "" : " violated_at=" + violators.substr(1)) << '\n';
  return kExitOk;
}

struct OrderArgs {
  std::string approx;
  std::optional<int> order;
  std::vector<double> eps_list{std::begin(kDefaultEpsLadder), std::end(kDefaultEpsLadder)};
  std::string window = "fixed";
  double t_min = -1;
  double t_max = 1;
  int samples = 401;
  std::optional<std::string> out;
};

int cmd_order(const OrderArgs& a, std::ostream& out, std::ostream& err) {
  OrderTarget target;
  if (const auto it = approx_tags().find(a.approx); it != approx_tags().end()) {
    target = it->second;
  } else if (const auto kt = k_tags().find(a.approx); kt != k_tags().end()) {
    target = kt->second;
  } else {
    err << "error: unknown --approx '" << a.approx << "' (expected one of " << known_tags(true) << ")\n";
    return kExitInvalidArgs;
  }
  if (a.window != "fixed" && a.window != "scaled") {
    err << "error: --window must be fixed or scaled\n";
    return kExitInvalidArgs;
  }
  const auto fit = measure_order(target, a.order.value_or(default_order(a.approx)), a.eps_list,
                                 a.window == "fixed" ? WindowPolicy::fixed : WindowPolicy::scaled,
                                 a.t_min, a.t_max, a.samples);
  if (a.out) {
    if (const int rc = emit(*a.out, out, err, [&](std::ostream& os) { write_order_csv(os, fit); }); rc != 0)
      return rc;
  }
  std::ostream& report = (a.out && *a.out == "-") ? err : out;
  if (!a.out) {
    for (std::size_t i = 0; i < fit.eps_list.size(); ++i)
      report << "eps=" << format_double(fit.eps_list[i]) << " max_err=" << format_double(fit.max_errs[i]) << '\n';
  }
  report << "summary approx=" << a.approx << " window=" << a.window
         << " fitted_order=" << format_double(fit.fitted_order)
         << " r_squared=" << format_double(fit.r_squared) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asymptotics of sn(t|1-eps) and K(1-eps) checked against a high-precision oracle"};
  app.require_subcommand(1);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "error scan of an approximation against the oracle");
  scan_cmd->add_option("--eps", scan.eps, "small parameter, m = 1 - eps")->capture_default_str();
  scan_cmd->add_option("--approx", scan.approx, "approximation tag")->required();
  scan_cmd->add_option("--order", scan.order, "expansion order (outer 0..2, inner 1..2)");
  scan_cmd->add_option("--tmin", scan.t_min, "first grid point")->required();
  scan_cmd->add_option("--tmax", scan.t_max, "last grid point")->required();
  scan_cmd->add_option("--samples", scan.samples, "number of grid points")->capture_default_str();
  scan_cmd->add_option("--out", scan.out, "CSV path, '-' for stdout")->capture_default_str();

  KCompareArgs kcmp;
  auto* kcmp_cmd = app.add_subcommand("kcompare", "compare the K(1-eps) formulas with the oracle");
  kcmp_cmd->add_option("--eps-list", kcmp.eps_list, "comma-separated eps values")->delimiter(',');
  kcmp_cmd->add_option("--out", kcmp.out, "CSV path, '-' for stdout")->capture_default_str();

  OrderArgs ord;
  auto* ord_cmd = app.add_subcommand("order", "fit the convergence order over an eps ladder");
  ord_cmd->add_option("--approx", ord.approx, "approximation or K-formula tag")->required();
  ord_cmd->add_option("--order", ord.order, "expansion order");
  ord_cmd->add_option("--eps-list", ord.eps_list, "comma-separated, strictly decreasing")->delimiter(',');
  ord_cmd->add_option("--window", ord.window, "fixed or scaled")->capture_default_str();
  ord_cmd->add_option("--tmin", ord.t_min, "fixed window start")->capture_default_str();
  ord_cmd->add_option("--tmax", ord.t_max, "fixed window end")->capture_default_str();
  ord_cmd->add_option("--samples", ord.samples, "grid points per eps")->capture_default_str();
  ord_cmd->add_option("--out", ord.out, "CSV of the error ladder, '-' for stdout");

  auto* self_cmd = app.add_subcommand("selftest", "run every invariant check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }

  try {
    if (*scan_cmd) return cmd_scan(scan, out, err);
    if (*kcmp_cmd) return cmd_kcompare(kcmp, out, err);
    if (*ord_cmd) return cmd_order(ord, out, err);
    if (*self_cmd) return print_selftest(run_selftest(), out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  }
  return kExitInvalidArgs;
}

}  // namespace snasym
