#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "snasym/k_asymptotics.hpp"

namespace snasym {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Informational rows (printed-form discrepancies) never fail the run.
  bool report_only = false;
};

/// Tables the self-test reads; tests swap in corrupted copies.
struct SelftestFixture {
  KSeriesCoefficients<double> k_series = k_coefficient_table<double>();
  HandbookKCoefficients handbook = kHandbookK;
};

/// Runs every module invariant at eps in {0.1, 0.01}. Deterministic.
std::vector<CheckResult> run_selftest(const SelftestFixture& fixture = {});

/// Prints one line per check and returns 0 when all non-report checks pass,
/// 3 otherwise.
int print_selftest(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace snasym
