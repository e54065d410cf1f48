#pragma once

// Error scans of an approximation against the oracle on a uniform t-grid.
//
// evaluate_rows_serial is the reference kernel; evaluate_rows is the OpenMP
// version used by the CLI. Both produce bit-identical rows because every row
// is a pure function of its grid point.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snasym/modulus.hpp"
#include "snasym/sn_asymptotics.hpp"

namespace snasym {

struct ScanConfig {
  double eps = 0.01;
  ApproxKind kind = ApproxKind::composite_first_half;
  int order = 2;
  double t_min = 0.0;
  double t_max = 1.0;
  int samples = 2;
  std::string output_path = "-";
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ScanConfig& config);

struct ScanRow {
  double t;
  double oracle;
  double approx;
  double abs_err;
  double rel_err;
};

inline constexpr double kRelErrFloor = 1e-3;

ScanRow make_row(double t, double oracle, double approx);

struct ScanSummary {
  double max_abs_err = 0.0;
  double argmax_t = 0.0;
  bool trust_exceeded = false;
  std::pair<double, double> trust{};
};

struct ScanReport {
  ScanConfig config;
  std::vector<ScanRow> rows;
  ScanSummary summary;
};

/// Closed grid: samples points, first == t_min, last == t_max.
std::vector<double> scan_grid(double t_min, double t_max, int samples);

std::vector<ScanRow> evaluate_rows_serial(const ScanConfig& config);
std::vector<ScanRow> evaluate_rows(const ScanConfig& config);

ScanSummary summarize(std::span<const ScanRow> rows, const ScanConfig& config);

/// validate + evaluate_rows + summarize.
ScanReport run_scan(const ScanConfig& config);

/// Max |approx - oracle| over a closed grid; parallel.
double max_abs_error(ApproxKind kind, int order, const ModulusSpec& spec, double t_min,
                     double t_max, int samples);

struct KCompareRow {
  double eps;
  double k_oracle;
  double k_handbook;
  double k_asym4;
  double k_mu_series;  // NaN where mu >= 1/2
  double res_handbook;
  double res_asym4;
  double res_mu_series;
};

/// All K values are computed in extended precision and rounded once.
std::vector<KCompareRow> k_compare(std::span<const double> eps_grid);

}  // namespace snasym
