#include "snasym/scan.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>

#include "snasym/k_asymptotics.hpp"
#include "snasym/oracle.hpp"

namespace snasym {

namespace {

// Precomputes per-eps quantities (period, seam) once per scan.
std::function<double(double)> make_evaluator(const ScanConfig& c) {
  const ModulusSpec spec(c.eps);
  switch (c.kind) {
    case ApproxKind::composite_second_half: {
      const double half = period(spec).half;
      return [spec, half](double t) { return -composite_first_half(t - half, spec); };
    }
    case ApproxKind::full_period: {
      const auto layout = full_period_layout(spec);
      return [spec, layout](double t) { return full_period_eval(t, spec, layout); };
    }
    default: {
      const auto kind = c.kind;
      const int order = c.order;
      return [spec, kind, order](double t) { return approx_eval(kind, t, spec, order); };
    }
  }
}

}  // namespace

void validate(const ScanConfig& c) {
  if (!(c.eps > 0 && c.eps <= 1)) throw std::invalid_argument("--eps must lie in (0, 1]");
  if (!std::isfinite(c.t_min) || !std::isfinite(c.t_max))
    throw std::invalid_argument("--tmin/--tmax must be finite");
  if (!(c.t_min < c.t_max)) throw std::invalid_argument("--tmin must be < --tmax");
  if (c.samples < 2) throw std::invalid_argument("--samples must be >= 2");
  if (c.kind == ApproxKind::outer && (c.order < 0 || c.order > 2))
    throw std::invalid_argument("--order for outer must be in 0..2");
  if (c.kind == ApproxKind::inner && (c.order < 1 || c.order > 2))
    throw std::invalid_argument("--order for inner must be in 1..2");
}

ScanRow make_row(double t, double oracle, double approx) {
  const double abs_err = std::abs(oracle - approx);
  return {t, oracle, approx, abs_err, abs_err / std::max(std::abs(oracle), kRelErrFloor)};
}

std::vector<double> scan_grid(double t_min, double t_max, int samples) {
  std::vector<double> grid(static_cast<std::size_t>(samples));
  const double step = (t_max - t_min) / (samples - 1);
  for (int i = 0; i < samples; ++i) grid[i] = t_min + i * step;
  grid.back() = t_max;
  return grid;
}

std::vector<ScanRow> evaluate_rows_serial(const ScanConfig& config) {
  const ModulusSpec spec(config.eps);
  const auto approx = make_evaluator(config);
  std::vector<ScanRow> rows;
  rows.reserve(config.samples);
  for (double t : scan_grid(config.t_min, config.t_max, config.samples))
    rows.push_back(make_row(t, jacobi_sn(t, spec).sn, approx(t)));
  return rows;
}

std::vector<ScanRow> evaluate_rows(const ScanConfig& config) {
  const ModulusSpec spec(config.eps);
  const auto approx = make_evaluator(config);
  const auto grid = scan_grid(config.t_min, config.t_max, config.samples);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<ScanRow> rows(grid.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double t = grid[i];
    rows[i] = make_row(t, jacobi_sn(t, spec).sn, approx(t));
  }
  return rows;
}

ScanSummary summarize(std::span<const ScanRow> rows, const ScanConfig& config) {
  ScanSummary s;
  s.trust = trust_region(config.kind, ModulusSpec(config.eps));
  bool first = true;
  for (const auto& row : rows) {
    if (first || row.abs_err > s.max_abs_err) {
      s.max_abs_err = row.abs_err;
      s.argmax_t = row.t;
      first = false;
    }
    if (!(row.t > s.trust.first && row.t < s.trust.second)) s.trust_exceeded = true;
  }
  return s;
}

ScanReport run_scan(const ScanConfig& config) {
  validate(config);
  ScanReport report{config, evaluate_rows(config), {}};
  report.summary = summarize(report.rows, config);
  return report;
}

double max_abs_error(ApproxKind kind, int order, const ModulusSpec& spec, double t_min,
                     double t_max, int samples) {
  ScanConfig c;
  c.eps = spec.eps();
  c.kind = kind;
  c.order = order;
  c.t_min = t_min;
  c.t_max = t_max;
  c.samples = samples;
  validate(c);
  const auto rows = evaluate_rows(c);
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.abs_err);
  return worst;
}

std::vector<KCompareRow> k_compare(std::span<const double> eps_grid) {
  std::vector<KCompareRow> out;
  out.reserve(eps_grid.size());
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (double e : eps_grid) {
    if (!(e > 0 && e < 1)) throw std::invalid_argument("kcompare eps values must lie in (0, 1)");
    const ModulusSpecX spec(static_cast<long double>(e));
    const long double oracle = complete_k(spec);
    const long double handbook = k_handbook(spec);
    const long double asym = k_asymptotic(spec, 4);
    const bool mu_ok = spec.mu() < 0.5L;
    const long double mu_series = mu_ok ? k_mu_series(spec) : 0.0L;
    out.push_back({
        e,
        static_cast<double>(oracle),
        static_cast<double>(handbook),
        static_cast<double>(asym),
        mu_ok ? static_cast<double>(mu_series) : nan,
        static_cast<double>(std::abs(handbook - oracle)),
        static_cast<double>(std::abs(asym - oracle)),
        mu_ok ? static_cast<double>(std::abs(mu_series - oracle)) : nan,
    });
  }
  return out;
}

}  // namespace snasym
