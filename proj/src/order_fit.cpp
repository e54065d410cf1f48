#include "snasym/order_fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <tuple>

#include "snasym/k_asymptotics.hpp"
#include "snasym/oracle.hpp"
#include "snasym/scan.hpp"

namespace snasym {

OrderFit fit_order(std::span<const double> eps_list, std::span<const double> max_errs) {
  if (eps_list.size() != max_errs.size()) throw std::invalid_argument("ladder size mismatch");
  if (eps_list.size() < 2) throw std::invalid_argument("need at least two ladder points");
  const auto n = static_cast<double>(eps_list.size());
  if (std::all_of(max_errs.begin(), max_errs.end(), [&](double e) { return e == max_errs[0]; }))
    throw FlatErrorLadder();

  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0) || !(max_errs[i] > 0))
      throw std::invalid_argument("order fit needs positive eps and errors (got error " +
                                  std::to_string(max_errs[i]) + ")");
    sx += std::log(eps_list[i]);
    sy += std::log(max_errs[i]);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    const double dx = std::log(eps_list[i]) - mx;
    const double dy = std::log(max_errs[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("eps ladder has no spread");
  if (syy == 0) throw FlatErrorLadder();

  OrderFit fit;
  fit.eps_list.assign(eps_list.begin(), eps_list.end());
  fit.max_errs.assign(max_errs.begin(), max_errs.end());
  fit.fitted_order = sxy / sxx;
  const double ss_res = syy - sxy * sxy / sxx;
  fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
  return fit;
}

long double k_formula_error(KFormula formula, int order, long double eps) {
  const ModulusSpecX spec(eps);
  const long double oracle = complete_k(spec);
  switch (formula) {
    case KFormula::asymptotic: return std::abs(k_asymptotic(spec, order) - oracle);
    case KFormula::handbook: return std::abs(k_handbook(spec) - oracle);
    case KFormula::mu_series: return std::abs(k_mu_series(spec) - oracle);
  }
  throw std::invalid_argument("unknown K formula");
}

OrderFit measure_order(const OrderTarget& target, int order, std::span<const double> eps_list,
                       WindowPolicy window, double t_min, double t_max, int samples) {
  if (eps_list.size() < 3) throw std::invalid_argument("--eps-list needs at least 3 values");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0 && eps_list[i] < 1))
      throw std::invalid_argument("--eps-list values must lie in (0, 1)");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("--eps-list must be strictly decreasing");
  }

  std::vector<double> errs;
  errs.reserve(eps_list.size());
  for (double e : eps_list) {
    if (const auto* formula = std::get_if<KFormula>(&target)) {
      errs.push_back(static_cast<double>(k_formula_error(*formula, order, e)));
      continue;
    }
    const auto kind = std::get<ApproxKind>(target);
    const ModulusSpec spec(e);
    double lo = t_min;
    double hi = t_max;
    if (window == WindowPolicy::scaled) {
      if (kind == ApproxKind::full_period) {
        lo = 0;
        hi = period(spec).full;
      } else {
        std::tie(lo, hi) = trust_region(kind, spec);
      }
    }
    errs.push_back(max_abs_error(kind, order, spec, lo, hi, samples));
  }
  return fit_order(eps_list, errs);
}

}  // namespace snasym
