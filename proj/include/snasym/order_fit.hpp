#pragma once

#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "snasym/sn_asymptotics.hpp"

namespace snasym {

/// Least-squares slope of log(max_err) against log(eps).
struct OrderFit {
  std::vector<double> eps_list;
  std::vector<double> max_errs;
  double fitted_order = 0.0;
  double r_squared = 0.0;
};

class FlatErrorLadder : public std::runtime_error {
 public:
  FlatErrorLadder() : std::runtime_error("flat error ladder: errors do not vary with eps") {}
};

OrderFit fit_order(std::span<const double> eps_list, std::span<const double> max_errs);

enum class KFormula { asymptotic, handbook, mu_series };

/// |formula - K_oracle| evaluated in extended precision. order applies to
/// KFormula::asymptotic only.
long double k_formula_error(KFormula formula, int order, long double eps);

enum class WindowPolicy {
  fixed,   // [t_min, t_max] for every eps
  scaled,  // the kind's trust_region(eps); one period [0, T] for full_period
};

using OrderTarget = std::variant<ApproxKind, KFormula>;

inline constexpr double kDefaultEpsLadder[] = {0.1, 0.03, 0.01, 0.003, 0.001};

/// Measures the error ladder for target and fits its order. eps_list needs at
/// least three strictly decreasing values in (0, 1).
OrderFit measure_order(const OrderTarget& target, int order, std::span<const double> eps_list,
                       WindowPolicy window, double t_min, double t_max, int samples);

}  // namespace snasym
