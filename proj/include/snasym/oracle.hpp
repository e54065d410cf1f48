#pragma once

// Reference evaluation of K(m), sn/cn/dn and the weakly singular integrals
// that appear in the small-mu expansion of K. Everything here is templated on
// the floating type so that residuals of the asymptotic formulas can be
// measured below double-precision noise (long double on x86-64).

#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "snasym/modulus.hpp"

namespace snasym {

template <std::floating_point Real>
struct JacobiTriple {
  Real sn;
  Real cn;
  Real dn;
  Real t;
};

template <std::floating_point Real>
struct PeriodInfo {
  Real quarter;  // K(m)
  Real half;     // 2K
  Real full;     // 4K = T(eps)
};

class IntegrationFailure : public std::runtime_error {
 public:
  explicit IntegrationFailure(double reached_t)
      : std::runtime_error("integration failure: step size underflow at t = " +
                           std::to_string(reached_t)),
        reached_t_(reached_t) {}
  double reached_t() const { return reached_t_; }

 private:
  double reached_t_;
};

namespace detail {

template <std::floating_point Real>
Real agm(Real a, Real b) {
  // Quadratic convergence; the iteration count guard only matters for NaN.
  for (int i = 0; i < 64 && std::abs(a - b) > std::numeric_limits<Real>::epsilon() * a; ++i) {
    const Real an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  return (a + b) / 2;
}

}  // namespace detail

/// Complete elliptic integral of the first kind, K(m) = pi / (2 AGM(1, sqrt(1-m))).
template <std::floating_point Real>
Real complete_k(const Modulus<Real>& spec) {
  if (spec.degenerate()) throw DegenerateModulus("K(1) diverges");
  return std::numbers::pi_v<Real> / (2 * detail::agm(Real(1), std::sqrt(spec.eps())));
}

template <std::floating_point Real>
PeriodInfo<Real> period(const Modulus<Real>& spec) {
  const Real k = complete_k(spec);
  return {k, 2 * k, 4 * k};
}

/// sn, cn, dn by descending Landen (AGM) recursion.
///
/// The argument is reduced to [0, K] with the quarter-period symmetries
/// before the recursion; dn is taken from dn^2 = eps + m cn^2, which stays
/// accurate at the turning point where 1 - m sn^2 cancels.
template <std::floating_point Real>
JacobiTriple<Real> jacobi_sn(Real t, const Modulus<Real>& spec) {
  if (!std::isfinite(t)) throw std::invalid_argument("t must be finite");
  if (spec.degenerate()) {
    const Real sech = 1 / std::cosh(t);
    return {std::tanh(t), sech, sech, t};
  }

  const Real k = complete_k(spec);
  Real r = std::fmod(t, 4 * k);
  if (r < 0) r += 4 * k;
  Real sn_sign = 1;
  Real cn_sign = 1;
  if (r >= 2 * k) {  // sn(u + 2K) = -sn(u), cn(u + 2K) = -cn(u)
    r -= 2 * k;
    sn_sign = -1;
    cn_sign = -1;
  }
  if (r > k) {  // sn(2K - u) = sn(u), cn(2K - u) = -cn(u)
    r = 2 * k - r;
    cn_sign = -cn_sign;
  }

  constexpr int kMaxLevels = 32;
  std::array<Real, kMaxLevels> a{};
  std::array<Real, kMaxLevels> c{};
  a[0] = 1;
  c[0] = std::sqrt(spec.m());
  Real b = std::sqrt(spec.eps());
  int n = 0;
  const Real tol = std::numeric_limits<Real>::epsilon();
  while (std::abs(c[n]) > tol * a[n] && n + 1 < kMaxLevels) {
    a[n + 1] = (a[n] + b) / 2;
    c[n + 1] = c[n] * c[n] / (4 * a[n + 1]);
    b = std::sqrt(a[n] * b);
    ++n;
  }

  Real phi = std::ldexp(a[n] * r, n);
  for (int i = n; i > 0; --i) phi = (phi + std::asin(c[i] / a[i] * std::sin(phi))) / 2;

  const Real sn = std::sin(phi);
  const Real cn = std::cos(phi);
  const Real dn = std::sqrt(spec.eps() + spec.m() * cn * cn);
  return {sn_sign * sn, cn_sign * cn, dn, t};
}

struct OdeOptions {
  long double abs_tol = 1e-16L;
  long double rel_tol = 1e-16L;
  long double initial_step = 1e-2L;
  /// Steps below this size are treated as underflow.
  long double min_step = 1e-17L;
};

/// sn(t|m) by adaptive Runge-Kutta-Fehlberg 7(8) on
///   u'' = -(2 - eps) u + 2 (1 - eps) u^3,  u(0) = 0, u'(0) = 1,
/// the differentiated form of (u')^2 = (1 - u^2)(1 - m u^2). Shares no code
/// with jacobi_sn. The horizon is limited to |t| <= 2T.
///
/// Integration runs in long double: near the separatrix each pass by the
/// saddle amplifies phase error by roughly 1/eps, and a 1e-13 local
/// tolerance in double leaves ~1e-8 global error at eps = 0.01.
template <std::floating_point Real>
Real ode_cross_check(Real t_in, const Modulus<Real>& spec, const OdeOptions& opts = {}) {
  namespace odeint = boost::numeric::odeint;
  using Work = long double;
  using State = std::array<Work, 2>;

  if (!std::isfinite(t_in)) throw std::invalid_argument("t must be finite");
  if (!spec.degenerate() && std::abs(t_in) > 2 * period(spec).full)
    throw std::invalid_argument("ode_cross_check horizon is |t| <= 2T");
  if (t_in == 0) return 0;

  const Work t = t_in;
  const Work lin = 2 - Work(spec.eps());
  const Work cub = 2 * Work(spec.m());
  auto rhs = [lin, cub](const State& x, State& dxdt, Work /*t*/) {
    dxdt[0] = x[1];
    dxdt[1] = -lin * x[0] + cub * x[0] * x[0] * x[0];
  };

  auto stepper = odeint::make_controlled(opts.abs_tol, opts.rel_tol,
                                         odeint::runge_kutta_fehlberg78<State, Work>());
  State x{0, 1};
  Work time = 0;
  const Work dir = t > 0 ? 1 : -1;
  Work dt = dir * opts.initial_step;
  while (time != t) {
    if (dir * (time + dt - t) > 0) dt = t - time;
    const Work before = time;
    const auto result = stepper.try_step(rhs, x, time, dt);
    if (result == odeint::fail && std::abs(dt) < opts.min_step)
      throw IntegrationFailure(static_cast<double>(before));
    if (result == odeint::success &&
        dir * (t - time) < std::abs(t) * std::numeric_limits<Work>::epsilon())
      time = t;
  }
  return static_cast<Real>(x[0]);
}

/// Integral over y in [0, 1] of
///   y^k / ((y + 1)^(k + 1) sqrt((1 - y)(1 - (1 - mu) y)))
/// for k in 0..4. The substitution y = 1 - s^2 removes the endpoint
/// singularity; the remaining peak of width sqrt(mu) at s = 0 is isolated by
/// splitting there before adaptive Gauss-Kronrod.
template <std::floating_point Real>
Real quad_weak_singularity(int k, const Modulus<Real>& spec) {
  if (k < 0 || k > 4) throw std::invalid_argument("k must be in 0..4");
  if (spec.degenerate()) throw DegenerateModulus("weak-singularity integral diverges at mu = 0");

  const Real mu = spec.mu();
  auto integrand = [k, mu](Real s) {
    const Real s2 = s * s;
    const Real y = 1 - s2;
    const Real ratio = y / (2 - s2);  // y / (1 + y)
    Real num = 1;
    for (int i = 0; i < k; ++i) num *= ratio;
    return 2 * num / ((2 - s2) * std::sqrt(mu + (1 - mu) * s2));
  };

  // The G7/K15 difference is a pessimistic error estimate; results reach
  // rounding level long before it drops below a few ulp, so the request is
  // kept well above epsilon to avoid recursing on noise.
  using Rule = boost::math::quadrature::gauss_kronrod<Real, 15>;
  const Real tol = 1000 * std::numeric_limits<Real>::epsilon();
  constexpr unsigned kDepth = 12;
  const Real split = std::sqrt(mu);
  if (split >= 1) return Rule::integrate(integrand, Real(0), Real(1), kDepth, tol);
  return Rule::integrate(integrand, Real(0), split, kDepth, tol) +
         Rule::integrate(integrand, split, Real(1), kDepth, tol);
}

}  // namespace snasym
