#pragma once

// Approximations of K(1 - eps) as eps -> 0:
//   * the asymptotic series through eps^4 (exact rational/log 2 coefficients),
//   * the five-term handbook polynomial fit (A&S 17.3.34),
//   * the small-mu route I0 + mu a1 J1 + ... + mu^4 a4 J4.

#include <array>
#include <cmath>
#include <concepts>
#include <numbers>
#include <stdexcept>

#include "snasym/modulus.hpp"
#include "snasym/oracle.hpp"

namespace snasym {

inline constexpr int kSeriesTerms = 5;

/// K(1 - eps) ~ sum_k (const_part[k] - log_coeff[k] log eps) eps^k.
template <std::floating_point Real>
struct KSeriesCoefficients {
  std::array<Real, kSeriesTerms> const_part;
  std::array<Real, kSeriesTerms> log_coeff;
};

namespace detail {

// const_part[k] = (p + q log 2) / d, log_coeff[k] = n / d2.
struct ExactConstPart {
  long long p;
  long long q;
  long long d;
};
inline constexpr std::array<ExactConstPart, kSeriesTerms> kConstParts{{
    {0, 2, 1},
    {-1, 2, 4},
    {-21, 36, 128},
    {-185, 300, 1536},
    {-18655, 29400, 196608},
}};
struct Rational {
  long long n;
  long long d;
};
inline constexpr std::array<Rational, kSeriesTerms> kLogCoeffs{{
    {1, 2},
    {1, 8},
    {9, 128},
    {25, 512},
    {1225, 32768},
}};

}  // namespace detail

template <std::floating_point Real = double>
KSeriesCoefficients<Real> k_coefficient_table() {
  KSeriesCoefficients<Real> out{};
  const Real ln2 = std::numbers::ln2_v<Real>;
  for (int k = 0; k < kSeriesTerms; ++k) {
    const auto& c = detail::kConstParts[k];
    out.const_part[k] = (Real(c.p) + Real(c.q) * ln2) / Real(c.d);
    out.log_coeff[k] = Real(detail::kLogCoeffs[k].n) / Real(detail::kLogCoeffs[k].d);
  }
  return out;
}

/// The same series as published in decimal form, (constant, log coefficient)
/// per power of eps. Kept for the fidelity check against the exact table.
inline constexpr std::array<std::array<double, 2>, kSeriesTerms> kPublishedDecimalSeries{{
    {1.386294361119891, 0.5},
    {0.09657359027997264, 0.125},
    {0.03088514453248459, 0.0703125},
    {0.01493760036978098, 0.048828125},
    {0.00876631219717606, 0.037384033203125},
}};

/// A&S 17.3.34: K = sum a[k] eps^k + (sum b[k] eps^k) log(1/eps), |err| < 2e-8.
struct HandbookKCoefficients {
  std::array<double, kSeriesTerms> a;
  std::array<double, kSeriesTerms> b;
  double err_bound;
};

inline constexpr HandbookKCoefficients kHandbookK{
    {1.38629436112, 0.09666344259, 0.03590092383, 0.03742563713, 0.01451196212},
    {0.5, 0.12498593597, 0.06880248576, 0.03328355346, 0.00441787012},
    2e-8,
};

/// Leading constant as it appears in some reprints of 17.3.34 (digits
/// transposed). Using it shifts every value by ~3.35e-4.
inline constexpr double kMisprintedHandbookA0 = 1.38662943;

/// (2k-1)!!/(2k)!! for k = 1..4; index 0 holds the k = 0 weight 1.
inline constexpr std::array<double, kSeriesTerms> kBinomialWeights{1.0, 1.0 / 2, 3.0 / 8, 5.0 / 16,
                                                                   35.0 / 128};

template <std::floating_point Real>
Real k_asymptotic(const Modulus<Real>& spec, int order,
                  const KSeriesCoefficients<Real>& coeffs = k_coefficient_table<Real>()) {
  if (order < 0 || order >= kSeriesTerms) throw std::invalid_argument("order must be in 0..4");
  if (spec.degenerate()) throw DegenerateModulus("log(eps) diverges");
  if (spec.eps() >= 1) throw std::invalid_argument("series anchored at eps -> 0 requires eps < 1");

  const Real eps = spec.eps();
  const Real log_eps = std::log(eps);
  Real sum = 0;
  Real power = 1;
  for (int k = 0; k <= order; ++k) {
    sum += (coeffs.const_part[k] - coeffs.log_coeff[k] * log_eps) * power;
    power *= eps;
  }
  return sum;
}

template <std::floating_point Real>
Real k_handbook(const Modulus<Real>& spec, const HandbookKCoefficients& coeffs = kHandbookK) {
  if (spec.degenerate()) throw DegenerateModulus("log(1/eps) diverges");
  const Real eps = spec.eps();
  Real poly_a = 0;
  Real poly_b = 0;
  for (int k = kSeriesTerms - 1; k >= 0; --k) {
    poly_a = poly_a * eps + Real(coeffs.a[k]);
    poly_b = poly_b * eps + Real(coeffs.b[k]);
  }
  return poly_a - poly_b * std::log(eps);
}

/// Closed form of the k = 0 weak-singularity integral,
///   sqrt(4-2mu) log(mu)/(2mu-4) - log(-mu + 2 sqrt(4-2mu) + 4) sqrt(4-2mu)/(2mu-4),
/// evaluated as (log(4 - mu + 2 sqrt(4-2mu)) - log mu) / sqrt(4-2mu).
template <std::floating_point Real>
Real i0_closed_form(Real mu) {
  if (!(mu >= Real(1e-300) && mu <= 1)) throw std::invalid_argument("mu must lie in [1e-300, 1]");
  const Real root = std::sqrt(4 - 2 * mu);
  return (std::log(4 - mu + 2 * root) - std::log(mu)) / root;
}

/// K(1 - eps) ~ I0 + sum_{k=1..4} mu^k a_k J_k(mu), valid for mu < 1/2.
template <std::floating_point Real>
Real k_mu_series(const Modulus<Real>& spec) {
  if (spec.degenerate()) throw DegenerateModulus("mu = 0");
  const Real mu = spec.mu();
  if (!(mu < Real(0.5))) throw std::invalid_argument("k_mu_series requires mu < 0.5");
  Real sum = 0;
  Real power = mu;
  for (int k = 1; k < kSeriesTerms; ++k) {
    sum += power * Real(kBinomialWeights[k]) * quad_weak_singularity(k, spec);
    power *= mu;
  }
  return i0_closed_form(mu) + sum;
}

}  // namespace snasym
