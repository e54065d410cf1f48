#pragma once

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>

namespace snasym {

/// Thrown when an operation needs a finite period but the modulus sits on
/// the separatrix (eps == 0, m == 1).
class DegenerateModulus : public std::domain_error {
 public:
  explicit DegenerateModulus(const std::string& what)
      : std::domain_error("degenerate modulus: " + what) {}
};

/// Parameter of sn(t|m) near m = 1, stored three ways.
///
///   eps  the small parameter, in [0, 1]
///   m    = 1 - eps
///   mu   = 1 - sqrt(1 - eps), evaluated as eps / (1 + sqrt(m)) so that it
///        keeps full relative precision for tiny eps.
///
/// eps == 0 is representable (the separatrix); operations that need a
/// finite quarter period reject it with DegenerateModulus.
template <std::floating_point Real>
class Modulus {
 public:
  explicit Modulus(Real eps) : eps_(eps) {
    if (!(eps >= Real(0) && eps <= Real(1)))
      throw std::invalid_argument("eps must lie in [0, 1]");
    m_ = Real(1) - eps_;
    mu_ = eps_ / (Real(1) + std::sqrt(m_));
  }

  static Modulus from_mu(Real mu) {
    if (!(mu >= Real(0) && mu <= Real(1)))
      throw std::invalid_argument("mu must lie in [0, 1]");
    // 1 - (1 - mu)^2 without cancellation.
    return Modulus(mu * (Real(2) - mu));
  }

  Real eps() const { return eps_; }
  Real m() const { return m_; }
  Real mu() const { return mu_; }
  bool degenerate() const { return eps_ == Real(0); }

 private:
  Real eps_;
  Real m_;
  Real mu_;
};

using ModulusSpec = Modulus<double>;
using ModulusSpecX = Modulus<long double>;

}  // namespace snasym
