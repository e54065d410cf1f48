#include "snasym/sn_asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "snasym/oracle.hpp"

namespace snasym {

namespace {

double sech2(double t) {
  const double s = 1.0 / std::cosh(t);
  return s * s;
}

void require_order(int order, int lo, int hi, const char* what) {
  if (order < lo || order > hi) throw std::invalid_argument(what);
}

}  // namespace

namespace outer {

double a1(double t) { return std::sinh(2 * t) / 8 - t / 4; }

double a2(double t) {
  return -(t * t / 16) * std::tanh(t) - std::sinh(4 * t) / 256 + 5 * std::sinh(2 * t) / 64 -
         9 * t / 64;
}

// sinh(2t) / cosh^2 t = 2 tanh t,  sinh(4t) / cosh^2 t = 4 tanh t cosh 2t.
double u1(double t) { return (std::tanh(t) - t * sech2(t)) / 4; }

double u2(double t) {
  const double th = std::tanh(t);
  const double s2 = sech2(t);
  return -(t * t / 16) * th * s2 - th * std::cosh(2 * t) / 64 + 5 * th / 32 - 9 * t * s2 / 64;
}

double du1(double t) { return t * sech2(t) * std::tanh(t) / 2; }

double du2(double t) {
  const double th = std::tanh(t);
  const double s2 = sech2(t);
  const double d_th_s2 = s2 * s2 - 2 * th * th * s2;  // (tanh sech^2)'
  return -(2 * t * th * s2 + t * t * d_th_s2) / 16 -
         (2 - s2 + 2 * th * std::sinh(2 * t)) / 64 + 5 * s2 / 32 -
         9 * (s2 - 2 * t * s2 * th) / 64;
}

}  // namespace outer

double TauCoord::from_t(double t, const ModulusSpec& spec) { return t + std::log(spec.eps()) / 2; }
double TauCoord::to_t(double tau, const ModulusSpec& spec) { return tau - std::log(spec.eps()) / 2; }

namespace inner {

double c2(const ModulusSpec& spec) { return -(std::log(spec.eps()) + 5) / 512; }

double v1(double tau, double c1) {
  return std::exp(2 * tau) * c1 / 16 + std::exp(-2 * tau) / (4 * c1) + 0.25;
}

double dv1(double tau, double c1) {
  return std::exp(2 * tau) * c1 / 8 - std::exp(-2 * tau) / (2 * c1);
}

double v2(double tau, double c2) {
  const double ep = std::exp(2 * tau);
  const double em = std::exp(-2 * tau);
  return ep * c2 - 256 * em * c2 + ep * ep / 32768 + tau * ep / 256 - tau * em - 3 * em +
         2 * em * em + 11.0 / 64;
}

double dv2(double tau, double c2) {
  const double ep = std::exp(2 * tau);
  const double em = std::exp(-2 * tau);
  return 2 * ep * c2 + 512 * em * c2 + ep * ep / 8192 + (1 + 2 * tau) * ep / 256 -
         (1 - 2 * tau) * em + 6 * em - 8 * em * em;
}

double turning_point_tau() { return 2 * std::numbers::ln2; }

}  // namespace inner

std::string_view to_string(ApproxKind kind) {
  switch (kind) {
    case ApproxKind::handbook_sn: return "handbook-sn";
    case ApproxKind::outer: return "outer";
    case ApproxKind::inner: return "inner";
    case ApproxKind::composite_first_half: return "composite";
    case ApproxKind::composite_second_half: return "composite-second-half";
    case ApproxKind::full_period: return "full-period";
  }
  return "unknown";
}

double handbook_sn(double t, const ModulusSpec& spec) {
  // (sinh t cosh t - t) sech^2 t = tanh t - t sech^2 t
  const double th = std::tanh(t);
  return th + spec.eps() / 4 * (th - t * sech2(t));
}

double outer_eval(double t, const ModulusSpec& spec, int order) {
  require_order(order, 0, 2, "outer order must be in 0..2");
  const double eps = spec.eps();
  double u = std::tanh(t);
  if (order >= 1) u += eps * outer::u1(t);
  if (order >= 2) u += eps * eps * outer::u2(t);
  return u;
}

std::pair<double, double> validity_interval(const ModulusSpec& spec) {
  const double half_log = std::log(spec.eps()) / 2;
  return {half_log, -half_log};
}

double inner_eval(double tau, const ModulusSpec& spec, int order, InnerSign sign) {
  require_order(order, 1, 2, "inner order must be in 1..2");
  const double eps = spec.eps();
  const double first = inner::v1(tau);
  if (sign == InnerSign::plus) {
    double u = 1 + eps * first;
    if (order == 2) u += eps * eps * inner::v2(tau, inner::c2(spec));
    return u;
  }

  double u = 1 - eps * first;
  if (order == 2) {
    const double ep = std::exp(2 * tau);
    const double em = std::exp(-2 * tau);
    const double shift = std::log(eps) + 5;
    u += eps * eps *
         (-ep * shift / 512 - em * shift / 2 + ep * ep / 32768 + tau * ep / 256 - tau * em -
          3 * em + 2 * em * em + 11.0 / 64);
  }
  return u;
}

double overlap_second_order(double tau, const ModulusSpec& spec) {
  const double ep = std::exp(2 * tau);
  const double em = std::exp(-2 * tau);
  const double log_eps = std::log(spec.eps());
  return tau * ep / 256 - log_eps * ep / 512 - 5 * ep / 512 - tau * em + log_eps * em / 2 -
         em / 2 + 2 * em * em + 11.0 / 64;
}

double overlap_eval(double tau, const ModulusSpec& spec) {
  const double eps = spec.eps();
  return 1 + eps * inner::v1(tau) + eps * eps * overlap_second_order(tau, spec);
}

double composite_first_half(double t, const ModulusSpec& spec) {
  const double eps = spec.eps();
  return std::tanh(t) + eps * outer::u1(t) + eps / 4 - eps * eps * std::exp(2 * t) / 128;
}

double composite_second_half(double t, const ModulusSpec& spec) {
  return -composite_first_half(t - period(spec).half, spec);
}

FullPeriodLayout full_period_layout(const ModulusSpec& spec) {
  if (spec.degenerate()) {
    const double inf = std::numeric_limits<double>::infinity();
    return {inf, inf};
  }
  const auto p = period(spec);
  auto mismatch = [&](double s) {
    return composite_first_half(s, spec) + composite_first_half(s - p.half, spec);
  };

  double lo = p.quarter;
  double hi = p.half;
  double f_lo = mismatch(lo);
  if (!(f_lo > 0 && mismatch(hi) < 0)) return {p.full, 3 * p.full / 8};
  for (int i = 0; i < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * hi; ++i) {
    const double mid = lo + (hi - lo) / 2;
    const double f_mid = mismatch(mid);
    if (f_mid == 0) return {p.full, mid};
    if ((f_mid > 0) == (f_lo > 0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {p.full, lo + (hi - lo) / 2};
}

double full_period_eval(double t, const ModulusSpec& spec, const FullPeriodLayout& layout) {
  if (!std::isfinite(layout.period)) return composite_first_half(t, spec);
  const double half = layout.period / 2;
  const double lo = layout.seam - half;
  double r = t - layout.period * std::floor((t - lo) / layout.period);
  if (r < lo) r += layout.period;
  if (r >= layout.seam + half) r -= layout.period;
  if (r < layout.seam) return composite_first_half(r, spec);
  return -composite_first_half(r - half, spec);
}

double full_period_eval(double t, const ModulusSpec& spec) {
  return full_period_eval(t, spec, full_period_layout(spec));
}

double approx_eval(ApproxKind kind, double t, const ModulusSpec& spec, int order) {
  switch (kind) {
    case ApproxKind::handbook_sn: return handbook_sn(t, spec);
    case ApproxKind::outer: return outer_eval(t, spec, order);
    case ApproxKind::inner: return inner_eval(TauCoord::from_t(t, spec), spec, order);
    case ApproxKind::composite_first_half: return composite_first_half(t, spec);
    case ApproxKind::composite_second_half: return composite_second_half(t, spec);
    case ApproxKind::full_period: return full_period_eval(t, spec);
  }
  throw std::invalid_argument("unknown approximation kind");
}

std::pair<double, double> trust_region(ApproxKind kind, const ModulusSpec& spec) {
  const double half_log = std::log(spec.eps()) / 2;  // <= 0
  switch (kind) {
    case ApproxKind::handbook_sn:
    case ApproxKind::outer: return {half_log, -half_log};
    case ApproxKind::inner: return {0.0, -2 * half_log};
    case ApproxKind::composite_first_half: return {half_log, -2 * half_log};
    case ApproxKind::composite_second_half: {
      const double shift = period(spec).half;
      return {half_log + shift, -2 * half_log + shift};
    }
    case ApproxKind::full_period: {
      const double inf = std::numeric_limits<double>::infinity();
      return {-inf, inf};
    }
  }
  throw std::invalid_argument("unknown approximation kind");
}

}  // namespace snasym
