#pragma once

// Asymptotic approximations of sn(t | 1 - eps) as eps -> 0+.
//
// Two coordinates are in play: the outer time t, anchored at the separatrix
// tanh t, and the stretched turning-point coordinate tau = t + log(eps)/2.
// All evaluators are total functions; trust regions are reported, not
// enforced, so that scans can probe where an approximation breaks down.

#include <string_view>
#include <utility>

#include "snasym/modulus.hpp"

namespace snasym {

/// Separatrix-anchored terms u_n = a_n(t) / cosh^2 t, n = 1, 2.
namespace outer {

double a1(double t);
double a2(double t);
/// a_n / cosh^2 t, rewritten so that it does not overflow for large |t|.
double u1(double t);
double u2(double t);
double du1(double t);
double du2(double t);

}  // namespace outer

struct TauCoord {
  static double from_t(double t, const ModulusSpec& spec);
  static double to_t(double tau, const ModulusSpec& spec);
};

/// Turning-point terms v_n(tau) with the matched constants c1, c2.
namespace inner {

inline constexpr double kC1 = -1.0 / 8.0;
double c2(const ModulusSpec& spec);

/// e^{2tau} c1/16 + e^{-2tau}/(4 c1) + 1/4; c1 defaults to the matched value.
double v1(double tau, double c1 = kC1);
double dv1(double tau, double c1 = kC1);
/// Printed second-order solution (assumes c1 = -1/8).
double v2(double tau, double c2);
double dv2(double tau, double c2);

/// tau where v1 and v1' vanish: 2 log 2.
double turning_point_tau();

}  // namespace inner

enum class ApproxKind {
  handbook_sn,
  outer,
  inner,
  composite_first_half,
  composite_second_half,
  full_period,
};

std::string_view to_string(ApproxKind kind);

/// tanh t + (eps/4)(sinh t cosh t - t) sech^2 t.
double handbook_sn(double t, const ModulusSpec& spec);

/// tanh t + eps u1 (+ eps^2 u2); order in 0..2.
double outer_eval(double t, const ModulusSpec& spec, int order);

/// (log(eps)/2, -log(eps)/2).
std::pair<double, double> validity_interval(const ModulusSpec& spec);

/// Which sign the eps-term of the inner expansion carries.
enum class InnerSign {
  /// u = 1 + eps v1 + eps^2 v2, consistent with the matching and the
  /// composite formula.
  plus,
  /// u = 1 - eps v1 + eps^2 (...) exactly as the final inner display reads.
  printed,
};

/// 1 + eps v1(tau) (+ eps^2 v2(tau)); order in 1..2.
double inner_eval(double tau, const ModulusSpec& spec, int order,
                  InnerSign sign = InnerSign::plus);

/// Second-order part of the common (overlap) expansion, tau << -1.
double overlap_second_order(double tau, const ModulusSpec& spec);
/// 1 + eps v1(tau) + eps^2 overlap_second_order(tau).
double overlap_eval(double tau, const ModulusSpec& spec);

/// tanh t + eps u1(t) + eps/4 - eps^2 e^{2t}/128.
double composite_first_half(double t, const ModulusSpec& spec);
/// -composite_first_half(t - T/2) with T = 4K(1 - eps).
double composite_second_half(double t, const ModulusSpec& spec);

/// Breakpoints of the piecewise full-period evaluator.
///
/// seam is the point in (K, 2K) where the two half-period composites agree;
/// t is reduced into [seam - T/2, seam + T/2) and the first-half composite
/// is used left of seam, the second-half composite right of it. Both
/// breakpoints (seam and seam - T/2) are then continuous up to rounding.
struct FullPeriodLayout {
  double period;
  double seam;
};
FullPeriodLayout full_period_layout(const ModulusSpec& spec);
double full_period_eval(double t, const ModulusSpec& spec, const FullPeriodLayout& layout);
double full_period_eval(double t, const ModulusSpec& spec);

/// Uniform dispatch. For ApproxKind::inner, t is converted to tau first.
/// order is used by outer (0..2) and inner (1..2), ignored otherwise.
double approx_eval(ApproxKind kind, double t, const ModulusSpec& spec, int order);

/// Interval of t where the approximation is expected to hold.
///   handbook_sn, outer:      (log(eps)/2, -log(eps)/2)
///   inner:                   |tau| < -log(eps)/2, i.e. t in (0, -log eps)
///   composite_first_half:    union of the two, (log(eps)/2, -log eps)
///   composite_second_half:   the above shifted by T/2
///   full_period:             everywhere
std::pair<double, double> trust_region(ApproxKind kind, const ModulusSpec& spec);

}  // namespace snasym
