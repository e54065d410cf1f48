#include "snasym/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <utility>

#include <boost/math/tools/minima.hpp>

#include "snasym/oracle.hpp"
#include "snasym/scan.hpp"
#include "snasym/sn_asymptotics.hpp"

namespace snasym {

namespace {

constexpr double kLadder[] = {0.1, 0.01};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

template <class F>
double max_over(double lo, double hi, int n, F&& f) {
  double worst = 0;
  for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(f(lo + (hi - lo) * i / n)));
  return worst;
}

CheckResult check(std::string name, bool pass, std::string detail) {
  return {std::move(name), pass, std::move(detail), false};
}

CheckResult report(std::string name, std::string detail) {
  return {std::move(name), true, std::move(detail), true};
}

void k_checks(const SelftestFixture& fx, std::vector<CheckResult>& out) {
  double worst_const = 0;
  bool logs_exact = true;
  for (int k = 0; k < kSeriesTerms; ++k) {
    worst_const = std::max(worst_const,
                           std::abs(fx.k_series.const_part[k] - kPublishedDecimalSeries[k][0]));
    logs_exact = logs_exact && fx.k_series.log_coeff[k] == kPublishedDecimalSeries[k][1];
  }
  out.push_back(check("k.coefficients_exact_vs_decimal", worst_const <= 1e-15 && logs_exact,
                      "max const diff " + sci(worst_const) +
                          (logs_exact ? ", log coefficients exact" : ", log coefficient mismatch")));

  double worst_handbook = 0;
  for (double e : {1.0, 0.9, 0.5, 0.2, 0.1, 0.01, 0.001, 1e-6}) {
    const ModulusSpec s(e);
    worst_handbook = std::max(worst_handbook, std::abs(k_handbook(s, fx.handbook) - complete_k(s)));
  }
  out.push_back(check("k.handbook_within_2e-8", worst_handbook < fx.handbook.err_bound,
                      "max |K_handbook - K| = " + sci(worst_handbook)));

  double best_asym_far = 1;
  for (double e : {0.2, 0.5, 0.9}) {
    const ModulusSpec s(e);
    best_asym_far = std::min(best_asym_far, std::abs(k_asymptotic(s, 4, fx.k_series) - complete_k(s)));
  }
  out.push_back(check("k.asymptotic_not_uniform_for_eps>=0.2", best_asym_far > 2e-8,
                      "min |K_asym4 - K| over {0.2,0.5,0.9} = " + sci(best_asym_far)));

  // Residual ladder in extended precision so eps = 1e-3 is above noise.
  bool ordered = true;
  std::string ladder;
  // Untouched tables use the exact extended-precision coefficients; a
  // modified fixture is promoted as is.
  const bool pristine_series = fx.k_series.const_part == k_coefficient_table<double>().const_part &&
                               fx.k_series.log_coeff == k_coefficient_table<double>().log_coeff;
  KSeriesCoefficients<long double> coeffs_x = k_coefficient_table<long double>();
  if (!pristine_series) {
    for (int k = 0; k < kSeriesTerms; ++k) {
      coeffs_x.const_part[k] = fx.k_series.const_part[k];
      coeffs_x.log_coeff[k] = fx.k_series.log_coeff[k];
    }
  }
  for (double e : {0.1, 0.01, 0.001}) {
    const ModulusSpecX s(e);
    const long double oracle = complete_k(s);
    long double prev = 1e300L;
    for (int n = 0; n < kSeriesTerms; ++n) {
      const long double r = std::abs(k_asymptotic(s, n, coeffs_x) - oracle);
      ordered = ordered && r <= prev;
      prev = r;
    }
    ladder += (ladder.empty() ? "" : ", ") + std::string("eps=") + sci(e) + " r4=" + sci(double(prev));
  }
  out.push_back(check("k.residual_nonincreasing_in_order", ordered, ladder));

  double worst_i0 = 0;
  for (double mu : {1e-6, 1e-4, 1e-2, 0.1, 0.5}) {
    worst_i0 = std::max(worst_i0,
                        std::abs(i0_closed_form(mu) - quad_weak_singularity(0, ModulusSpec::from_mu(mu))));
  }
  out.push_back(check("k.i0_closed_form_vs_quadrature", worst_i0 <= 1e-11, "max diff " + sci(worst_i0)));

  const ModulusSpec s01(0.01);
  const double mu_res = std::abs(k_mu_series(s01) - complete_k(s01));
  out.push_back(check("k.mu_series_eps=0.01", mu_res < 1e-8, "|K_mu - K| = " + sci(mu_res)));

  bool decreasing = true;
  double prev_k = 0;
  for (int i = 0; i <= 40; ++i) {
    const double k = complete_k(ModulusSpec(std::pow(10.0, -12.0 * i / 40)));  // m increasing
    decreasing = decreasing && k > prev_k;
    prev_k = k;
  }
  out.push_back(check("oracle.k_increasing_in_m", decreasing, "eps from 1 down to 1e-12"));
}

void oracle_checks(std::vector<CheckResult>& out) {
  for (double e : kLadder) {
    const ModulusSpec s(e);
    const auto p = period(s);
    const std::string tag = "eps=" + sci(e);

    double worst_pyth = 0, worst_dn = 0, worst_abs = 0;
    double worst_half = 0, worst_odd = 0, worst_rk = 0;
    for (int i = 0; i <= 200; ++i) {
      const double t = -p.full + 3 * p.full * i / 200;
      const auto j = jacobi_sn(t, s);
      worst_pyth = std::max(worst_pyth, std::abs(j.sn * j.sn + j.cn * j.cn - 1));
      worst_dn = std::max(worst_dn, std::abs(j.dn * j.dn + s.m() * j.sn * j.sn - 1));
      worst_abs = std::max(worst_abs, std::abs(j.sn) - 1);
      worst_half = std::max(worst_half, std::abs(jacobi_sn(t + p.half, s).sn + j.sn));
      worst_odd = std::max(worst_odd, std::abs(jacobi_sn(-t, s).sn + j.sn));
    }
    for (int i = 0; i <= 50; ++i) {
      const double t = p.full * i / 50;
      worst_rk = std::max(worst_rk, std::abs(jacobi_sn(t, s).sn - ode_cross_check(t, s)));
    }
    out.push_back(check("oracle.identities " + tag, worst_pyth <= 1e-12 && worst_dn <= 1e-12 && worst_abs <= 0,
                        "sn^2+cn^2 " + sci(worst_pyth) + ", dn^2+m sn^2 " + sci(worst_dn)));
    out.push_back(check("oracle.symmetries " + tag, worst_half <= 1e-10 && worst_odd <= 1e-10,
                        "half-period " + sci(worst_half) + ", odd " + sci(worst_odd)));
    out.push_back(check("oracle.agm_vs_rk " + tag, worst_rk <= 1e-9, "max diff " + sci(worst_rk)));

    auto neg_sn = [&s](double t) { return -jacobi_sn(t, s).sn; };
    const auto [t_star, f_star] =
        boost::math::tools::brent_find_minima(neg_sn, 0.5 * p.quarter, 1.5 * p.quarter, 40);
    const bool at_quarter = std::abs(-f_star - 1) <= 1e-10 && std::abs(t_star - p.quarter) <= 1e-6 * p.full;
    out.push_back(check("oracle.max_at_quarter_period " + tag, at_quarter,
                        "argmax - K = " + sci(t_star - p.quarter)));
  }
}

void outer_checks(std::vector<CheckResult>& out) {
  bool odd = outer::a1(0) == 0 && outer::a2(0) == 0 && outer::u1(0) == 0 && outer::u2(0) == 0;
  for (double e : kLadder) {
    const ModulusSpec s(e);
    for (int i = 0; i <= 100; ++i) {
      const double t = -6 + 12.0 * i / 100;
      for (int order = 0; order <= 2; ++order) odd = odd && outer_eval(-t, s, order) == -outer_eval(t, s, order);
      odd = odd && handbook_sn(-t, s) == -handbook_sn(t, s);
    }
  }
  out.push_back(check("outer.initial_conditions_and_oddness", odd, "a_n(0)=0, f(-t)=-f(t) exactly"));

  // The u1, u2 recurrences obtained from collecting eps and eps^2.
  const double rec = max_over(-3, 3, 120, [](double t) {
    const double th = std::tanh(t);
    const double s2 = 1 / (std::cosh(t) * std::cosh(t));
    const double r1 = 2 * s2 * outer::du1(t) + 4 * th * s2 * outer::u1(t) + th * th * th * th - th * th;
    const double u1 = outer::u1(t);
    const double r2 = 2 * s2 * outer::du2(t) + 4 * th * s2 * outer::u2(t) + outer::du1(t) * outer::du1(t) +
                      (2 - 6 * th * th) * u1 * u1 + (4 * th * th * th - 2 * th) * u1;
    return std::max(std::abs(r1), std::abs(r2));
  });
  out.push_back(check("outer.u1_u2_recurrences", rec <= 1e-12, "max residual " + sci(rec)));

  std::vector<double> consts;
  for (double e : kLadder) {
    const double m = 1 - e;
    const double res = max_over(-1, 1, 200, [e, m](double t) {
      const double u = std::tanh(t) + e * outer::u1(t) + e * e * outer::u2(t);
      const double du = 1 / (std::cosh(t) * std::cosh(t)) + e * outer::du1(t) + e * e * outer::du2(t);
      return du * du - (1 - u * u) * (1 - m * u * u);
    });
    consts.push_back(res / (e * e * e));
  }
  const double spread = consts[0] / consts[1];
  out.push_back(check("outer.equation_residual_C_eps3", spread > 0.5 && spread < 2,
                      "C on [-1,1]: " + sci(consts[0]) + " (eps=0.1), " + sci(consts[1]) + " (eps=0.01)"));

  double growth = 0;
  for (int i = 0; i <= 100; ++i) {
    const double t = 10.0 * i / 100;
    growth = std::max({growth, std::abs(outer::a1(t)) * std::exp(-2 * t), std::abs(outer::a2(t)) * std::exp(-4 * t)});
  }
  out.push_back(check("outer.growth_a_n=O(e^{2nt})", growth < 1, "max |a_n| e^{-2nt} on [0,10] = " + sci(growth)));
}

void inner_checks(std::vector<CheckResult>& out) {
  const double consistent1 = max_over(-3, 3, 120, [](double x) {
    const double v = inner::v1(x), dv = inner::dv1(x);
    return (dv * dv - 4 * v * v + 2 * v) / (1 + 4 * v * v);
  });
  const double printed1 = max_over(-3, 3, 120, [](double x) {
    const double v = inner::v1(x), dv = inner::dv1(x);
    return dv * dv - 4 * v * v - 2 * v;
  });
  out.push_back(check("inner.v1_equation (v1')^2=4v1^2-2v1", consistent1 <= 1e-10,
                      "max relative residual " + sci(consistent1)));
  out.push_back(report("inner.v1_equation_as_printed (v1')^2=4v1^2+2v1",
                       "max residual " + sci(printed1) + " (holds for -v1, the opposite sign convention)"));

  const double tp = inner::turning_point_tau();
  const double v_tp = std::abs(inner::v1(tp)), dv_tp = std::abs(inner::dv1(tp));
  out.push_back(check("inner.turning_point_tau=2log2", v_tp <= 1e-15 && dv_tp <= 1e-15,
                      "|v1| " + sci(v_tp) + ", |v1'| " + sci(dv_tp)));

  for (double e : kLadder) {
    const ModulusSpec s(e);
    const double c2 = inner::c2(s);
    const double consistent2 = max_over(-2, 2, 80, [c2](double x) {
      const double a = inner::v1(x), da = inner::dv1(x), b = inner::v2(x, c2), db = inner::dv2(x, c2);
      const double scale = 1 + std::abs(8 * a * b) + std::abs(2 * b) + std::abs(4 * a * a * a) + std::abs(5 * a * a);
      return (2 * da * db - (8 * a * b - 2 * b + 4 * a * a * a - 5 * a * a)) / scale;
    });
    const double printed2 = max_over(-2, 2, 80, [c2](double x) {
      const double a = inner::v1(x), da = inner::dv1(x), b = inner::v2(x, c2), db = inner::dv2(x, c2);
      return 2 * da * db - (8 * a * b - 2 * b + 4 * a * a * a + 5 * a);
    });
    const std::string tag = " eps=" + sci(e);
    out.push_back(check("inner.v2_equation 2v1'v2'=8v1v2-2v2+4v1^3-5v1^2" + tag, consistent2 <= 1e-8,
                        "max relative residual " + sci(consistent2)));
    out.push_back(report("inner.v2_equation_as_printed (+5v1)" + tag, "max residual " + sci(printed2)));

    // inner(tau, 2) - overlap(tau) = eps^2 e^{4tau}/32768, o(eps^2 e^{2tau}).
    const double lo = std::log(e) / 2;
    double match_in = 0, match_out = 0;
    for (int i = 0; i <= 60; ++i) {
      const double x = lo + (-2 - lo) * i / 60;
      const double ov = overlap_eval(x, s);
      match_in = std::max(match_in, std::abs(inner_eval(x, s, 2) - ov) / (e * e * std::exp(2 * x)));
      match_out = std::max(match_out, std::abs(outer_eval(TauCoord::to_t(x, s), s, 2) - ov) /
                                          (e * e * e * std::exp(-6 * x)));
    }
    out.push_back(check("inner.matching_inner_vs_overlap" + tag, match_in <= std::exp(2 * std::max(lo, -2.0)) / 32768 * 1.01,
                        "max |inner-overlap|/(eps^2 e^{2tau}) " + sci(match_in)));
    out.push_back(check("outer.matching_outer_vs_overlap" + tag, match_out <= 4,
                        "max |outer-overlap|/(eps^3 e^{-6tau}) " + sci(match_out)));
  }

  const ModulusSpec s(0.01);
  const double shift = -std::log(0.01) / 2;
  double plus = 0, printed = 0;
  for (int i = 0; i <= 300; ++i) {
    const double x = 3.0 * i / 300;
    const double sn = jacobi_sn(x + shift, s).sn;
    plus = std::max(plus, std::abs(inner_eval(x, s, 1, InnerSign::plus) - sn));
    printed = std::max(printed, std::abs(inner_eval(x, s, 1, InnerSign::printed) - sn));
  }
  out.push_back(check("inner.sign_adjudication eps=0.01", plus * 10 <= printed,
                      "max err on tau in [0,3]: plus " + sci(plus) + ", printed minus " + sci(printed)));
}

void composite_checks(std::vector<CheckResult>& out) {
  for (double e : kLadder) {
    const ModulusSpec s(e);
    const auto p = period(s);
    const std::string tag = " eps=" + sci(e);

    auto neg_sn = [&s](double t) { return -jacobi_sn(t, s).sn; };
    const double predicted = -std::log(e) / 2 + 2 * std::numbers::ln2;
    const auto t_star = boost::math::tools::brent_find_minima(neg_sn, predicted - 1, predicted + 1, 40).first;
    out.push_back(check("sn.turning_point_location" + tag,
                        std::abs(t_star - predicted) <= e * (1 + std::abs(std::log(e))),
                        "argmax - (-log(eps)/2 + 2log2) = " + sci(t_star - predicted)));

    const auto [lo, hi] = trust_region(ApproxKind::composite_first_half, s);
    double mirror = 0, first_max = 0;
    for (int i = 0; i <= 400; ++i) {
      const double t = lo + (hi - lo) * i / 400;
      const double e1 = std::abs(composite_first_half(t, s) - jacobi_sn(t, s).sn);
      const double e2 = std::abs(composite_second_half(t + p.half, s) - jacobi_sn(t + p.half, s).sn);
      mirror = std::max(mirror, std::abs(e1 - e2));
      first_max = std::max(first_max, e1);
    }
    out.push_back(check("composite.trust_region_error<=eps" + tag, first_max <= e,
                        "max err on (log(eps)/2, -log eps) " + sci(first_max)));
    out.push_back(check("composite.second_half_mirrors_first" + tag, mirror <= 1e-12,
                        "max |err1 - err2| " + sci(mirror)));

    const auto layout = full_period_layout(s);
    double jump = 0;
    for (double seam : {layout.seam, layout.seam - p.half}) {
      const double below = std::nextafter(seam, -1e300);
      jump = std::max(jump, std::abs(full_period_eval(seam, s, layout) - full_period_eval(below, s, layout)));
    }
    double periodic = 0;
    for (int i = 0; i <= 50; ++i) {
      const double t = -p.full + 2 * p.full * i / 50;
      periodic = std::max(periodic, std::abs(full_period_eval(t + p.full, s, layout) - full_period_eval(t, s, layout)));
    }
    out.push_back(check("full_period.seams_and_periodicity" + tag, jump <= 10 * e * e && periodic <= 1e-12,
                        "seam jump " + sci(jump) + ", periodicity " + sci(periodic)));
  }
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestFixture& fixture) {
  std::vector<CheckResult> out;
  k_checks(fixture, out);
  oracle_checks(out);
  outer_checks(out);
  inner_checks(out);
  composite_checks(out);
  return out;
}

int print_selftest(const std::vector<CheckResult>& results, std::ostream& out) {
  int failures = 0;
  for (const auto& r : results) {
    const char* status = r.report_only ? "NOTE" : (r.pass ? "PASS" : "FAIL");
    if (!r.report_only && !r.pass) ++failures;
    out << status << "  " << r.name << "  " << r.detail << '\n';
  }
  out << (failures == 0 ? "selftest: all checks passed" : "selftest: " + std::to_string(failures) + " check(s) failed")
      << '\n';
  return failures == 0 ? 0 : 3;
}

}  // namespace snasym
