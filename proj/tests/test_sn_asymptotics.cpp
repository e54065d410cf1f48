#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "snasym/oracle.hpp"
#include "snasym/sn_asymptotics.hpp"

using namespace snasym;

namespace {

template <class F>
double max_over(double lo, double hi, int n, F&& f) {
  double worst = 0;
  for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(f(lo + (hi - lo) * i / n)));
  return worst;
}

double oracle(double t, const ModulusSpec& s) { return jacobi_sn(t, s).sn; }

}  // namespace

TEST(Outer, InitialConditions) {
  EXPECT_EQ(outer::u1(0), 0.0);
  EXPECT_EQ(outer::u2(0), 0.0);
  EXPECT_EQ(outer::du1(0), 0.0);
  EXPECT_EQ(outer::du2(0), 0.0);
}

TEST(Outer, OddInT) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> t(0.0, 8.0);
  const ModulusSpec s(0.05);
  for (int i = 0; i < 500; ++i) {
    const double x = t(rng);
    for (int order = 0; order <= 2; ++order) ASSERT_EQ(outer_eval(-x, s, order), -outer_eval(x, s, order));
  }
}

TEST(Outer, DerivativesMatchFiniteDifferences) {
  const double h = 1e-5;
  for (double t : {-2.0, -0.3, 0.4, 1.7}) {
    EXPECT_NEAR(outer::du1(t), (outer::u1(t + h) - outer::u1(t - h)) / (2 * h), 1e-8) << t;
    EXPECT_NEAR(outer::du2(t), (outer::u2(t + h) - outer::u2(t - h)) / (2 * h), 1e-8) << t;
  }
}

TEST(Outer, ErrorDropsWithOrderNearOrigin) {
  const ModulusSpec s(0.01);
  double prev = INFINITY;
  for (int order = 0; order <= 2; ++order) {
    const double err = max_over(-1, 1, 200, [&](double t) { return outer_eval(t, s, order) - oracle(t, s); });
    EXPECT_LT(err, prev) << order;
    prev = err;
  }
  EXPECT_LT(prev, 1e-7);
}

TEST(Outer, RejectsBadOrder) {
  EXPECT_THROW(outer_eval(0.1, ModulusSpec(0.1), 3), std::invalid_argument);
  EXPECT_THROW(outer_eval(0.1, ModulusSpec(0.1), -1), std::invalid_argument);
}

TEST(Outer, HandbookFormIsFirstOrderOuter) {
  const ModulusSpec s(0.02);
  for (double t : {-1.0, 0.0, 0.5, 2.0}) EXPECT_NEAR(handbook_sn(t, s), outer_eval(t, s, 1), 1e-15) << t;
}

TEST(TauCoord, RoundTripAndShift) {
  const ModulusSpec s(0.01);
  EXPECT_NEAR(TauCoord::from_t(-std::log(0.01) / 2, s), 0.0, 1e-15);
  for (double t : {-3.0, 0.0, 2.5, 7.0}) EXPECT_NEAR(TauCoord::to_t(TauCoord::from_t(t, s), s), t, 1e-14);
}

TEST(Inner, FirstOrderEquationUnderPlusConvention) {
  const double worst = max_over(-3, 3, 600, [](double x) {
    const double a = inner::v1(x), da = inner::dv1(x);
    return (da * da - (4 * a * a - 2 * a)) / (1 + 4 * a * a);
  });
  EXPECT_LT(worst, 1e-14);
}

TEST(Inner, FirstOrderEquationForArbitraryC1) {
  for (double c1 : {-1.0, -0.125, -0.01}) {
    const double worst = max_over(-2, 2, 200, [c1](double x) {
      const double a = inner::v1(x, c1), da = inner::dv1(x, c1);
      return (da * da - (4 * a * a - 2 * a)) / (1 + 4 * a * a);
    });
    EXPECT_LT(worst, 1e-13) << c1;
  }
}

TEST(Inner, TurningPoint) {
  const double tp = inner::turning_point_tau();
  EXPECT_DOUBLE_EQ(tp, 2 * std::numbers::ln2);
  EXPECT_NEAR(inner::v1(tp), 0.0, 1e-15);
  EXPECT_NEAR(inner::dv1(tp), 0.0, 1e-15);
}

TEST(Inner, SecondOrderEquation) {
  for (double eps : {0.1, 0.01, 0.001}) {
    const double c2 = inner::c2(ModulusSpec(eps));
    const double worst = max_over(-2, 2, 400, [c2](double x) {
      const double a = inner::v1(x), da = inner::dv1(x), b = inner::v2(x, c2), db = inner::dv2(x, c2);
      const double scale = 1 + std::abs(8 * a * b) + std::abs(2 * b) + std::abs(4 * a * a * a);
      return (2 * da * db - (8 * a * b - 2 * b + 4 * a * a * a - 5 * a * a)) / scale;
    });
    EXPECT_LT(worst, 1e-13) << eps;
  }
}

TEST(Inner, PlusSignTracksOracleAndPrintedDoesNot) {
  const ModulusSpec s(0.01);
  auto err = [&](InnerSign sign) {
    return max_over(0, 3, 300, [&](double tau) {
      return inner_eval(tau, s, 1, sign) - oracle(TauCoord::to_t(tau, s), s);
    });
  };
  EXPECT_LT(10 * err(InnerSign::plus), err(InnerSign::printed));
}

TEST(Inner, SecondOrderImprovesNearTurningPoint) {
  const ModulusSpec s(0.001);
  auto err = [&](int order) {
    return max_over(-1, 2, 300, [&](double tau) {
      return inner_eval(tau, s, order) - oracle(TauCoord::to_t(tau, s), s);
    });
  };
  EXPECT_LT(err(2), err(1) / 10);
}

TEST(Inner, RejectsBadOrder) {
  EXPECT_THROW(inner_eval(0.0, ModulusSpec(0.1), 0), std::invalid_argument);
  EXPECT_THROW(inner_eval(0.0, ModulusSpec(0.1), 3), std::invalid_argument);
}

TEST(Matching, InnerMinusOverlapIsExactQuarticTerm) {
  const ModulusSpec s(0.01);
  for (double tau : {-2.3, -1.5, -0.5}) {
    const double expected = 1e-4 * std::exp(4 * tau) / 32768;
    EXPECT_NEAR(inner_eval(tau, s, 2) - overlap_eval(tau, s), expected, 1e-15) << tau;
  }
}

TEST(Composite, WithinEpsOnTrustRegion) {
  for (double eps : {0.03, 0.01, 0.003, 0.001}) {
    const ModulusSpec s(eps);
    const auto [lo, hi] = trust_region(ApproxKind::composite_first_half, s);
    const double err =
        max_over(lo, hi, 2000, [&](double t) { return composite_first_half(t, s) - oracle(t, s); });
    EXPECT_LE(err, eps) << eps;
  }
}

TEST(Composite, SecondHalfMirrorsFirst) {
  const ModulusSpec s(0.01);
  const double half = period(s).half;
  const double worst = max_over(-2, 5, 500, [&](double t) {
    return composite_second_half(t + half, s) + composite_first_half(t, s);
  });
  EXPECT_LT(worst, 1e-14);
}

TEST(FullPeriod, SeamInsideSecondQuarterAndContinuous) {
  for (double eps : {0.1, 0.03, 0.01, 0.003}) {
    const ModulusSpec s(eps);
    const auto p = period(s);
    const auto layout = full_period_layout(s);
    EXPECT_GT(layout.seam, p.quarter);
    EXPECT_LT(layout.seam, p.half);
    const double mismatch = composite_first_half(layout.seam, s) + composite_first_half(layout.seam - p.half, s);
    EXPECT_LT(std::abs(mismatch), 1e-12) << eps;
  }
}

TEST(FullPeriod, PeriodicAndAccurate) {
  const ModulusSpec s(0.01);
  const auto layout = full_period_layout(s);
  EXPECT_DOUBLE_EQ(layout.period, period(s).full);
  const double drift = max_over(-20, 20, 400, [&](double t) {
    return full_period_eval(t + layout.period, s, layout) - full_period_eval(t, s, layout);
  });
  EXPECT_LT(drift, 1e-12);
  const double err = max_over(0, layout.period, 2000, [&](double t) { return full_period_eval(t, s) - oracle(t, s); });
  EXPECT_LT(err, 0.1);
}

TEST(ApproxEval, DispatchesByKind) {
  const ModulusSpec s(0.02);
  const double t = 1.3;
  EXPECT_EQ(approx_eval(ApproxKind::outer, t, s, 2), outer_eval(t, s, 2));
  EXPECT_EQ(approx_eval(ApproxKind::handbook_sn, t, s, 2), handbook_sn(t, s));
  EXPECT_EQ(approx_eval(ApproxKind::inner, t, s, 2), inner_eval(TauCoord::from_t(t, s), s, 2));
  EXPECT_EQ(approx_eval(ApproxKind::composite_first_half, t, s, 2), composite_first_half(t, s));
  EXPECT_EQ(approx_eval(ApproxKind::composite_second_half, t, s, 2), composite_second_half(t, s));
  EXPECT_EQ(approx_eval(ApproxKind::full_period, t, s, 2), full_period_eval(t, s));
}

TEST(ApproxKindTags, AreStable) {
  EXPECT_EQ(to_string(ApproxKind::handbook_sn), "handbook-sn");
  EXPECT_EQ(to_string(ApproxKind::outer), "outer");
  EXPECT_EQ(to_string(ApproxKind::inner), "inner");
  EXPECT_EQ(to_string(ApproxKind::composite_first_half), "composite");
  EXPECT_EQ(to_string(ApproxKind::composite_second_half), "composite-second-half");
  EXPECT_EQ(to_string(ApproxKind::full_period), "full-period");
}

TEST(TrustRegion, ShapesPerKind) {
  const ModulusSpec s(0.01);
  const double l = std::log(0.01);
  auto [olo, ohi] = trust_region(ApproxKind::outer, s);
  EXPECT_DOUBLE_EQ(olo, l / 2);
  EXPECT_DOUBLE_EQ(ohi, -l / 2);
  auto [ilo, ihi] = trust_region(ApproxKind::inner, s);
  EXPECT_DOUBLE_EQ(ilo, 0.0);
  EXPECT_DOUBLE_EQ(ihi, -l);
  auto [clo, chi] = trust_region(ApproxKind::composite_first_half, s);
  EXPECT_DOUBLE_EQ(clo, l / 2);
  EXPECT_DOUBLE_EQ(chi, -l);
  EXPECT_TRUE(std::isinf(trust_region(ApproxKind::full_period, s).second));
}
