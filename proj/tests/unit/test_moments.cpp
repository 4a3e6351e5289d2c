// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include <cmath>

#include "opal/error.hpp"
#include "opal/moments.hpp"
#include "oracles.hpp"

using namespace opal;

namespace {

const ModelParams kPre{3, 0, 0.5, 3.0};
const Precision P{256, 1e-30};

// I(m) / (2 pi i) as a double-free decimal string comparison against an oracle value.
double rel_to_oracle(const BigComplex& I, const oracle::MpReal& ref_over_2pii) {
  const mpfr_prec_t b = I.bits();
  Real two_pi = pi(b) * 2.0;
  Real got = I.im / two_pi;
  Real ref(ref_over_2pii.str(80, std::ios_base::scientific), b);
  return (abs(got - ref) / abs(ref)).to_double();
}

double max_rel_change(const std::vector<BigComplex>& a, const MomentTable& mt) {
  double worst = 0;
  for (int m = mt.m_lo; m <= mt.m_hi; ++m) {
    const BigComplex& x = mt.at(m);
    worst = std::max(worst, (abs(a[m - mt.m_lo] - x) / abs(x)).to_double());
  }
  return worst;
}

}  // namespace

TEST(Moments, GammaZeroResidues) {
  Real c(2.0, 256), g(0.0, 256);
  MomentTable mt = compute_moments_c(c, g, 4.0, 4, -4, 4, P);
  Real two_pi = pi(mt.bits()) * 2.0;
  // I(-1) = 2 pi i, I(-3) = 2 pi i c^2 / 2 = 4 pi i.
  EXPECT_LT(abs(mt.at(-1) - BigComplex(Real(mt.bits()), two_pi)).to_double(), 1e-60);
  EXPECT_LT(abs(mt.at(-3) - BigComplex(Real(mt.bits()), two_pi * 2.0)).to_double(), 1e-60);
  for (int m = 0; m <= 4; ++m) EXPECT_LT(abs(mt.at(m)).to_double(), 1e-19) << "m=" << m;
}

TEST(Moments, MatchLaurentSeriesOracle) {
  for (int k : {5, 20, 40}) {
    MomentTable mt = compute_moments(kPre, k, P);
    double c = k / 4.0;
    for (int m : {-k, -k / 2, -1, 0, k / 2, k}) {
      auto ref = oracle::moment_series(2, 3, c, m, 120);
      EXPECT_LT(rel_to_oracle(mt.at(m), ref), 1e-30) << "k=" << k << " m=" << m;
    }
  }
}

TEST(Moments, MatchCutCollapseOracle) {
  Real c(2.5, 256), g = rational(2, 3, 256);
  MomentTable mt = compute_moments_c(c, g, 4.0, 3, -1, 3, P);
  for (int m : {-1, 0, 2, 3}) {
    oracle::F50 ref = oracle::moment_cut_integral(oracle::F50(2) / 3, oracle::F50(2.5), m);
    Real got = mt.at(m).im / (pi(mt.bits()) * 2.0);
    double err = std::abs(static_cast<double>((oracle::F50(got.to_string(60)) - ref) / ref));
    EXPECT_LT(err, 1e-40) << "m=" << m;
  }
}

TEST(Moments, PurelyImaginary) {
  MomentTable mt = compute_moments(kPre, 30, P);
  for (int m = mt.m_lo; m <= mt.m_hi; ++m) {
    const BigComplex& v = mt.at(m);
    EXPECT_LT((abs(v.re) / abs(v)).to_double(), 1e-30) << "m=" << m;
  }
}

TEST(Moments, DoublingStability) {
  for (int k : {10, 40}) {
    MomentTable mt = compute_moments(kPre, k, P);
    const mpfr_prec_t b2 = 2 * mt.bits();
    auto neg = moments_on_circle(mt.c, mt.gamma, -k, -1, Real(mt.meta.radius_neg, b2), 2 * mt.meta.nodes, b2);
    auto pos = moments_on_circle(mt.c, mt.gamma, 0, k, Real(mt.meta.radius_pos, b2), 2 * mt.meta.nodes, b2);
    neg.insert(neg.end(), pos.begin(), pos.end());
    EXPECT_LT(max_rel_change(neg, mt), 1e-30) << "k=" << k;
  }
}

TEST(Moments, RadiusIndependence) {
  for (int k : {10, 40}) {
    MomentTable a = compute_moments(kPre, k, P);
    MomentOptions opt;
    opt.radius_scale = 1.3;
    MomentTable b = compute_moments(kPre, k, P, opt);
    EXPECT_LT(max_rel_change(b.values, a), 1e-30) << "k=" << k;
  }
}

TEST(Moments, RadiusRuleAndBudget) {
  EXPECT_DOUBLE_EQ(moment_radius(4.0, 10, -5.5), 4.0);
  EXPECT_DOUBLE_EQ(moment_radius(0.44, 10, 5.0), 1.25);
  EXPECT_EQ(moment_start_bits(40, 4.0), 128 + static_cast<int>(std::ceil(15 * std::log2(M_E))));
}

TEST(Moments, RejectsBadInput) {
  EXPECT_THROW(compute_moments(kPre, 0, P), Error);
  EXPECT_THROW(moments_on_circle(Real(1.0, 128), Real(0.5, 128), 0, 1, Real(0.9, 128), 64, 128), Error);
}

TEST(Hankel, GammaZeroAntiTriangular) {
  Real c(2.0, 256), g(0.0, 256);
  MomentTable mt = compute_moments_c(c, g, 4.0, 6, -6, 6, P);
  HankelReport r = hankel_nonvanishing(mt);
  // det = +- prod of the anti-diagonal I(-1): |det| = (2 pi)^6.
  EXPECT_NEAR(r.det_magnitude_log, 6 * std::log(2 * M_PI), 1e-10);
}

TEST(Hankel, OneByOneIsIMinusOne) {
  MomentTable mt = compute_moments(kPre, 1, P);
  HankelReport r = hankel_nonvanishing(mt);
  EXPECT_NEAR(r.det_magnitude_log, std::log(abs(mt.at(-1)).to_double()), 1e-12);
}

TEST(Hankel, NonvanishingAt512Bits) {
  ModelParams p{3, 1, 0.5, 3.0};  // gamma = 1/3, pre-critical
  MomentTable mt = compute_moments(p, 8, {512, 1e-60});
  HankelReport r = hankel_nonvanishing(mt);
  EXPECT_TRUE(std::isfinite(r.det_magnitude_log));
  EXPECT_GT(r.min_pivot_ratio, 0.0);
}

TEST(PlanarContour, IdentityCases) {
  const Precision pc{192, 1e-20};
  struct Case {
    double gamma, N, t;
  };
  for (const Case& cs : {Case{0.5, 2.0, 0.3}, Case{2.0 / 3, 3.0, 0.5}}) {
    // The full j <= 3, deg <= 2 grid runs in the acceptance binary.
    for (int j : {0, 3}) {
      for (int deg : {0, 2}) {
        std::vector<std::complex<double>> q(deg + 1, 0.0);
        q[deg] = 1.0;
        auto r = planar_contour_identity_check(cs.gamma, cs.N, cs.t, j, q, pc);
        EXPECT_LT(r.residual, 1e-8) << "gamma=" << cs.gamma << " j=" << j << " deg=" << deg;
      }
    }
  }
}

TEST(PlanarContour, GammaZeroGaussianClosedForm) {
  // With w = u - t: int u^a conj(u)^j e^{-N|u|^2 + 2 N t Re u} dA
  //   = e^{N t^2} sum_p C(a,p) C(j,p) t^{a+j-2p} pi p! / N^{p+1}.
  const double N = 2.0, t = 0.3;
  for (int j : {0, 2}) {
    for (int a : {0, 1}) {
      std::vector<std::complex<double>> q(a + 1, 0.0);
      q[a] = 1.0;
      auto r = planar_contour_identity_check(0.0, N, t, j, q, {192, 1e-20});
      double expect = 0;
      for (int p = 0; p <= std::min(a, j); ++p) {
        expect += std::tgamma(a + 1) / (std::tgamma(p + 1) * std::tgamma(a - p + 1)) * std::tgamma(j + 1) /
                  (std::tgamma(p + 1) * std::tgamma(j - p + 1)) * std::pow(t, a + j - 2 * p) * M_PI *
                  std::tgamma(p + 1) / std::pow(N, p + 1);
      }
      expect *= std::exp(N * t * t);
      EXPECT_LT(std::abs(r.planar.to_cd() - expect) / expect, 1e-10) << "j=" << j << " a=" << a;
      EXPECT_LT(r.residual, 1e-10);
    }
  }
}
