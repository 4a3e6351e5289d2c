// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include <cmath>

#include "opal/error.hpp"
#include "opal/geometry.hpp"

using namespace opal;

namespace {

const ModelParams kPre{3, 0, 0.5, 3.0};
const ModelParams kPost{3, 0, 1.5, 3.0};
const ModelParams kGinibre{1, 0, 0.5, 1.0};
const Precision P{256, 1e-30};

BigComplex bc(double re, double im, mpfr_prec_t bits = 256) { return BigComplex(re, im, bits); }
BigComplex bc(std::complex<double> z) { return BigComplex(z, 256); }

// Winding number of a closed polyline around q.
int winding(const std::vector<std::complex<double>>& line, std::complex<double> q) {
  double total = 0;
  for (size_t i = 0; i < line.size(); ++i) total += std::arg((line[(i + 1) % line.size()] - q) / (line[i] - q));
  return static_cast<int>(std::lround(total / (2 * M_PI)));
}

}  // namespace

TEST(Phi, ValuesAtBasePoints) {
  PhiFunction pre = make_phi(kPre, P);
  EXPECT_LT(abs(phi_eval(pre, bc(1, 0))).to_double(), 1e-70);
  PhiFunction post = make_phi(kPost, P);
  EXPECT_LT(abs(phi_eval(post, BigComplex(post.z0))).to_double(), 1e-70);
  EXPECT_EQ(post.cut, LogCut::PosRealAxis);
  for (double r : {0.3, 0.8, 2.5}) {
    PhiFunction f = make_phi_r(kPre, Real(r, 256), P);
    EXPECT_LT(abs(re_phi(f, bc(r, 0))).to_double(), 1e-70);
  }
  EXPECT_THROW(phi_eval(pre, bc(0, 0)), Error);
}

TEST(Phi, PostCutJump) {
  PhiFunction post = make_phi(kPost, P);
  BigComplex up = phi_eval(post, bc(0.2, 1e-40));
  BigComplex dn = phi_eval(post, bc(0.2, -1e-40));
  EXPECT_NEAR((up - dn).im.to_double(), -2 * M_PI, 1e-30);
  // psi = e^phi is single valued.
  BigComplex z = bc(0.3, 0.4);
  EXPECT_LT(abs(exp(phi_eval(post, z)) - psi_eval(post, z)).to_double(), 1e-60);
}

TEST(Curve, TracedCurveProperties) {
  for (const ModelParams& p : {kPre, kPost}) {
    PhiFunction f = make_phi(p, P);
    const int M = 256;
    CurveSample cs = trace_curve(f, M, p);
    ASSERT_EQ(static_cast<int>(cs.points.size()), M);
    EXPECT_LT(abs(cs.points[0].z - BigComplex(f.r)).to_double(), 1e-70);
    double mass = 0, worst_re = 0, worst_theta = 0;
    for (const auto& pt : cs.points) {
      mass += pt.nu_weight;
      worst_re = std::max(worst_re, abs(re_phi(f, pt.z)).to_double());
      // nu-quantile property: psi(z_j) = e^{i theta_j}.
      std::complex<double> psi = psi_eval(f, pt.z).to_cd();
      worst_theta = std::max(worst_theta, std::abs(psi - std::polar(1.0, pt.theta)));
    }
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_LT(worst_re, 1e-38);  // 10^{-digits/2} at 256 bits
    EXPECT_LT(worst_theta, 1e-14);
    // Real crossings: z = r and one point in (-r, 0).
    const auto& mid = cs.points[M / 2].z;
    EXPECT_TRUE(mid.im.is_zero());
    EXPECT_LT(mid.re.to_double(), 0.0);
    EXPECT_GT(mid.re.to_double(), -f.r.to_double());
  }
}

TEST(Curve, NuIncrementsPositive) {
  for (const ModelParams& p : {kPre, kPost}) {
    PhiFunction f = make_phi(p, P);
    CurveSample cs = trace_curve(f, 256, p);
    auto inc = nu_increments(cs, f);
    std::complex<double> total = 0;
    for (const auto& d : inc) {
      EXPECT_GT(d.real(), 0.0);
      EXPECT_LT(std::abs(d.imag()), 1e-14);
      total += d;
    }
    EXPECT_NEAR(total.real(), 1.0, 1e-10);
    EXPECT_LT(std::abs(total.imag()), 1e-10);
  }
}

TEST(Curve, CriticalIsSzegoCurve) {
  ModelParams crit{3, 0, 1.0, 3.0};  // z0 = 1
  PhiFunction f = make_phi(crit, P);
  CurveSample cs = trace_curve(f, 128, crit);
  for (const auto& pt : cs.points) {
    BigComplex v = pt.z * exp(1.0 - pt.z);
    EXPECT_LT(abs(abs(v) - 1.0).to_double(), 1e-30);
  }
}

TEST(HatCurve, ComponentsAndMasses) {
  for (const ModelParams& p : {kPre, kPost}) {
    DerivedParams d = derive(p, 256);
    Real r = d.regime == Regime::PostCritical ? d.z0 : Real(1.0, 256);
    CurveSample cs = hat_curve(p, r, 128, P);
    EXPECT_EQ(cs.components, 3);
    std::vector<double> mass(3, 0.0);
    double worst = 0;
    for (const auto& pt : cs.points) {
      mass[pt.branch] += pt.nu_weight;
      // Same level with the same r label in the lambda normalization.
      worst = std::max(worst, std::abs(hat_phi_eval(p, r, pt.lambda).re.to_double()));
    }
    for (double m : mass) EXPECT_NEAR(m, 1.0 / 3, 1e-12);
    EXPECT_LT(worst, 1e-30);
  }
}

TEST(HatCurve, PostComponentsEncircleOneRootEach) {
  DerivedParams d = derive(kPost, 256);
  CurveSample cs = hat_curve(kPost, d.z0, 256, P);
  auto lines = polylines(cs, Plane::Lambda);
  ASSERT_EQ(lines.size(), 3u);
  const double r0 = std::cbrt(kPost.t);
  for (const auto& line : lines) {
    int enclosed = 0;
    for (int j = 0; j < 3; ++j) enclosed += winding(line, std::polar(r0, 2 * M_PI * j / 3)) != 0;
    EXPECT_EQ(enclosed, 1);
  }
}

TEST(Deformed, InsideCurveAndConverging) {
  PhiFunction f = make_phi(kPre, P);
  double prev = 1e300;
  for (int k : {20, 95, 400}) {
    CurveSample dc = deformed_zero_curve(kPre, k, 128, P);
    ASSERT_FALSE(dc.points.empty());
    double worst = 0;
    for (const auto& pt : dc.points) {
      double a = re_phi(f, pt.z).to_double();
      EXPECT_LT(a, 0.0) << "k=" << k;
      worst = std::max(worst, -a);
    }
    EXPECT_LT(worst, prev);
    prev = worst;
  }
}

TEST(Deformed, RhsFiniteNearUnitCircle) {
  for (double a : {0.5, 1.5, 2.5, -2.0}) {
    BigComplex z = polar(Real(0.999, 256), Real(a, 256));
    Real v = deformed_rhs(kPre, 95, z, P);
    EXPECT_TRUE(v.is_finite());
    EXPECT_LT(v.to_double(), 0.0);
  }
}

TEST(Droplet, MembershipAndBoundary) {
  Droplet dp = droplet(kPre);
  EXPECT_TRUE(dp.contains(std::complex<double>(0, 0)));
  EXPECT_FALSE(droplet(kPost).contains(std::complex<double>(0, 0)));
  const double edge = std::cbrt(kPre.t + dp.t_c);
  EXPECT_NEAR(std::abs(std::pow(std::complex<double>(edge, 0), 3) - kPre.t), dp.t_c, 1e-14);
  for (const auto& [comp, lam] : dp.boundary(90)) {
    (void)comp;
    EXPECT_NEAR(std::abs(std::pow(lam, 3) - kPre.t), dp.t_c, 1e-12);
  }
  auto post_b = droplet(kPost).boundary(60);
  int max_comp = 0;
  for (const auto& [comp, lam] : post_b) max_comp = std::max(max_comp, comp);
  EXPECT_EQ(max_comp, 2);
}

TEST(Droplet, SchwarzOnBoundary) {
  for (const ModelParams& p : {kPre, kPost, kGinibre}) {
    for (const auto& [comp, lam] : droplet(p).boundary(36)) {
      (void)comp;
      BigComplex l = bc(lam);
      // Put the point on the boundary to working precision before comparing.
      BigComplex S = schwarz(l, p, P);
      EXPECT_LT(std::abs(S.to_cd() - std::conj(lam)), 1e-12);
    }
  }
}

TEST(Cauchy, NuMatchesClosedForm) {
  for (const ModelParams& p : {kPre, kPost}) {
    DerivedParams d = derive(p, 256);
    Real r = d.regime == Regime::PostCritical ? d.z0 : Real(1.0, 256);
    CurveSample cs = hat_curve(p, r, 1024, P, ThetaGrid::Graded);
    const double edge = std::cbrt(p.t + d.t_c.to_double());
    for (double a : {0.0, 0.4, 1.3, 2.9}) {
      BigComplex lam = bc(std::polar(2 * edge, a));
      BigComplex v = cauchy_nu(lam, cs);
      BigComplex w = cauchy_closed_form(lam, p);
      EXPECT_LT((abs(v - w) / abs(w)).to_double(), 1e-8);
    }
    BigComplex far = bc(1e4, 3e3);
    EXPECT_NEAR((cauchy_nu(far, cs) * far).to_cd().real(), 1.0, 1e-6);
  }
}

TEST(Cauchy, DropletSideMatches) {
  const double edge = std::cbrt(kPre.t + 1.0);
  BigComplex lam = bc(std::polar(2 * edge, 0.7));
  BigComplex a = cauchy_droplet(lam, kPre, {128, 1e-20});
  BigComplex b = cauchy_closed_form(lam, kPre);
  EXPECT_LT((abs(a - b) / abs(b)).to_double(), 1e-8);
}

TEST(QuadratureDomain, TestFunctions) {
  const Precision pq{128, 1e-20};
  auto one = quadrature_domain_check(kPre, TestFunction::One, pq);
  EXPECT_LT(abs(one.area_integral - 1.0).to_double(), 1e-15);
  auto lin = quadrature_domain_check(kGinibre, TestFunction::Lambda, pq);
  EXPECT_LT(abs(lin.area_integral - kGinibre.t).to_double(), 1e-15);
  for (const ModelParams& p : {kPre, kPost}) {
    for (TestFunction h : {TestFunction::Lambda, TestFunction::Lambda2, TestFunction::Exp}) {
      EXPECT_LT(quadrature_domain_check(p, h, pq).residual, 1e-6);
    }
  }
}

TEST(Regions, ClassifierExamples) {
  EXPECT_EQ(classify_region(bc(3, 3), kPre, 32), Region::Exterior);
  EXPECT_EQ(classify_region(bc(-0.8, 0), kPre, 32), Region::NearCurve);
  EXPECT_EQ(classify_region(bc(1.05, 0), kPre, 32), Region::NearSpecial);
  EXPECT_EQ(classify_region(bc(0.95, 0), kPre, 32), Region::NearSpecial);
  EXPECT_EQ(classify_region(bc(0.05, 0.02), kPre, 32), Region::Interior);
  DerivedParams d = derive(kPost, 128);
  EXPECT_EQ(classify_region(bc(d.z0_d() + 0.05, 0), kPost, 32), Region::NearSpecial);
  EXPECT_EQ(classify_region(bc(-1, 0), kPost, 32), Region::Exterior);
  // Lambda form agrees with the z form.
  BigComplex lam = bc(0.4, 0.1);
  BigComplex z = 1.0 - pow(lam, 3L) / Real(kPre.t, 256);
  EXPECT_EQ(classify_region_lambda(lam, kPre, 32), classify_region(z, kPre, 32));
}

TEST(Uniformize, RoundTripAndBoundary) {
  BigComplex xi = polar(Real(2.0, 256), pi(256) / 7.0);
  BigComplex lam = uniformize(xi, kPre, P);
  EXPECT_LT(abs(uniformize_inverse(lam, kPre, P) - xi).to_double(), 1e-60);
  for (double a : {0.1, 1.0, 2.2, 3.0, 5.5}) {
    BigComplex on = uniformize(polar(Real(1.0, 256), Real(a, 256)), kPre, P);
    EXPECT_LT(abs(abs(pow(on, 3L) - kPre.t) - 1.0).to_double(), 1e-60);
  }
  BigComplex big = bc(1e20, 1e19);
  BigComplex ratio = uniformize(big, kPre, P) / big;
  EXPECT_LT(abs(ratio - 1.0).to_double(), 1e-30);  // t_c = 1 here
  EXPECT_THROW(uniformize(bc(0.5, 0), kPre, P), Error);
  EXPECT_THROW(uniformize(xi, kPost, P), Error);
}
