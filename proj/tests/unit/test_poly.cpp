// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include "opal/poly.hpp"

using namespace opal;

namespace {

const ModelParams kPre{3, 0, 0.5, 3.0};
const ModelParams kGammaZero{3, 2, 0.5, 3.0};
const Precision P{256, 1e-30};

BigComplex bc(double re, double im, mpfr_prec_t bits = 256) { return BigComplex(re, im, bits); }

}  // namespace

TEST(Poly, GammaZeroIsMonomial) {
  for (int k : {1, 5, 20}) {
    MonicPoly poly = build_pi_k(kGammaZero, k, P);
    ASSERT_EQ(poly.k, k);
    ASSERT_EQ(static_cast<int>(poly.coeffs.size()), k);
    double worst = 0;
    for (const auto& a : poly.coeffs) worst = std::max(worst, abs(a).to_double());
    EXPECT_LT(worst, 1e-30) << "k=" << k;
  }
}

TEST(Poly, GammaZeroClosedFormPn) {
  const int k = 12;
  MonicPoly poly = build_pi_k(kGammaZero, k, P);
  for (auto lam : {bc(0.3, 0.2), bc(-1.1, 0.4), bc(0.9, -0.05)}) {
    // lambda^{s-1} (lambda^s - t)^k
    BigComplex expect = pow(lam, 2L) * pow(pow(lam, 3L) - 0.5, static_cast<long>(k));
    BigComplex got = pn_eval(poly, lam);
    EXPECT_LT((abs(got - expect) / abs(expect)).to_double(), 1e-30);
  }
}

TEST(Poly, DegreeZero) {
  MonicPoly poly = build_pi_k(kPre, 0, P);
  EXPECT_EQ(poly.k, 0);
  EXPECT_LT(abs(eval_poly(poly, bc(3, 1)) - 1.0).to_double(), 1e-70);
}

TEST(Poly, DegreeOneIsMomentQuotient) {
  MomentTable mt = compute_moments(kPre, 1, P);
  MonicPoly poly = orthopoly(mt, kPre);
  BigComplex root = mt.at(0) / mt.at(-1);
  EXPECT_LT((abs(poly.coeffs[0] + root) / abs(root)).to_double(), 1e-60);
  BigComplex root_at(root, poly.precision());
  EXPECT_LT(abs(eval_poly(poly, root_at)).to_double(), 1e-60);
}

TEST(Poly, EvalBasics) {
  MonicPoly mono = build_pi_k(kGammaZero, 6, P);
  EXPECT_LT((abs(eval_poly(mono, bc(2, 0)) - 64.0) / 64.0).to_double(), 1e-30);
  MonicPoly poly = build_pi_k(kPre, 6, P);
  EXPECT_LT(abs(eval_poly(poly, BigComplex(poly.precision())) - poly.coeffs[0]).to_double(), 1e-70);
  BigComplex v, d;
  BigComplex z = bc(0.4, 0.7, poly.precision());
  eval_poly_deriv(poly, z, v, d);
  EXPECT_LT(abs(v - eval_poly(poly, z)).to_double(), 1e-60);
  Real h(1e-30, poly.precision());
  BigComplex fd = (eval_poly(poly, z + BigComplex(h, Real(poly.precision()))) - eval_poly(poly, z - BigComplex(h, Real(poly.precision())))) / (h * 2.0);
  EXPECT_LT((abs(fd - d) / abs(d)).to_double(), 1e-40);
}

TEST(Poly, ResidualSmallAndSensitive) {
  const int k = 16;
  MomentTable mt = compute_moments(kPre, k, P);
  MonicPoly poly = orthopoly(mt, kPre);
  double base = residual_check(poly, mt);
  int digits = static_cast<int>(mt.bits() * 0.30103);
  EXPECT_LT(base, std::pow(10.0, -digits / 4.0));
  Real scale(mt.bits());
  for (const auto& v : mt.values) scale = max(scale, abs(v));
  MonicPoly bumped = poly;
  bumped.coeffs[0] += BigComplex(1e-3, 0.0, poly.precision());
  double after = residual_check(bumped, mt);
  double expected_jump = 1e-3 * (abs(mt.at(-k)) / scale).to_double();
  EXPECT_GE(after, 0.5 * expected_jump);
  EXPECT_GT(after, 1e3 * base);
}

TEST(Poly, PrecisionDoublingAgreement) {
  MonicPoly a = build_pi_k(kPre, 20, P);
  MonicPoly b = build_pi_k(kPre, 20, P.doubled());
  EXPECT_LT(coeff_distance(a, b), 1e-30);
}

TEST(Poly, ExtendedTableIndexing) {
  // Same c, table built for k+1 and read as a degree-k system.
  const int k = 10;
  Real c = weight_c(k, kPre, 512);
  Real g = rational(2, 3, 512);
  MomentTable small = compute_moments_c(c, g, 4.0, k, -k, k, P);
  MomentTable big = compute_moments_c(c, g, 4.0, k + 1, -k - 1, k + 1, P);
  big.k = k;
  MonicPoly a = orthopoly(small, kPre);
  MonicPoly b = orthopoly(big, kPre);
  EXPECT_LT(coeff_distance(a, b), 1e-30);
}

TEST(Poly, PnZerosAndOrigin) {
  ModelParams p{3, 1, 0.5, 3.0};
  MonicPoly poly = build_pi_k(p, 1, P);
  EXPECT_TRUE(abs(pn_eval(poly, BigComplex(poly.precision()))).is_zero());
  // lambda^s = t (1 - z_root)
  BigComplex z_root = -poly.coeffs[0];
  BigComplex u = (1.0 - z_root) * 0.5;
  BigComplex lam = exp(log(u) / 3.0);
  BigComplex v = pn_eval(poly, lam);
  EXPECT_LT(abs(v).to_double(), 1e-60);
}

TEST(Poly, RotationCovariance) {
  // p_n(omega lambda) = omega^n p_n(lambda), omega = e^{2 pi i/s}.
  ModelParams p{3, 1, 0.5, 3.0};
  const int k = 7;
  MonicPoly poly = build_pi_k(p, k, P);
  const mpfr_prec_t b = poly.precision();
  BigComplex omega = polar(Real(1.0, b), pi(b) * 2.0 / 3.0);
  BigComplex lam = bc(0.6, 0.35, b);
  BigComplex lhs = pn_eval(poly, omega * lam);
  BigComplex rhs = pow(omega, static_cast<long>(degree_n(k, p))) * pn_eval(poly, lam);
  EXPECT_LT((abs(lhs - rhs) / abs(rhs)).to_double(), 1e-50);
}
