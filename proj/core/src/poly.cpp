// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/poly.hpp"

#include <cmath>

#include "opal/error.hpp"
#include "opal/linalg.hpp"

namespace opal {
namespace {

constexpr int kRefinementRounds = 3;

// r_j = -I(j) - sum_i a_i I(i+j-k) evaluated at `bits`.
std::vector<BigComplex> hankel_residual(const MomentTable& mt, const std::vector<BigComplex>& a, mpfr_prec_t bits) {
  const int k = mt.k;
  std::vector<BigComplex> r(k);
  Real t1(bits), t2(bits);
  for (int j = 0; j < k; ++j) {
    BigComplex acc = -BigComplex(mt.at(j), bits);
    BigComplex neg(bits);
    for (int i = 0; i < k; ++i) fma_into(neg, BigComplex(a[i], bits), BigComplex(mt.at(i + j - k), bits), t1, t2);
    r[j] = acc - neg;
  }
  return r;
}

}  // namespace

MonicPoly orthopoly(const MomentTable& mt, const ModelParams& p) {
  const int k = mt.k;
  MonicPoly poly;
  poly.k = k;
  poly.params = p;
  poly.gamma = mt.gamma.to_double();
  poly.bits = mt.meta.bits;
  if (k == 0) return poly;
  if (mt.m_lo > -k || mt.m_hi < k - 1) fail_domain("orthopoly: moment table must cover [-k, k-1]");
  const mpfr_prec_t bits = mt.bits();

  CMatrix H(k, bits);
  std::vector<BigComplex> rhs(k);
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) H(j, i) = mt.at(i + j - k);
    rhs[j] = -mt.at(j);
  }
  LUFactor f = lu_factor(H);
  if (f.singular) fail_numeric("orthopoly: singular Hankel matrix at working precision (raise precision)");
  std::vector<BigComplex> a = lu_solve(f, rhs);

  // Iterative refinement with residuals in doubled precision.
  Real scale(bits);
  for (int m = mt.m_lo; m <= mt.m_hi; ++m) scale = max(scale, abs(mt.at(m)));
  double last = INFINITY;
  for (int round = 0; round < kRefinementRounds; ++round) {
    std::vector<BigComplex> r = hankel_residual(mt, a, 2 * bits);
    Real rmax(bits);
    for (auto& x : r) rmax = max(rmax, abs(x));
    double rel = (rmax / scale).to_double();
    std::vector<BigComplex> rr(k);
    for (int j = 0; j < k; ++j) rr[j] = BigComplex(r[j], bits);
    std::vector<BigComplex> d = lu_solve(f, rr);
    for (int i = 0; i < k; ++i) a[i] += d[i];
    poly.refinement_rounds = round + 1;
    if (rel == 0) break;
    if (round > 0 && rel > last * 0.5 && rel > std::ldexp(1.0, -static_cast<int>(bits) / 2)) {
      fail_numeric("orthopoly: iterative refinement stalled (relative residual " + std::to_string(rel) +
                   "); raise precision");
    }
    last = rel;
  }
  poly.coeffs = std::move(a);
  poly.solve_residual = residual_check(poly, mt);
  return poly;
}

MonicPoly build_pi_k(const ModelParams& p, int k, const Precision& prec) {
  if (k == 0) {
    MonicPoly poly;
    poly.params = p;
    poly.bits = prec.mantissa_bits;
    poly.gamma = derive(p).gamma_d();
    return poly;
  }
  MomentTable mt = compute_moments(p, k, prec);
  return orthopoly(mt, p);
}

BigComplex eval_poly(const MonicPoly& poly, const BigComplex& z) {
  mpfr_prec_t bits = std::max<mpfr_prec_t>(poly.precision(), z.bits());
  BigComplex acc(Real(1.0, bits), Real(bits));
  for (int i = poly.k - 1; i >= 0; --i) acc = acc * z + poly.coeffs[i];
  return acc;
}

void eval_poly_deriv(const MonicPoly& poly, const BigComplex& z, BigComplex& value, BigComplex& deriv) {
  mpfr_prec_t bits = std::max<mpfr_prec_t>(poly.precision(), z.bits());
  value = BigComplex(Real(1.0, bits), Real(bits));
  deriv = BigComplex(bits);
  for (int i = poly.k - 1; i >= 0; --i) {
    deriv = deriv * z + value;
    value = value * z + poly.coeffs[i];
  }
}

double residual_check(const MonicPoly& poly, const MomentTable& mt) {
  const int k = poly.k;
  if (mt.k != k) fail_domain("residual_check: degree mismatch");
  mpfr_prec_t bits = mt.bits();
  Real scale(bits);
  for (int m = mt.m_lo; m <= mt.m_hi; ++m) scale = max(scale, abs(mt.at(m)));
  if (scale.is_zero()) return 0;
  std::vector<BigComplex> r = hankel_residual(mt, poly.coeffs, bits);
  Real rmax(bits);
  for (auto& x : r) rmax = max(rmax, abs(x));
  return (rmax / scale).to_double();
}

BigComplex pn_eval(const MonicPoly& poly, const BigComplex& lambda) {
  const ModelParams& p = poly.params;
  mpfr_prec_t bits = std::max<mpfr_prec_t>(poly.precision(), lambda.bits());
  Real t(p.t, bits);
  BigComplex ls = pow(BigComplex(lambda, bits), static_cast<long>(p.s));
  BigComplex z = 1.0 - ls / t;
  BigComplex v = eval_poly(poly, z) * pow(-t, static_cast<long>(poly.k));
  if (p.l > 0) v = v * pow(BigComplex(lambda, bits), static_cast<long>(p.l));
  return v;
}

double coeff_distance(const MonicPoly& a, const MonicPoly& b) {
  if (a.k != b.k) fail_domain("coeff_distance: degree mismatch");
  mpfr_prec_t bits = std::min(a.precision(), b.precision());
  Real scale(1.0, bits);
  for (auto& c : a.coeffs) scale = max(scale, abs(c));
  Real d(bits);
  for (int i = 0; i < a.k; ++i) d = max(d, abs(a.coeffs[i] - b.coeffs[i]));
  return (d / scale).to_double();
}

}  // namespace opal
