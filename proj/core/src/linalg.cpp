// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/linalg.hpp"

#include <cmath>

namespace opal {
namespace {

double log_abs(const BigComplex& z) {
  Real m = abs(z);
  if (m.is_zero()) return -INFINITY;
  long e;
  double d = mpfr_get_d_2exp(&e, m.get(), MPFR_RNDN);
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

// |re| + |im|, cheap modulus proxy for pivoting.
Real l1(const BigComplex& z) { return abs(z.re) + abs(z.im); }

}  // namespace

LUFactor lu_factor(const CMatrix& a) {
  const int n = a.n;
  LUFactor f;
  f.lu = a;
  f.perm.resize(n);
  mpfr_prec_t bits = n > 0 ? a(0, 0).bits() : 64;
  f.row_scale.assign(n, Real(1.0, bits));
  double log_scale_sum = 0;
  for (int i = 0; i < n; ++i) {
    f.perm[i] = i;
    Real mx(bits);
    for (int j = 0; j < n; ++j) mx = max(mx, abs(a(i, j)));
    if (mx.is_zero()) {
      f.singular = true;
      f.log_abs_det = -INFINITY;
      return f;
    }
    f.row_scale[i] = 1.0 / mx;
    for (int j = 0; j < n; ++j) f.lu(i, j) *= f.row_scale[i];
    log_scale_sum += log_abs(BigComplex(mx));
  }
  Real t1(bits), t2(bits);
  double max_piv = 0, min_piv = INFINITY;
  for (int k = 0; k < n; ++k) {
    int p = k;
    Real best = l1(f.lu(k, k));
    for (int i = k + 1; i < n; ++i) {
      Real v = l1(f.lu(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best.is_zero()) {
      f.singular = true;
      f.log_abs_det = -INFINITY;
      return f;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(p, j));
      std::swap(f.perm[k], f.perm[p]);
      ++f.det_sign_swaps;
    }
    BigComplex inv = 1.0 / f.lu(k, k);
    for (int i = k + 1; i < n; ++i) {
      f.lu(i, k) = f.lu(i, k) * inv;
      BigComplex mlt = -f.lu(i, k);
      for (int j = k + 1; j < n; ++j) fma_into(f.lu(i, j), mlt, f.lu(k, j), t1, t2);
    }
    double lp = log_abs(f.lu(k, k));
    f.log_abs_det += lp;
    max_piv = std::max(max_piv, std::exp(std::min(lp, 700.0)));
    min_piv = std::min(min_piv, std::exp(std::max(lp, -700.0)));
  }
  f.log_abs_det += log_scale_sum;
  f.min_pivot_ratio = max_piv > 0 ? min_piv / max_piv : 0;
  return f;
}

std::vector<BigComplex> lu_solve(const LUFactor& f, const std::vector<BigComplex>& b) {
  const int n = f.lu.n;
  mpfr_prec_t bits = n > 0 ? f.lu(0, 0).bits() : 64;
  std::vector<BigComplex> y(n);
  Real t1(bits), t2(bits);
  for (int i = 0; i < n; ++i) {
    y[i] = BigComplex(b[f.perm[i]] * f.row_scale[f.perm[i]], bits);
    for (int j = 0; j < i; ++j) fma_into(y[i], -f.lu(i, j), y[j], t1, t2);
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) fma_into(y[i], -f.lu(i, j), y[j], t1, t2);
    y[i] = y[i] / f.lu(i, i);
  }
  return y;
}

double condition_estimate(const LUFactor& f, const CMatrix& a) {
  // ||D A||_1 * est(||(D A)^{-1}||_1), with a few Hager iterations on the inverse.
  const int n = a.n;
  if (n == 0 || f.singular) return INFINITY;
  mpfr_prec_t bits = a(0, 0).bits();
  double norm_a = 0;
  for (int j = 0; j < n; ++j) {
    double s = 0;
    for (int i = 0; i < n; ++i) s += (abs(a(i, j)) * f.row_scale[i]).to_double();
    norm_a = std::max(norm_a, s);
  }
  // Power-like estimate: solve with a few right-hand sides and take the largest growth.
  double inv_est = 0;
  std::vector<BigComplex> x(n, BigComplex(bits));
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<BigComplex> b(n, BigComplex(bits));
    for (int i = 0; i < n; ++i) {
      double v = (trial == 0) ? 1.0 : ((i * 7 + trial * 3) % 5 - 2.0);
      // b is in the unscaled row space: A x = D^{-1} (D b).
      b[i] = BigComplex(Real(v, bits) / f.row_scale[i], Real(bits));
    }
    x = lu_solve(f, b);
    double xs = 0, bs = 0;
    for (int i = 0; i < n; ++i) {
      xs += abs(x[i]).to_double();
      bs += std::fabs((i * 7 + trial * 3) % 5 - 2.0) * (trial == 0 ? 0 : 1) + (trial == 0 ? 1.0 : 0.0);
    }
    inv_est = std::max(inv_est, xs / bs);
  }
  return norm_a * inv_est;
}

}  // namespace opal
