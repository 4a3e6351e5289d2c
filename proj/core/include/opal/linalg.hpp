// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "opal/complex.hpp"

namespace opal {

// Dense row-major complex matrix.
struct CMatrix {
  int n = 0;
  std::vector<BigComplex> a;

  CMatrix() = default;
  CMatrix(int size, mpfr_prec_t bits) : n(size), a(static_cast<size_t>(size) * size, BigComplex(bits)) {}
  BigComplex& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const BigComplex& operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// LU factorization with row scaling and partial pivoting: P D A = L U,
// where D scales each row by the inverse of its largest modulus.
struct LUFactor {
  CMatrix lu;
  std::vector<int> perm;        // row permutation
  std::vector<Real> row_scale;  // D
  double log_abs_det = 0;       // log|det A|
  int det_sign_swaps = 0;
  double min_pivot_ratio = 1;   // min |u_ii| / max |u_ii| (in scaled form)
  bool singular = false;
};

LUFactor lu_factor(const CMatrix& a);
std::vector<BigComplex> lu_solve(const LUFactor& f, const std::vector<BigComplex>& b);
// Inexpensive 1-norm condition estimate of the row-scaled matrix (Hager's method).
double condition_estimate(const LUFactor& f, const CMatrix& a);

}  // namespace opal
