// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <vector>

#include "opal/moments.hpp"
#include "opal/params.hpp"

namespace opal {

// Monic pi_k(z) = z^k + sum_{i<k} a_i z^i, coefficients ascending.
struct MonicPoly {
  int k = 0;
  std::vector<BigComplex> coeffs;  // a_0 .. a_{k-1}
  ModelParams params;
  double gamma = 0;
  int bits = 0;
  double solve_residual = 0;  // residual_check right after the solve
  int refinement_rounds = 0;

  mpfr_prec_t precision() const { return static_cast<mpfr_prec_t>(bits); }
};

// Solves sum_i a_i I(i+j-k) = -I(j), j = 0..k-1.
MonicPoly orthopoly(const MomentTable& mt, const ModelParams& p = {});

// Moments plus solve, with the moment precision budget.
MonicPoly build_pi_k(const ModelParams& p, int k, const Precision& prec);

BigComplex eval_poly(const MonicPoly& poly, const BigComplex& z);
// pi_k and pi_k' together.
void eval_poly_deriv(const MonicPoly& poly, const BigComplex& z, BigComplex& value, BigComplex& deriv);

// max_j |sum_i a_i I(i+j-k) + I(j)| / max_m |I(m)|
double residual_check(const MonicPoly& poly, const MomentTable& mt);

// p_n(lambda) = (-t)^k lambda^l pi_k(1 - lambda^s / t)
BigComplex pn_eval(const MonicPoly& poly, const BigComplex& lambda);

// Largest relative coefficient difference between two polynomials of equal degree,
// measured against max_i |a_i| (and 1 for the leading coefficient).
double coeff_distance(const MonicPoly& a, const MonicPoly& b);

}  // namespace opal
