// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <functional>

#include "opal/complex.hpp"

namespace opal {

// Integrand on a finite interval. Receives x together with the exact
// distances x - a and b - x so endpoint singularities keep full relative accuracy.
using EndpointIntegrand = std::function<BigComplex(const Real& x, const Real& xa, const Real& xb)>;
using HalfLineIntegrand = std::function<BigComplex(const Real& x)>;

struct QuadResult {
  BigComplex value;
  double err_estimate = 0;  // relative, from successive level halving
  int levels = 0;
  long evaluations = 0;
};

// Double-exponential (tanh-sinh) rule on [a, b]. Stops when two successive
// levels agree to rel_tol or max_levels is reached.
QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& a, const Real& b, double rel_tol,
                     mpfr_prec_t bits, int max_levels = 12);

// exp-sinh rule on [0, inf). The integrand must decay at infinity.
QuadResult exp_sinh(const HalfLineIntegrand& f, double rel_tol, mpfr_prec_t bits, int max_levels = 12);

}  // namespace opal
