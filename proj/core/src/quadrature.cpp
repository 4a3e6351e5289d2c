// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/quadrature.hpp"

#include <cmath>

namespace opal {
namespace {

double rel_diff(const BigComplex& a, const BigComplex& b) {
  double scale = std::max(abs(a).to_double(), abs(b).to_double());
  if (scale == 0) return 0;
  return abs(a - b).to_double() / scale;
}

// Half-width of the t-range at which double-exponential weights fall below 2^-bits.
double t_max_for(mpfr_prec_t bits) {
  return std::log(4.0 * static_cast<double>(bits) * std::log(2.0) / M_PI) + 1.5;
}

}  // namespace

QuadResult tanh_sinh(const EndpointIntegrand& f, const Real& a, const Real& b, double rel_tol,
                     mpfr_prec_t bits, int max_levels) {
  const Real half_pi = pi(bits) / 2.0;
  const Real width = b - a;
  const double tmax = t_max_for(bits);

  QuadResult out;
  out.value = BigComplex(bits);

  // Node at parameter t: v = (pi/2) sinh t, x - a = width * e^{v} / (e^{v} + e^{-v}) etc.
  auto node = [&](const Real& t, BigComplex& acc) {
    Real v = half_pi * sinh(t);
    Real e2 = exp(v * 2.0);  // e^{2v}
    Real denom = e2 + 1.0;
    Real xa = width * e2 / denom;
    Real xb = width / denom;
    Real x = v.sign() < 0 ? a + xa : b - xb;
    Real ch = cosh(v);
    Real w = half_pi * cosh(t) / (ch * ch) * width / 2.0;
    if (xa.is_zero() || xb.is_zero()) return;
    acc += f(x, xa, xb) * w;
    ++out.evaluations;
  };

  // Level 0: step h = 1 over t in [-tmax, tmax].
  double h = 1.0;
  BigComplex sum(bits);
  long nmax = static_cast<long>(std::ceil(tmax / h));
  for (long j = -nmax; j <= nmax; ++j) node(Real(j * h, bits), sum);
  BigComplex prev = sum * Real(h, bits);

  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    nmax = static_cast<long>(std::ceil(tmax / h));
    // Only the odd nodes are new.
    for (long j = -nmax; j <= nmax; ++j) {
      if (j % 2 != 0) node(Real(j * h, bits), sum);
    }
    BigComplex cur = sum * Real(h, bits);
    out.err_estimate = rel_diff(cur, prev);
    out.levels = level;
    out.value = cur;
    // Convergence is quadratic in the number of levels; once the change
    // is tiny the new value is already far more accurate than the estimate.
    if (level >= 3 && out.err_estimate < std::sqrt(rel_tol) * 1e-2) break;
    if (out.err_estimate < rel_tol && level >= 3) break;
    prev = cur;
  }
  return out;
}

QuadResult exp_sinh(const HalfLineIntegrand& f, double rel_tol, mpfr_prec_t bits, int max_levels) {
  const Real half_pi = pi(bits) / 2.0;
  const double tmax = t_max_for(bits) + 0.5;
  QuadResult out;
  out.value = BigComplex(bits);

  auto node = [&](const Real& t, BigComplex& acc) {
    Real x = exp(half_pi * sinh(t));
    Real w = half_pi * cosh(t) * x;
    BigComplex fx = f(x);
    acc += fx * w;
    ++out.evaluations;
  };

  double h = 1.0;
  BigComplex sum(bits);
  // Lower end decays double-exponentially through x -> 0; upper end needs x
  // only up to about bits*ln2 for exponentially decaying integrands.
  const double tlo = -tmax;
  const double thi = std::asinh(std::log(static_cast<double>(bits) * 4.0 + 64.0) / (M_PI / 2)) + 0.5;
  auto run_level = [&](double hh, bool odd_only) {
    long jlo = static_cast<long>(std::floor(tlo / hh));
    long jhi = static_cast<long>(std::ceil(thi / hh));
    for (long j = jlo; j <= jhi; ++j) {
      if (odd_only && j % 2 == 0) continue;
      node(Real(j * hh, bits), sum);
    }
  };
  run_level(h, false);
  BigComplex prev = sum * Real(h, bits);
  for (int level = 1; level <= max_levels; ++level) {
    h /= 2;
    run_level(h, true);
    BigComplex cur = sum * Real(h, bits);
    out.err_estimate = rel_diff(cur, prev);
    out.levels = level;
    out.value = cur;
    if (level >= 3 && out.err_estimate < std::sqrt(rel_tol) * 1e-2) break;
    if (out.err_estimate < rel_tol && level >= 3) break;
    prev = cur;
  }
  return out;
}

}  // namespace opal
