// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "opal/complex.hpp"
#include "opal/params.hpp"

namespace opal {

struct MomentMeta {
  double radius_neg = 0;  // circle used for m < 0
  double radius_pos = 0;  // circle used for m >= 0
  long nodes = 0;
  int bits = 0;
  int doublings = 0;
  double achieved_rel_err = 0;
  int cancellation_warnings = 0;  // moments that lost more than bits/2 to cancellation
  std::vector<std::string> warnings;
};

// I(m) = \oint z^m e^{-c z} (z/(z-1))^gamma dz, counter-clockwise around [0, 1],
// for m in [m_lo, m_hi]. (z/(z-1))^gamma is the branch analytic off [0, 1] tending to 1 at infinity.
struct MomentTable {
  int k = 0;
  int m_lo = 0;
  int m_hi = 0;
  Real c;
  Real gamma;
  std::vector<BigComplex> values;
  std::vector<double> rel_err;  // per-moment change over the last doubling
  MomentMeta meta;

  const BigComplex& at(int m) const { return values[static_cast<size_t>(m - m_lo)]; }
  mpfr_prec_t bits() const { return static_cast<mpfr_prec_t>(meta.bits); }
};

// One trapezoidal evaluation on |z| = R with M nodes at the given precision (no convergence loop).
std::vector<BigComplex> moments_on_circle(const Real& c, const Real& gamma, int m_lo, int m_hi, const Real& R,
                                          long M, mpfr_prec_t bits, int* cancellation_bits = nullptr);

// Radius rule: R = max(1.25, z0 (k - mbar)/k) clamped to [1.25, 4].
double moment_radius(double z0, int k, double mbar);

// Starting precision 128 + ceil(1.5 k log2(e) / z0).
int moment_start_bits(int k, double z0);

struct MomentOptions {
  int max_doublings = 5;
  double radius_scale = 1.0;  // multiplies the radius rule (radius-independence checks)
  bool pin_radius = false;    // use `radius` for both blocks
  double radius = 0;
};

// Full table with (M, bits) doubling until successive tables agree to prec.target_rel_err.
// prec.mantissa_bits is a floor for the starting precision.
MomentTable compute_moments(const ModelParams& p, int k, const Precision& prec, const MomentOptions& opt = {});

// Same with the weight exponent c given explicitly (c need not equal k / z0).
MomentTable compute_moments_c(const Real& c, const Real& gamma, double z0, int k, int m_lo, int m_hi,
                              const Precision& prec, const MomentOptions& opt = {});

struct HankelReport {
  double det_magnitude_log = 0;  // natural log of |det [I(i+j-k)]|
  double condition_estimate = 0;
  double min_pivot_ratio = 0;
};

HankelReport hankel_nonvanishing(const MomentTable& mt);

// Planar versus contour form of the orthogonality integrals:
//   int_C q(u) conj(u)^j |u|^{-2 gamma} e^{-N(|u|^2 - t u - t conj(u))} dA
//   = pi Gamma(j-gamma+1) / N^{j-gamma+1} * (1/2 pi i) \oint q(u) e^{N t u} (u-t)^{-j-1} (1 - t/u)^gamma du.
struct PlanarContourResult {
  BigComplex planar;
  BigComplex contour;
  double residual = 0;  // |planar - contour| / |contour|
};

// q is given by its ascending coefficients.
PlanarContourResult planar_contour_identity_check(double gamma, double N, double t, int j,
                                                  const std::vector<std::complex<double>>& q, const Precision& prec);

}  // namespace opal
