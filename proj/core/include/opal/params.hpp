// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>

#include "opal/real.hpp"

namespace opal {

// Symmetry order s, residue class l = n mod s, deformation t, scaling T = lim n/N.
struct ModelParams {
  int s = 1;
  int l = 0;
  double t = 0.5;
  double T = 1.0;

  void validate() const;
};

enum class Regime { PreCritical, PostCritical, Critical };

const char* to_string(Regime r);

inline constexpr double kCriticalTol = 1e-12;

struct DerivedParams {
  Real t_c;    // sqrt(T/s)
  Real z0;     // t_c^2 / t^2
  Real gamma;  // (s-l-1)/s
  Regime regime = Regime::PreCritical;

  double z0_d() const { return z0.to_double(); }
  double gamma_d() const { return gamma.to_double(); }
};

DerivedParams derive(const ModelParams& p, mpfr_prec_t bits = 128);

// N = (n-l)/T = k s / T for n = k s + l.
Real scaling_N(int k, const ModelParams& p, mpfr_prec_t bits = 128);
// Moment weight exponent c = N t^2 = k / z0.
Real weight_c(int k, const ModelParams& p, mpfr_prec_t bits = 128);

// Moment index n of p_n for given k.
inline int degree_n(int k, const ModelParams& p) { return k * p.s + p.l; }

// Throws unless the regime is Pre- or PostCritical.
void require_noncritical(const DerivedParams& d);

}  // namespace opal
