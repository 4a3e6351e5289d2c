// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/params.hpp"

#include <cmath>

#include "opal/error.hpp"

namespace opal {

void ModelParams::validate() const {
  if (s < 1) fail_domain("s must be >= 1");
  if (l < 0 || l > s - 1) fail_domain("l must lie in [0, s-1]");
  if (!(t > 0) || !std::isfinite(t)) fail_domain("t must be > 0");
  if (!(T > 0) || !std::isfinite(T)) fail_domain("T must be > 0");
}

const char* to_string(Regime r) {
  switch (r) {
    case Regime::PreCritical: return "pre-critical";
    case Regime::PostCritical: return "post-critical";
    case Regime::Critical: return "critical";
  }
  return "?";
}

DerivedParams derive(const ModelParams& p, mpfr_prec_t bits) {
  p.validate();
  DerivedParams d;
  Real T(p.T, bits), t(p.t, bits);
  d.t_c = sqrt(T / static_cast<double>(p.s));
  d.z0 = T / (t * t * static_cast<double>(p.s));
  d.gamma = rational(p.s - p.l - 1, p.s, bits);
  double dz = d.z0.to_double() - 1.0;
  if (std::fabs(dz) < kCriticalTol) {
    d.regime = Regime::Critical;
  } else {
    d.regime = dz > 0 ? Regime::PreCritical : Regime::PostCritical;
  }
  return d;
}

Real scaling_N(int k, const ModelParams& p, mpfr_prec_t bits) {
  if (k < 0) fail_domain("k must be >= 0");
  return Real(static_cast<long>(k) * p.s, bits) / Real(p.T, bits);
}

Real weight_c(int k, const ModelParams& p, mpfr_prec_t bits) {
  Real t(p.t, bits);
  return scaling_N(k, p, bits) * t * t;
}

void require_noncritical(const DerivedParams& d) {
  if (d.regime == Regime::Critical) fail_domain("critical regime (z0 = 1) is not supported by the asymptotic formulas");
}

}  // namespace opal
