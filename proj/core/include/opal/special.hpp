// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <array>

#include "opal/complex.hpp"

namespace opal {

// Gamma function of a real argument. Throws at nonpositive integers.
Real gamma_real(const Real& x, const Precision& prec);
// 1/Gamma(x); zero at the poles of Gamma.
Real rgamma_real(const Real& x, const Precision& prec);

enum class LogCut {
  NegRealAxis,  // principal branch, arg in (-pi, pi]
  PosRealAxis,  // arg in [0, 2pi); log_+ - log_- = -2 pi i across (0, inf)
};

BigComplex log_branch(const BigComplex& z, LogCut cut);

// Parabolic cylinder function U(a, xi): the solution of f'' = (xi^2/4 + a) f
// with U ~ xi^{-a-1/2} e^{-xi^2/4} for |arg xi| < pi/2.
BigComplex pcf_u(const Real& a, const BigComplex& xi, const Precision& prec);

// Which evaluation path pcf_u takes at xi (for tests and diagnostics).
enum class PcfPath { Series, Asymptotic };
PcfPath pcf_u_path(const Real& a, const BigComplex& xi, const Precision& prec);

// (1,2) entry of the abelian model problem near z = 1 (pre-critical case).
// Branch convention: the boundary value (zeta^gamma)_+ on R^- is taken from
// the upper half plane, so that xi * psi_tilde_12(xi) -> 1/Gamma(-gamma).
// Throws for xi on (-inf, 0].
BigComplex psi_tilde_12(const BigComplex& xi, const Real& gamma, const Precision& prec);
// Same off the cut; on (-inf, 0) returns the boundary value from above.
BigComplex psi_tilde_12_upper(const BigComplex& xi, const Real& gamma, const Precision& prec);

enum class Sector { Plus1, Plus2, Minus1, Minus2 };

// S+1: first quadrant, S+2: second, S-2: third, S-1: fourth.
Sector sector_of(const BigComplex& xi);

struct ModelMatrix {
  std::array<std::array<BigComplex, 2>, 2> m;
  Sector sector = Sector::Plus1;
};

struct ModelConstants {
  BigComplex beta12;
  BigComplex beta21;
  // Coefficients of the large-xi expansion.
  std::array<std::array<BigComplex, 2>, 2> psi1, psi2, psi3;
};

ModelConstants model_constants(const Real& gamma, const Precision& prec);

// Parabolic-cylinder model solution near z0 (post-critical case).
// Evaluates the branch belonging to `sector`; xi may lie on the sector's boundary
// so one-sided limits onto the jump rays can be taken exactly.
ModelMatrix model_psi_post(const BigComplex& xi, Sector sector, const Real& gamma, const Precision& prec);
ModelMatrix model_psi_post(const BigComplex& xi, const Real& gamma, const Precision& prec);

// Jump matrix on the four rays (R+, iR+, R-, -iR+), index 0..3.
std::array<std::array<BigComplex, 2>, 2> model_jump(int ray, const Real& gamma, mpfr_prec_t bits);

}  // namespace opal
