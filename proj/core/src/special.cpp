// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/special.hpp"

#include <cmath>
#include <vector>

#include "opal/error.hpp"
#include "opal/quadrature.hpp"

namespace opal {
namespace {

bool is_nonpositive_integer(const Real& x) {
  return x.sign() <= 0 && mpfr_integer_p(x.get());
}

}  // namespace

Real gamma_real(const Real& x, const Precision& prec) {
  if (!x.is_finite()) fail_domain("gamma_real: non-finite argument");
  if (is_nonpositive_integer(x)) fail_domain("gamma_real: pole at nonpositive integer");
  mpfr_prec_t bits = prec.mantissa_bits;
  Real xx(x, bits + 16);
  if (xx < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    Real p = pi(bits + 16);
    Real g1 = gamma_real(1.0 - xx, prec.with_bits(bits + 16));
    return Real(p / (sin(p * xx) * g1), bits);
  }
  Real r(bits + 16);
  mpfr_gamma(r.get(), xx.get(), MPFR_RNDN);
  return Real(r, bits);
}

Real rgamma_real(const Real& x, const Precision& prec) {
  if (is_nonpositive_integer(x)) return Real(mpfr_prec_t(prec.mantissa_bits));
  return 1.0 / gamma_real(x, prec);
}

BigComplex log_branch(const BigComplex& z, LogCut cut) {
  if (z.re.is_zero() && z.im.is_zero()) fail_domain("log_branch: z = 0");
  if (cut == LogCut::NegRealAxis) {
    if (z.im.is_zero() && z.re.sign() < 0) fail_domain("log_branch: z on the cut (-inf, 0]");
    return log(z);
  }
  if (z.im.is_zero() && z.re.sign() > 0) {
    // On (0, inf) only the upper boundary value (arg = 0) is returned.
  }
  BigComplex w = log(z);
  if (w.im.sign() < 0) w.im += pi(w.im.bits()) * 2.0;
  return w;
}

// ---------------------------------------------------------------------------
// Parabolic cylinder function.

namespace {

// Extra bits the Maclaurin series needs at |xi|: the terms grow like
// e^{|xi|^2/4} while U may be as small as e^{-|xi|^2/4}.
long series_guard_bits(double absxi, double absa) {
  double g = absxi * absxi / (2.0 * std::log(2.0));
  g += (absa + 1.0) * std::log2(1.0 + absxi) * 2.0;
  return static_cast<long>(std::ceil(g)) + 32;
}

BigComplex pcf_series(const Real& a_in, const BigComplex& xi, mpfr_prec_t bits) {
  double absxi = abs(xi).to_double();
  mpfr_prec_t wp = bits + series_guard_bits(absxi, std::fabs(a_in.to_double()));
  Real a(a_in, wp);
  BigComplex z(xi, wp);
  Precision gp{static_cast<int>(wp), 0};

  // U(a,0) = sqrt(pi) / (2^{a/2+1/4} Gamma(3/4 + a/2)),
  // U'(a,0) = -sqrt(pi) / (2^{a/2-1/4} Gamma(1/4 + a/2)).
  Real sp = sqrt(pi(wp));
  Real two(2.0, wp);
  Real c0 = sp * rgamma_real(a / 2.0 + 0.75, gp) / pow(two, a / 2.0 + 0.25);
  Real c1 = -sp * rgamma_real(a / 2.0 + 0.25, gp) / pow(two, a / 2.0 - 0.25);

  // f'' = (z^2/4 + a) f  =>  (n+2)(n+1) c_{n+2} = a c_n + c_{n-2}/4.
  std::vector<Real> c;
  c.reserve(256);
  c.push_back(c0);
  c.push_back(c1);

  BigComplex sum(wp), zn(Real(1.0, wp), Real(wp));
  Real maxterm(wp);
  Real t1(wp), t2(wp);
  const double nmin = absxi * absxi / 2.0 + 8.0;
  int small_run = 0;
  for (long n = 0;; ++n) {
    if (n >= 2) {
      Real next = a * c[n - 2];
      if (n >= 4) next += c[n - 4] / 4.0;
      next /= static_cast<double>(n * (n - 1));
      c.push_back(std::move(next));
    }
    BigComplex term = zn * c[n];
    sum += term;
    Real at = abs(term);
    if (at > maxterm) maxterm = at;
    zn = zn * z;
    bool small = at.is_zero() || (maxterm.is_zero() ? true : (at.exponent() < maxterm.exponent() - static_cast<long>(wp) - 4));
    small_run = small ? small_run + 1 : 0;
    if (n > nmin && small_run >= 4) break;
    if (n > 200000) fail_numeric("pcf_u: Maclaurin series did not terminate");
  }
  return BigComplex(sum, bits);
}

// Returns false if the asymptotic series cannot reach 2^{-bits}.
bool pcf_asymptotic(const Real& a_in, const BigComplex& xi, mpfr_prec_t bits, BigComplex& out) {
  mpfr_prec_t wp = bits + 32;
  Real a(a_in, wp);
  BigComplex z(xi, wp);
  BigComplex z2 = z * z;
  BigComplex inv2z2 = 1.0 / (z2 * 2.0);
  BigComplex term(Real(1.0, wp), Real(wp));
  BigComplex sum = term;
  Real prev_abs(1e300, wp);
  for (long s = 0;; ++s) {
    // t_{s+1} = -t_s (a+1/2+2s)(a+3/2+2s) / ((s+1) 2 z^2)
    Real num = (a + (0.5 + 2.0 * s)) * (a + (1.5 + 2.0 * s));
    term = term * inv2z2 * (num / static_cast<double>(-(s + 1)));
    Real at = abs(term);
    if (at.is_zero() || at.exponent() < -static_cast<long>(bits) - 8) break;
    if (s > 4 && at > prev_abs) return false;
    prev_abs = at;
    sum += term;
    if (s > 100000) return false;
  }
  // xi^{-a-1/2} e^{-xi^2/4}, principal power.
  BigComplex pref = exp(log(z) * (-(a + 0.5)) - z2 / 4.0);
  out = BigComplex(pref * sum, bits);
  return true;
}

}  // namespace

PcfPath pcf_u_path(const Real& a, const BigComplex& xi, const Precision& prec) {
  double r = abs(xi).to_double();
  double absa = std::fabs(a.to_double());
  double threshold = std::max(25.0, 4.0 * absa);
  if (r < threshold) return PcfPath::Series;
  // Asymptotic series used only in the closed right half plane.
  if (xi.re.to_double() < -1e-12 * r) return PcfPath::Series;
  // Its optimal truncation error is about e^{-|xi|^2/2}.
  if (r * r / 2.0 < (prec.mantissa_bits + 16) * std::log(2.0)) return PcfPath::Series;
  return PcfPath::Asymptotic;
}

BigComplex pcf_u(const Real& a, const BigComplex& xi, const Precision& prec) {
  if (!xi.is_finite() || !a.is_finite()) fail_domain("pcf_u: non-finite input");
  mpfr_prec_t bits = prec.mantissa_bits;
  if (pcf_u_path(a, xi, prec) == PcfPath::Asymptotic) {
    BigComplex out;
    if (pcf_asymptotic(a, xi, bits, out)) return out;
  }
  return pcf_series(a, xi, bits);
}

// ---------------------------------------------------------------------------
// Abelian model problem near z = 1.
//
// The jump on R^- (oriented towards 0, "+" side = upper half plane) is
// (1 - e^{-2 gamma pi i}) (zeta^gamma)_+ e^zeta with (zeta^gamma)_+ = |zeta|^gamma e^{i pi gamma}.
// Plemelj gives psi_12(xi) = (1/2 pi i) int_{-inf}^0 jump / (zeta - xi) d zeta, and with
// zeta = -r this is  -(sin(pi gamma)/pi) int_0^inf r^gamma e^{-r} / (r + xi) dr.
// The large-xi limit is then -sin(pi gamma) Gamma(1+gamma) / (pi xi) = 1/(Gamma(-gamma) xi).

namespace {

BigComplex psi_tilde_12_impl(const BigComplex& xi, const Real& gamma, const Precision& prec) {
  if (!(gamma > 0.0) || !(gamma < 1.0)) fail_domain("psi_tilde_12: gamma must lie in (0, 1)");
  mpfr_prec_t wp = prec.mantissa_bits + 32;
  Real g(gamma, wp);
  BigComplex x(xi, wp);
  // For Re xi < 0 the ray r = rho e^{i alpha} is turned away from the pole at r = -xi,
  // alpha = +pi/4 for Im xi >= 0. On the cut this yields the upper boundary value.
  const bool rotate = x.re.sign() < 0;
  const double alpha = rotate ? (x.im.sign() >= 0 ? M_PI / 4 : -M_PI / 4) : 0.0;
  BigComplex dir = polar(Real(1.0, wp), Real(alpha, wp));
  BigComplex dir_g = polar(Real(1.0, wp), g * alpha);  // e^{i alpha gamma}
  auto f = [&](const Real& r) {
    if (!rotate) {
      Real mag = exp(g * log(r) - r);
      return BigComplex(mag, Real(wp)) / (x + r);
    }
    BigComplex rr = dir * r;
    BigComplex num = exp(BigComplex(g * log(r), Real(wp)) - rr) * dir_g * dir;
    return num / (x + rr);
  };
  double tol = std::max(prec.target_rel_err, std::ldexp(1.0, -prec.mantissa_bits));
  QuadResult q = exp_sinh(f, tol, wp, 14);
  if (q.err_estimate > std::sqrt(tol)) fail_numeric("psi_tilde_12: quadrature did not converge");
  Real p = pi(wp);
  Real pref = -sin(p * g) / p;
  return BigComplex(q.value * pref, prec.mantissa_bits);
}

}  // namespace

BigComplex psi_tilde_12(const BigComplex& xi, const Real& gamma, const Precision& prec) {
  if (xi.im.is_zero() && xi.re.sign() <= 0) fail_domain("psi_tilde_12: xi on (-inf, 0]");
  return psi_tilde_12_impl(xi, gamma, prec);
}

BigComplex psi_tilde_12_upper(const BigComplex& xi, const Real& gamma, const Precision& prec) {
  if (xi.im.is_zero() && xi.re.is_zero()) fail_domain("psi_tilde_12_upper: xi = 0");
  return psi_tilde_12_impl(xi, gamma, prec);
}

// ---------------------------------------------------------------------------
// Parabolic-cylinder model problem.

Sector sector_of(const BigComplex& xi) {
  bool upper = xi.im.sign() >= 0;
  bool right = xi.re.sign() >= 0;
  if (upper) return right ? Sector::Plus1 : Sector::Plus2;
  return right ? Sector::Minus1 : Sector::Minus2;
}

ModelConstants model_constants(const Real& gamma_in, const Precision& prec) {
  mpfr_prec_t bits = prec.mantissa_bits;
  Real g(gamma_in, bits);
  Real p = pi(bits);
  // beta12 = -e^{-i pi gamma} sqrt(pi) gamma / (Gamma(1-gamma) 2^gamma),  beta21 = gamma / (2 beta12).
  Real mag = sqrt(p) * g / (gamma_real(1.0 - g, prec) * pow(Real(2.0, bits), g));
  ModelConstants mc;
  mc.beta12 = -polar(mag, -(p * g));
  mc.beta21 = BigComplex(g / 2.0, Real(bits)) / mc.beta12;
  BigComplex zero(bits);
  BigComplex h = BigComplex(g / 2.0, Real(bits));
  mc.psi1 = {{{zero, h / mc.beta21}, {h / mc.beta12, zero}}};
  Real q11 = -(g * (g - 1.0)) / 4.0;
  Real q22 = g * (g + 1.0) / 4.0;
  mc.psi2 = {{{BigComplex(q11, Real(bits)), zero}, {zero, BigComplex(q22, Real(bits))}}};
  Real e8 = g / 8.0;
  BigComplex p12 = BigComplex(e8 * (g + 1.0) * (g + 2.0), Real(bits)) / mc.beta21;
  BigComplex p21 = BigComplex(-(e8 * (g - 1.0) * (g - 2.0)), Real(bits)) / mc.beta12;
  mc.psi3 = {{{zero, p12}, {p21, zero}}};
  return mc;
}

ModelMatrix model_psi_post(const BigComplex& xi, Sector sector, const Real& gamma_in, const Precision& prec) {
  if (!(gamma_in > 0.0) || !(gamma_in < 1.0)) fail_domain("model_psi_post: gamma must lie in (0, 1)");
  mpfr_prec_t bits = prec.mantissa_bits;
  mpfr_prec_t wp = bits + 16;
  Precision wprec = prec.with_bits(static_cast<int>(wp));
  Real g(gamma_in, wp);
  Real p = pi(wp);
  ModelConstants mc = model_constants(g, wprec);
  const bool plus = sector == Sector::Plus1 || sector == Sector::Plus2;
  const bool first = sector == Sector::Plus1 || sector == Sector::Minus1;
  const double sg = plus ? 1.0 : -1.0;

  Real r2 = sqrt(Real(2.0, wp));
  BigComplex s = BigComplex(xi, wp) * r2;              // sqrt(2) xi
  BigComplex eta = mul_i(s) * (-sg);                    // -+ i sqrt(2) xi
  BigComplex e1 = polar(Real(1.0, wp), p * g * (-sg / 2.0));  // e^{-+ i pi gamma / 2}

  ModelMatrix out;
  out.sector = sector;
  // Second column is common to S_{+-1} and S_{+-2}.
  BigComplex u12 = pcf_u(g + 0.5, eta, wprec);
  BigComplex u22 = pcf_u(g - 0.5, eta, wprec);
  BigComplex c12 = mul_i(e1) * (g * (-sg)) / (mc.beta21 * r2);
  out.m[0][1] = c12 * u12;
  out.m[1][1] = e1 * u22;
  BigComplex c21 = BigComplex(g, Real(wp)) / (mc.beta12 * r2);
  if (first) {
    out.m[0][0] = pcf_u(-g - 0.5, s, wprec);
    out.m[1][0] = c21 * pcf_u(-g + 0.5, s, wprec);
  } else {
    BigComplex e2 = polar(Real(1.0, wp), p * g * sg);  // e^{+- i pi gamma}
    BigComplex ms = -s;
    out.m[0][0] = e2 * pcf_u(-g - 0.5, ms, wprec);
    out.m[1][0] = -(c21 * e2) * pcf_u(-g + 0.5, ms, wprec);
  }
  // Right factor 2^{-gamma sigma_3 / 2}.
  Real f = pow(Real(2.0, wp), -(g / 2.0));
  Real finv = 1.0 / f;
  for (int i = 0; i < 2; ++i) {
    out.m[i][0] = BigComplex(out.m[i][0] * f, bits);
    out.m[i][1] = BigComplex(out.m[i][1] * finv, bits);
  }
  return out;
}

ModelMatrix model_psi_post(const BigComplex& xi, const Real& gamma, const Precision& prec) {
  if (xi.re.is_zero() || xi.im.is_zero()) fail_domain("model_psi_post: xi on the jump contour R u iR");
  return model_psi_post(xi, sector_of(xi), gamma, prec);
}

std::array<std::array<BigComplex, 2>, 2> model_jump(int ray, const Real& gamma_in, mpfr_prec_t bits) {
  Real g(gamma_in, bits);
  Real p = pi(bits);
  BigComplex one(Real(1.0, bits), Real(bits));
  BigComplex zero(bits);
  BigComplex e2p = polar(Real(1.0, bits), p * g * 2.0);     // e^{2 gamma pi i}
  BigComplex e2m = polar(Real(1.0, bits), -(p * g * 2.0));  // e^{-2 gamma pi i}
  switch (ray) {
    case 0: return {{{one, one - e2m}, {zero, one}}};
    case 1: return {{{one, zero}, {e2p, one}}};
    case 2: return {{{e2p, one - e2m}, {zero, e2m}}};
    case 3: return {{{one, zero}, {-one, one}}};
    default: fail_domain("model_jump: ray index must be 0..3");
  }
}

}  // namespace opal
