// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "opal/error.hpp"
#include "opal/quadrature.hpp"

namespace opal {
namespace {

using cd = std::complex<double>;

BigComplex unit_root(int j, int s, mpfr_prec_t bits) {
  Real ang = pi(bits) * 2.0 * static_cast<double>(j) / static_cast<double>(s);
  return polar(Real(1.0, bits), ang);
}

// Principal s-th root; exact zero maps to zero.
BigComplex root_s(const BigComplex& w, int s) {
  if (s == 1) return w;
  if (w.re.is_zero() && w.im.is_zero()) return BigComplex(w.bits());
  return pow(w, rational(1, s, w.bits()));
}

BigComplex unfold_principal(const BigComplex& z, const ModelParams& p) {
  mpfr_prec_t bits = z.bits();
  return root_s((1.0 - z) * Real(p.t, bits), p.s);
}

bool is_corner(const PhiFunction& f) {
  return (abs(f.r - f.z0) <= f.z0 * 1e-12);
}

// Newton on log(psi_r(z) e^{-i theta}) = 0.
bool newton_level(const PhiFunction& f, const Real& theta, BigComplex& z) {
  const mpfr_prec_t bits = f.bits();
  BigComplex rot = polar(Real(1.0, bits), -theta);
  Real tol = ldexp(Real(1.0, bits), -static_cast<long>(bits) + 12);
  Real last(bits);
  for (int it = 0; it < 80; ++it) {
    if (z.re.is_zero() && z.im.is_zero()) return false;
    BigComplex g = log(psi_eval(f, z) * rot);
    BigComplex dg = 1.0 / z - 1.0 / f.z0;
    if (dg.re.is_zero() && dg.im.is_zero()) return false;
    BigComplex dz = g / dg;
    z -= dz;
    Real a = abs(dz);
    if (!a.is_finite()) return false;
    if (a <= tol * (abs(z) + 1.0)) return true;
    if (it > 6 && a > last * 0.9 && it > 40) return false;
    last = a;
  }
  return false;
}

// Continuation from (theta_a, za) to theta_b with step halving.
bool continue_to(const PhiFunction& f, double theta_a, const BigComplex& za, double theta_b, BigComplex& zb, int depth) {
  const mpfr_prec_t bits = f.bits();
  Real dth(theta_b - theta_a, bits);
  BigComplex tangent = BigComplex(Real(bits), Real(1.0, bits)) / (1.0 / za - 1.0 / f.z0);
  BigComplex guess = za + tangent * dth;
  BigComplex z = guess;
  Real target = Real(theta_b, bits);
  if (newton_level(f, target, z)) {
    Real step = abs(guess - za);
    if (abs(z - za) <= step * 4.0 + ldexp(Real(1.0, bits), -40)) {
      zb = z;
      return true;
    }
  }
  if (depth >= 30) return false;
  double mid = 0.5 * (theta_a + theta_b);
  BigComplex zm(bits);
  if (!continue_to(f, theta_a, za, mid, zm, depth + 1)) return false;
  return continue_to(f, mid, zm, theta_b, zb, depth + 1);
}

// Derivative of log F for the deformed-curve modulus F.
BigComplex deformed_log_derivative(const ModelParams& p, const DerivedParams& d, const BigComplex& z,
                                   DeformedForm form) {
  const Real& g = d.gamma;
  if (d.regime != Regime::PostCritical) return g / z - (g + 1.0) / (z - 1.0);
  BigComplex out = g / z + g / (z - 1.0) - (g * 2.0) / (z - d.z0);
  if (form == DeformedForm::Corrected) out -= 1.0 / (z - d.z0);
  (void)p;
  return out;
}

}  // namespace

PhiFunction make_phi_r(const ModelParams& p, const Real& r, const Precision& prec) {
  mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  PhiFunction f;
  f.regime = d.regime;
  f.r = Real(r, bits);
  f.z0 = d.z0;
  f.cut = d.regime == Regime::PostCritical ? LogCut::PosRealAxis : LogCut::NegRealAxis;
  if (f.r.sign() <= 0) fail_domain("make_phi_r: r must be positive");
  return f;
}

PhiFunction make_phi(const ModelParams& p, const Precision& prec) {
  DerivedParams d = derive(p, prec.mantissa_bits);
  Real r = d.regime == Regime::PostCritical ? d.z0 : Real(1.0, prec.mantissa_bits);
  return make_phi_r(p, r, prec);
}

BigComplex phi_eval(const PhiFunction& f, const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) fail_domain("phi_eval: z = 0");
  BigComplex w = z / f.r;
  BigComplex lg = f.cut == LogCut::NegRealAxis ? log(w) : log_branch(w, LogCut::PosRealAxis);
  return lg - (z - f.r) / f.z0;
}

Real re_phi(const PhiFunction& f, const BigComplex& z) {
  return log(abs(z) / f.r) - (z.re - f.r) / f.z0;
}

BigComplex psi_eval(const PhiFunction& f, const BigComplex& z) {
  return (z / f.r) * exp((f.r - z) / f.z0);
}

BigComplex hat_phi_eval(const ModelParams& p, const Real& r, const BigComplex& lambda) {
  mpfr_prec_t bits = std::max(lambda.bits(), r.bits());
  DerivedParams d = derive(p, bits);
  Real t(p.t, bits);
  BigComplex ls = pow(BigComplex(lambda, bits), static_cast<long>(p.s));
  BigComplex a = t - ls;
  if (a.re.is_zero() && a.im.is_zero()) fail_domain("hat_phi_eval: lambda^s = t");
  return log(a) + ls / (t * d.z0) - log(r * t) + (r - 1.0) / d.z0;
}

std::vector<std::vector<cd>> polylines(const CurveSample& cs, Plane plane) {
  std::vector<std::vector<cd>> out(static_cast<size_t>(std::max(cs.components, 1)));
  for (const auto& pt : cs.points) {
    size_t b = static_cast<size_t>(std::clamp(pt.branch, 0, cs.components - 1));
    out[b].push_back(plane == Plane::Z ? pt.z.to_cd() : pt.lambda.to_cd());
  }
  if (cs.closed) {
    for (auto& line : out)
      if (!line.empty()) line.push_back(line.front());
  }
  return out;
}

namespace {

// theta = 2 pi x(tau) with x' = (8/3) sin^4(pi tau): clusters nodes at theta = 0.
double graded_x(double tau) {
  return tau - 2.0 / (3.0 * M_PI) * std::sin(2 * M_PI * tau) + 1.0 / (12.0 * M_PI) * std::sin(4 * M_PI * tau);
}
double graded_dx(double tau) {
  double s = std::sin(M_PI * tau);
  return 8.0 / 3.0 * s * s * s * s;
}

}  // namespace

CurveSample trace_curve(const PhiFunction& f, int M, const ModelParams& p, ThetaGrid grid) {
  if (M < 64) fail_domain("trace_curve: M must be at least 64");
  if (f.r > f.z0 * (1.0 + 1e-12)) fail_domain("trace_curve: requires r <= z0");
  const mpfr_prec_t bits = f.bits();
  const double two_pi = 2.0 * M_PI;
  std::vector<BigComplex> zs(static_cast<size_t>(M));
  zs[0] = BigComplex(f.r, Real(bits));

  // The curve is symmetric under conjugation: trace the upper half, mirror the rest.
  const int half = M / 2;
  const bool corner = is_corner(f);
  auto theta_of = [&](int j) {
    double tau = static_cast<double>(j) / M;
    return two_pi * (grid == ThetaGrid::Graded ? graded_x(tau) : tau);
  };
  for (int j = 1; j <= half; ++j) {
    double th_a = theta_of(j - 1);
    double th_b = theta_of(j);
    BigComplex z(bits);
    bool ok;
    if (j == 1 && corner) {
      // psi = 1 - (z - r)^2/(2 r^2) + ...: the curve leaves the corner at angle 3 pi/4.
      Real th(th_b, bits);
      Real rho = f.r * sqrt(th * 2.0);
      z = BigComplex(f.r, Real(bits)) + polar(rho, pi(bits) * 0.75);
      ok = newton_level(f, th, z);
    } else {
      ok = continue_to(f, th_a, zs[j - 1], th_b, z, 0);
    }
    if (!ok) fail_numeric("trace_curve: continuation failed at theta index " + std::to_string(j));
    zs[j] = z;
  }
  if (M % 2 == 0) {
    // Exactly on the negative axis; theta = pi is not representable, so finish with
    // real Newton steps on log|x/r| - (x - r)/z0 = 0.
    zs[half].im = Real(bits);
    Real& x = zs[half].re;
    for (int it = 0; it < 8; ++it) x -= (log(abs(x) / f.r) - (x - f.r) / f.z0) / (1.0 / x - 1.0 / f.z0);
  }
  for (int j = half + 1; j < M; ++j) zs[j] = conj(zs[M - j]);

  CurveSample cs;
  cs.plane = Plane::Z;
  cs.components = 1;
  cs.closed = true;
  cs.r = f.r.to_double();
  cs.points.resize(static_cast<size_t>(M));
  for (int j = 0; j < M; ++j) {
    CurvePoint& pt = cs.points[j];
    pt.theta = theta_of(j);
    pt.z = zs[j];
    pt.lambda = unfold_principal(zs[j], p);
    pt.branch = 0;
    pt.nu_weight = grid == ThetaGrid::Graded ? graded_dx(static_cast<double>(j) / M) / M : 1.0 / M;
  }
  return cs;
}

CurveSample hat_curve(const ModelParams& p, const Real& r, int M, const Precision& prec, ThetaGrid grid) {
  PhiFunction f = make_phi_r(p, r, prec);
  CurveSample base = trace_curve(f, M, p, grid);
  const mpfr_prec_t bits = prec.mantissa_bits;
  CurveSample cs;
  cs.plane = Plane::Lambda;
  cs.components = p.s;
  cs.closed = true;
  cs.r = base.r;
  cs.points.reserve(static_cast<size_t>(M) * p.s);
  for (int j = 0; j < p.s; ++j) {
    BigComplex w = unit_root(j, p.s, bits);
    for (const auto& bp : base.points) {
      CurvePoint pt = bp;
      pt.lambda = bp.lambda * w;
      pt.branch = j;
      pt.nu_weight = bp.nu_weight / p.s;
      cs.points.push_back(std::move(pt));
    }
  }
  return cs;
}

std::vector<cd> nu_increments(const CurveSample& cs, const PhiFunction& f) {
  // Exact integral of (1/2 pi i)(1/z - 1/z0) dz along each chord:
  // (Log(zb/za) - (zb - za)/z0) / (2 pi i).
  std::vector<cd> out;
  const double scale = cs.plane == Plane::Lambda ? 1.0 / cs.components : 1.0;
  for (int b = 0; b < cs.components; ++b) {
    std::vector<const CurvePoint*> pts;
    for (const auto& p : cs.points)
      if (p.branch == b) pts.push_back(&p);
    size_t n = pts.size();
    size_t segs = cs.closed ? n : (n ? n - 1 : 0);
    for (size_t i = 0; i < segs; ++i) {
      const BigComplex& za = pts[i]->z;
      const BigComplex& zb = pts[(i + 1) % n]->z;
      BigComplex d = log(zb / za) - (zb - za) / f.z0;
      out.push_back(scale * d.to_cd() / cd(0, 2.0 * M_PI));
    }
  }
  return out;
}

Real post_constant_c(const DerivedParams& d, const Precision& prec) {
  mpfr_prec_t bits = prec.mantissa_bits;
  Real g(d.gamma, bits), z0(d.z0, bits);
  Real base = (1.0 - z0) / z0;
  if (base.sign() <= 0) fail_domain("post_constant_c: requires z0 < 1");
  Real gm = gamma_real(1.0 - g, prec);
  return -gm / sqrt(pi(bits) * 2.0) * pow(base, g) * z0;
}

Real deformed_rhs(const ModelParams& p, int k, const BigComplex& z, const Precision& prec, DeformedForm form) {
  mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  require_noncritical(d);
  const Real& g = d.gamma;
  if (g.is_zero()) fail_domain("deformed_rhs: gamma = 0 has no deformed curve");
  Real lk = log(Real(static_cast<long>(k), bits));
  Real kk(static_cast<long>(k), bits);
  BigComplex zz(z, bits);
  Real logF(bits);
  Real lead(bits);
  if (d.regime == Regime::PreCritical) {
    Real gm = abs(gamma_real(-g, prec));
    logF = g * log(abs(zz)) - (g + 1.0) * log(abs(zz - 1.0)) - (g + 1.0) * log(abs(1.0 - 1.0 / d.z0)) - log(gm);
    lead = -(g + 1.0) * lk / kk;
  } else {
    Real c = abs(post_constant_c(d, prec));
    logF = log(g * d.z0 * d.z0 / c) + g * (log(abs(zz)) + log(abs(zz - 1.0))) - g * 2.0 * log(abs(zz - d.z0));
    if (form == DeformedForm::Corrected) logF -= log(abs(zz - d.z0));
    lead = -(g + 0.5) * lk / kk;
  }
  return lead + logF / kk;
}

CurveSample deformed_zero_curve(const ModelParams& p, int k, int M, const Precision& prec, double exclusion,
                                DeformedForm form) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  require_noncritical(d);
  PhiFunction f = make_phi(p, prec);
  CurveSample base = trace_curve(f, M, p);
  const Real special = d.regime == Regime::PostCritical ? d.z0 : Real(1.0, bits);
  Real tol = ldexp(Real(1.0, bits), -static_cast<long>(bits) / 2);
  Real kk(static_cast<long>(k), bits);

  CurveSample cs;
  cs.plane = Plane::Z;
  cs.components = 1;
  cs.closed = false;
  cs.r = base.r;
  for (const auto& bp : base.points) {
    if (abs(bp.z - special) <= exclusion) continue;
    BigComplex dphi = 1.0 / bp.z - 1.0 / f.z0;
    BigComplex n = conj(dphi) / abs(dphi);
    Real sigma(bits);
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      BigComplex z = bp.z + n * sigma;
      Real g = re_phi(f, z) - deformed_rhs(p, k, z, prec, form);
      BigComplex dl = (1.0 / z - 1.0 / f.z0) - deformed_log_derivative(p, d, z, form) / kk;
      Real dg = (dl * n).re;
      Real step = g / dg;
      sigma -= step;
      if (abs(step) <= tol) {
        ok = true;
        break;
      }
    }
    if (!ok) fail_numeric("deformed_zero_curve: normal Newton did not converge");
    CurvePoint pt = bp;
    pt.z = bp.z + n * sigma;
    pt.lambda = unfold_principal(pt.z, p);
    cs.points.push_back(std::move(pt));
  }
  if (cs.points.empty()) fail_domain("deformed_zero_curve: every point lies in the exclusion disk");
  // Start the open polyline right after the excluded arc around theta = 0.
  auto it = std::adjacent_find(cs.points.begin(), cs.points.end(), [&](const CurvePoint& a, const CurvePoint& b) {
    return b.theta - a.theta > 1.5 * 2.0 * M_PI / M;
  });
  if (it != cs.points.end()) std::rotate(cs.points.begin(), it + 1, cs.points.end());
  return cs;
}

bool Droplet::contains(const cd& lambda) const { return std::abs(std::pow(lambda, s) - t) <= t_c; }

bool Droplet::contains(const BigComplex& lambda) const {
  mpfr_prec_t bits = lambda.bits();
  BigComplex u = pow(lambda, static_cast<long>(s)) - Real(t, bits);
  return abs(u) <= Real(t_c, bits);
}

std::vector<std::pair<int, cd>> Droplet::boundary(int M) const {
  std::vector<std::pair<int, cd>> out;
  if (t <= t_c) {
    // Exterior conformal map of the unit disk.
    for (int j = 0; j < M; ++j) {
      cd xi = std::polar(1.0, 2.0 * M_PI * j / M);
      cd inner = 1.0 + (t / t_c) * std::pow(xi, -s);
      cd v = std::pow(t_c, 1.0 / s) * xi * (inner == cd(0, 0) ? cd(0, 0) : std::pow(inner, 1.0 / s));
      out.emplace_back(0, v);
    }
    return out;
  }
  for (int b = 0; b < s; ++b) {
    cd w = std::polar(1.0, 2.0 * M_PI * b / s);
    for (int j = 0; j < M; ++j) {
      cd u = t + t_c * std::polar(1.0, 2.0 * M_PI * j / M);
      out.emplace_back(b, w * std::pow(u, 1.0 / s));
    }
  }
  return out;
}

Droplet droplet(const ModelParams& p) {
  p.validate();
  Droplet d;
  d.s = p.s;
  d.t = p.t;
  d.t_c = std::sqrt(p.T / p.s);
  return d;
}

BigComplex schwarz(const BigComplex& lambda, const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  Real t(p.t, bits);
  BigComplex lam(lambda, bits);
  BigComplex ls = pow(lam, static_cast<long>(p.s));
  BigComplex den = ls - t;
  if (abs(den) <= ldexp(Real(1.0, bits), -static_cast<long>(bits) + 8)) fail_domain("schwarz: pole at lambda^s = t");
  BigComplex inner = t + d.t_c * d.t_c / den;
  if (lam.re.is_zero() && lam.im.is_zero()) return root_s(inner, p.s);
  // lambda * S(lambda) = |lambda|^2 > 0 on the boundary, so the principal root of
  // lambda^s (t + t_c^2/(lambda^s - t)) selects the branch continuously near it.
  return root_s(ls * inner, p.s) / lam;
}

BigComplex cauchy_nu(const BigComplex& lambda, const CurveSample& cs) {
  if (cs.points.empty()) fail_domain("cauchy_nu: empty curve");
  const mpfr_prec_t bits = lambda.bits();
  auto node = [&](const CurvePoint& pt) -> const BigComplex& { return cs.plane == Plane::Z ? pt.z : pt.lambda; };
  // Proximity guard against the node spacing next to the closest node.
  double spacing = 0, closest = INFINITY;
  cd l = lambda.to_cd();
  for (const auto& line : polylines(cs, cs.plane)) {
    for (size_t i = 0; i < line.size(); ++i) {
      double d = std::abs(l - line[i]);
      if (d >= closest) continue;
      closest = d;
      spacing = 0;
      if (i > 0) spacing = std::max(spacing, std::abs(line[i] - line[i - 1]));
      if (i + 1 < line.size()) spacing = std::max(spacing, std::abs(line[i + 1] - line[i]));
    }
  }
  if (closest < 3.0 * spacing) fail_domain("cauchy_nu: lambda within 3 node spacings of the curve");
  BigComplex acc(bits);
  for (const auto& pt : cs.points) acc += Real(pt.nu_weight, bits) / (lambda - node(pt));
  return acc;
}

BigComplex cauchy_closed_form(const BigComplex& lambda, const ModelParams& p) {
  const mpfr_prec_t bits = lambda.bits();
  BigComplex num = pow(lambda, static_cast<long>(p.s - 1));
  return num / (pow(lambda, static_cast<long>(p.s)) - Real(p.t, bits));
}

namespace {

// (1/(pi t_c^2)) int_{|u - t| <= t_c} g(u) dA(u) with an angular trapezoid rule of Ma nodes.
BigComplex disk_average(const std::function<BigComplex(const BigComplex&)>& g, const ModelParams& p, int Ma,
                        const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  Real t(p.t, bits);
  std::vector<BigComplex> dirs(static_cast<size_t>(Ma));
  for (int j = 0; j < Ma; ++j) dirs[j] = polar(Real(1.0, bits), pi(bits) * 2.0 * static_cast<double>(j) / Ma);
  auto radial = [&](const Real& rho, const Real&, const Real&) {
    BigComplex acc(bits);
    for (int j = 0; j < Ma; ++j) acc += g(t + dirs[j] * rho);
    return acc * rho / static_cast<double>(Ma);
  };
  QuadResult q = tanh_sinh(radial, Real(bits), d.t_c, prec.target_rel_err, bits);
  // (1/(pi t_c^2)) * 2 pi * int_0^{t_c} rho <g>_angle d rho
  return q.value * 2.0 / (d.t_c * d.t_c);
}

}  // namespace

BigComplex cauchy_droplet(const BigComplex& lambda, const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  BigComplex lam(lambda, bits);
  BigComplex ls = pow(lam, static_cast<long>(p.s));
  Real dist = abs(ls - Real(p.t, bits));
  if (dist <= d.t_c * 1.05) fail_domain("cauchy_droplet: lambda must lie outside D");
  double q = (d.t_c / dist).to_double();
  int Ma = static_cast<int>(std::ceil((bits * std::log(2.0) + 10) / -std::log(q))) + 8;
  Ma = std::clamp(Ma, 16, 8192);
  BigComplex lsm1 = pow(lam, static_cast<long>(p.s - 1));
  // (1/s) sum_j 1/(lambda - omega^j u^{1/s}) = lambda^{s-1}/(lambda^s - u)
  auto g = [&](const BigComplex& u) { return lsm1 / (ls - u); };
  return disk_average(g, p, Ma, prec);
}

QuadratureDomainResult quadrature_domain_check(const ModelParams& p, TestFunction h, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  std::vector<BigComplex> w(static_cast<size_t>(p.s));
  for (int j = 0; j < p.s; ++j) w[j] = unit_root(j, p.s, bits);
  auto hf = [&](const BigComplex& x) -> BigComplex {
    switch (h) {
      case TestFunction::One:
        return BigComplex(Real(1.0, bits), Real(bits));
      case TestFunction::Lambda:
        return x;
      case TestFunction::Lambda2:
        return x * x;
      case TestFunction::Exp:
        return exp(x);
    }
    return x;
  };
  // Symmetrized h over the s preimages of u.
  auto hs = [&](const BigComplex& u) {
    BigComplex r = root_s(u, p.s);
    BigComplex acc(bits);
    for (int j = 0; j < p.s; ++j) acc += hf(r * w[j]);
    return acc / static_cast<double>(p.s);
  };
  QuadratureDomainResult out;
  // The symmetrized average of lambda and lambda^2 vanishes; integrating hs + 1 keeps the
  // relative stopping rule of the radial quadrature meaningful.
  auto shifted = [&](const BigComplex& u) { return hs(u) + 1.0; };
  out.area_integral = disk_average(shifted, p, 128, prec) - 1.0;
  BigComplex r = root_s(BigComplex(Real(p.t, bits), Real(bits)), p.s);
  BigComplex acc(bits);
  for (int j = 0; j < p.s; ++j) acc += hf(r * w[j]);
  out.point_average = acc / static_cast<double>(p.s);
  out.residual = abs(out.area_integral - out.point_average).to_double();
  return out;
}

const char* to_string(Region r) {
  switch (r) {
    case Region::Exterior:
      return "exterior";
    case Region::NearCurve:
      return "near_curve";
    case Region::Interior:
      return "interior";
    case Region::NearSpecial:
      return "near_special";
  }
  return "?";
}

Region classify_region(const BigComplex& z, const ModelParams& p, int k, const RegionOptions& opt) {
  DerivedParams d = derive(p, 128);
  double z0 = d.z0_d();
  double special = d.regime == Regime::PostCritical ? z0 : 1.0;
  cd zz = z.to_cd();
  if (std::abs(zz - special) < opt.exclusion) return Region::NearSpecial;
  if (std::abs(zz) == 0) return Region::Interior;
  double r = d.regime == Regime::PostCritical ? z0 : 1.0;
  double a = std::log(std::abs(zz) / r) - (zz.real() - r) / z0;
  double kappa = opt.kappa < 0 ? 3.0 * (1.0 + d.gamma_d()) : opt.kappa;
  // Re phi > 0 on |z| = z0 (away from the corner), so the disk separates C from the
  // second level line further right.
  bool inside_disk = std::abs(zz) < z0;
  if (inside_disk && std::fabs(a) < kappa * std::log(static_cast<double>(k)) / k) return Region::NearCurve;
  if (inside_disk && a < 0) return Region::Interior;
  return Region::Exterior;
}

Region classify_region_lambda(const BigComplex& lambda, const ModelParams& p, int k, const RegionOptions& opt) {
  BigComplex z = 1.0 - pow(lambda, static_cast<long>(p.s)) / Real(p.t, lambda.bits());
  return classify_region(z, p, k, opt);
}

BigComplex uniformize(const BigComplex& xi, const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  if (d.regime != Regime::PreCritical) fail_domain("uniformize: pre-critical parameters required");
  BigComplex x(xi, bits);
  if (abs(x) < 1.0 - 1e-12) fail_domain("uniformize: |xi| >= 1 required");
  Real t(p.t, bits);
  Real inv_s = rational(1, p.s, bits);
  BigComplex inner = 1.0 + (t / d.t_c) / pow(x, static_cast<long>(p.s));
  return pow(d.t_c, inv_s) * x * root_s(inner, p.s);
}

BigComplex uniformize_inverse(const BigComplex& lambda, const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  if (d.regime != Regime::PreCritical) fail_domain("uniformize_inverse: pre-critical parameters required");
  BigComplex lam(lambda, bits);
  Real t(p.t, bits);
  BigComplex ls = pow(lam, static_cast<long>(p.s));
  if (abs(ls - t) <= d.t_c) fail_domain("uniformize_inverse: lambda must lie outside D");
  Real inv_s = rational(1, p.s, bits);
  return lam * root_s(1.0 - t / ls, p.s) / pow(d.t_c, inv_s);
}

}  // namespace opal
