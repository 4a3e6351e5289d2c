// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "checks.hpp"

#include <cmath>

#include "opal/geometry.hpp"
#include "opal/moments.hpp"
#include "opal/special.hpp"

namespace opal::cli {
namespace {

using M2 = std::array<std::array<BigComplex, 2>, 2>;

M2 mul(const M2& a, const M2& b) {
  M2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

double rel_diff(const M2& a, const M2& b) {
  double num = 0, den = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      num = std::max(num, abs(a[i][j] - b[i][j]).to_double());
      den = std::max(den, abs(a[i][j]).to_double());
    }
  return num / den;
}

void add(std::vector<CheckLine>& out, const std::string& name, double value, double threshold) {
  out.push_back({name, value, threshold, value < threshold});
}

}  // namespace

std::vector<CheckLine> run_identity_suite(const RunConfig& cfg) {
  const ModelParams& p = cfg.model;
  const Precision& prec = cfg.prec;
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  require_noncritical(d);
  std::vector<CheckLine> out;

  // Planar versus contour orthogonality integrals.
  double worst = 0;
  const std::vector<std::vector<std::complex<double>>> qs = {{1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}};
  for (int j = 0; j <= 3; ++j)
    for (const auto& q : qs)
      worst = std::max(worst, planar_contour_identity_check(d.gamma_d(), cfg.check_N, p.t, j, q, prec).residual);
  add(out, "planar_contour", worst, 1e-8);

  // Cauchy transforms of nu-hat and mu* against the closed form outside D.
  Real r = d.regime == Regime::PreCritical ? Real(1.0, bits) : d.z0;
  CurveSample hc = hat_curve(p, r, 1024, prec, ThetaGrid::Graded);
  double rmax = std::pow(p.t + d.t_c.to_double(), 1.0 / p.s);
  double bal_nu = 0, bal_d = 0;
  for (int j = 0; j < 20; ++j) {
    BigComplex lam(std::polar(rmax * (1.15 + 0.25 * (j % 3)), 2 * M_PI * j / 20 + 0.1), bits);
    BigComplex cf = cauchy_closed_form(lam, p);
    double scale = abs(cf).to_double();
    bal_nu = std::max(bal_nu, abs(cauchy_nu(lam, hc) - cf).to_double() / scale);
    bal_d = std::max(bal_d, abs(cauchy_droplet(lam, p, prec) - cf).to_double() / scale);
  }
  add(out, "balayage_nu", bal_nu, 1e-8);
  add(out, "balayage_droplet", bal_d, 1e-8);

  double qd = 0;
  for (auto h : {TestFunction::One, TestFunction::Lambda, TestFunction::Lambda2, TestFunction::Exp})
    qd = std::max(qd, quadrature_domain_check(p, h, Precision{128, 1e-20}).residual);
  add(out, "quadrature_domain", qd, 1e-6);

  // Masses of nu and nu-hat, positivity of the increments.
  PhiFunction f = make_phi_r(p, r, prec);
  CurveSample c = trace_curve(f, 1024, p);
  double mass = 0, min_re = INFINITY, max_im = 0;
  for (const auto& inc : nu_increments(c, f)) {
    mass += inc.real();
    min_re = std::min(min_re, inc.real());
    max_im = std::max(max_im, std::abs(inc.imag()));
  }
  double mass_hat = 0;
  for (const auto& inc : nu_increments(hc, f)) mass_hat += inc.real();
  add(out, "nu_mass", std::abs(mass - 1.0), 1e-10);
  add(out, "nu_hat_mass", std::abs(mass_hat - 1.0), 1e-10);
  add(out, "nu_positive", min_re > 0 ? 0.0 : 1.0, 0.5);
  add(out, "nu_real", max_im, 1e-10);

  // Parabolic-cylinder model problem jumps (needs 0 < gamma < 1).
  if (d.gamma > 0.0) {
    const double tol = std::max(1e-25, std::ldexp(1.0, -bits / 2));
    double jump = 0;
    for (double x : {0.4, 1.3, 2.7}) {
      struct Ray {
        int index;
        BigComplex point;
        Sector plus, minus;
      };
      const Ray rays[] = {{0, BigComplex(x, 0.0, bits), Sector::Plus1, Sector::Minus1},
                          {1, BigComplex(0.0, x, bits), Sector::Plus2, Sector::Plus1},
                          {2, BigComplex(-x, 0.0, bits), Sector::Plus2, Sector::Minus2},
                          {3, BigComplex(0.0, -x, bits), Sector::Minus1, Sector::Minus2}};
      for (const auto& ray : rays) {
        M2 a = model_psi_post(ray.point, ray.plus, d.gamma, prec).m;
        M2 b = model_psi_post(ray.point, ray.minus, d.gamma, prec).m;
        jump = std::max(jump, rel_diff(a, mul(b, model_jump(ray.index, d.gamma, bits))));
      }
    }
    add(out, "model_jumps", jump, tol);
    ModelConstants mc = model_constants(d.gamma, prec);
    BigComplex prod = mc.beta12 * mc.beta21;
    add(out, "beta_product", abs(prod - d.gamma / 2.0).to_double(), tol);
  }
  return out;
}

}  // namespace opal::cli
