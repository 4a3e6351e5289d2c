// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/moments.hpp"

#include <algorithm>
#include <cmath>

#include "opal/error.hpp"
#include "opal/linalg.hpp"
#include "opal/quadrature.hpp"
#include "opal/special.hpp"

namespace opal {
namespace {

long next_pow2(double x) {
  long m = 64;
  while (static_cast<double>(m) < x) m *= 2;
  return m;
}

double log2_abs(const BigComplex& z) {
  Real m = abs(z);
  if (m.is_zero()) return -1e18;
  long e;
  double d = mpfr_get_d_2exp(&e, m.get(), MPFR_RNDN);
  return std::log2(d) + static_cast<double>(e);
}

// Node count for one circle: resolves e^{-cz} (positive Laurent tail, ~ (cR)^n/n!)
// and the (1 - 1/z)^{-gamma} tail (~ R^{-n}).
long initial_nodes(double c, double R, int m_span, mpfr_prec_t bits) {
  double pos = 2.0 * (M_E * c * R) + m_span + 32;
  double neg = (static_cast<double>(bits) + 32) / std::log2(R) + m_span;
  return next_pow2(std::max(pos, neg));
}

}  // namespace

double moment_radius(double z0, int k, double mbar) {
  double R = std::max(1.25, z0 * (k - mbar) / std::max(k, 1));
  return std::clamp(R, 1.25, 4.0);
}

int moment_start_bits(int k, double z0) {
  return 128 + static_cast<int>(std::ceil(1.5 * k * std::log2(M_E) / z0));
}

std::vector<BigComplex> moments_on_circle(const Real& c_in, const Real& gamma_in, int m_lo, int m_hi,
                                          const Real& R_in, long M, mpfr_prec_t bits, int* cancellation_bits) {
  if (m_hi < m_lo) return {};
  if (!(R_in > 1.0)) fail_domain("moments_on_circle: radius must exceed 1 to enclose [0, 1]");
  Real c(c_in, bits), g(gamma_in, bits), R(R_in, bits);
  const bool has_gamma = !g.is_zero();
  Real two_pi = pi(bits) * 2.0;

  // Roots of unity w_j = e^{2 pi i j / M}.
  std::vector<BigComplex> w(M);
  for (long j = 0; j < M; ++j) w[j] = polar(Real(1.0, bits), two_pi * (static_cast<double>(j) / M));

  // Samples f_n = e^{-c z_n} (z_n/(z_n - 1))^gamma at z_n = R w_n.
  // z/(z-1) maps C \ [0,1] onto C \ (-inf, 0], so the principal power is the
  // branch analytic off [0, 1] that tends to 1 at infinity.
  std::vector<BigComplex> f(M);
  double max_log2_f = -1e18;
  for (long n = 0; n < M; ++n) {
    BigComplex z = w[n] * R;
    BigComplex e = -(z * c);
    if (has_gamma) e += log(z / (z - 1.0)) * g;
    f[n] = exp(e);
    max_log2_f = std::max(max_log2_f, e.re.to_double() / std::log(2.0));
  }

  // I(m) = (2 pi i / M) R^{m+1} sum_n f_n w_n^{m+1}.
  std::vector<BigComplex> out;
  out.reserve(m_hi - m_lo + 1);
  Real t1(bits), t2(bits);
  int worst_loss = 0;
  for (int m = m_lo; m <= m_hi; ++m) {
    BigComplex acc(bits);
    long step = ((static_cast<long>(m) + 1) % M + M) % M;
    long idx = 0;
    for (long n = 0; n < M; ++n) {
      fma_into(acc, f[n], w[idx], t1, t2);
      idx += step;
      if (idx >= M) idx -= M;
    }
    Real scale = pow(R, static_cast<long>(m) + 1) * two_pi / static_cast<double>(M);
    BigComplex val = mul_i(acc) * scale;
    // Bits lost: largest summand versus result.
    double loss = max_log2_f - log2_abs(acc) + std::log2(static_cast<double>(M));
    worst_loss = std::max(worst_loss, static_cast<int>(std::ceil(loss)));
    out.push_back(std::move(val));
  }
  if (cancellation_bits) *cancellation_bits = worst_loss;
  return out;
}

MomentTable compute_moments_c(const Real& c_in, const Real& gamma_in, double z0, int k, int m_lo, int m_hi,
                              const Precision& prec, const MomentOptions& opt) {
  if (k < 1) fail_domain("compute_moments: k must be >= 1");
  if (!(z0 > 0) || !std::isfinite(z0)) fail_domain("compute_moments: z0 must be finite and positive");
  const double cd = c_in.to_double();
  const bool gamma_zero = gamma_in.is_zero();

  double r_neg = moment_radius(z0, k, -(k + 1) / 2.0) * opt.radius_scale;
  double r_pos = moment_radius(z0, k, k / 2.0) * opt.radius_scale;
  if (opt.pin_radius) r_neg = r_pos = opt.radius;

  int bits = std::max(prec.mantissa_bits, moment_start_bits(k, z0));
  long M = std::max(initial_nodes(cd, r_neg, m_hi - m_lo, bits), initial_nodes(cd, r_pos, m_hi - m_lo, bits));

  auto evaluate = [&](int b, long nodes, int* loss) {
    std::vector<BigComplex> v;
    int loss_neg = 0, loss_pos = 0;
    if (m_lo < 0) {
      v = moments_on_circle(c_in, gamma_in, m_lo, std::min(m_hi, -1), Real(r_neg, b), nodes, b, &loss_neg);
    }
    if (m_hi >= 0) {
      auto vp = moments_on_circle(c_in, gamma_in, std::max(m_lo, 0), m_hi, Real(r_pos, b), nodes, b, &loss_pos);
      for (auto& x : vp) v.push_back(std::move(x));
    }
    *loss = std::max(loss_neg, loss_pos);
    return v;
  };

  MomentTable mt;
  mt.k = k;
  mt.m_lo = m_lo;
  mt.m_hi = m_hi;
  mt.meta.radius_neg = r_neg;
  mt.meta.radius_pos = r_pos;

  int loss = 0;
  std::vector<BigComplex> prev = evaluate(bits, M, &loss);
  for (int d = 1; d <= opt.max_doublings; ++d) {
    int b2 = 2 * bits;
    long M2 = 2 * M;
    int loss2 = 0;
    std::vector<BigComplex> cur = evaluate(b2, M2, &loss2);
    Real scale(b2);
    for (auto& v : cur) scale = max(scale, abs(v));
    // Relative agreement per moment; the floor only matters for moments that
    // vanish identically (gamma = 0, m >= 0).
    Real floor = scale * Real(prec.target_rel_err * prec.target_rel_err, b2);
    double worst = 0;
    std::vector<double> errs(cur.size());
    for (size_t i = 0; i < cur.size(); ++i) {
      Real den = max(abs(cur[i]), floor);
      double e = den.is_zero() ? 0.0 : (abs(cur[i] - prev[i]) / den).to_double();
      errs[i] = e;
      worst = std::max(worst, e);
    }
    bits = b2;
    M = M2;
    loss = loss2;
    prev = std::move(cur);
    mt.meta.doublings = d;
    mt.meta.achieved_rel_err = worst;
    mt.rel_err = std::move(errs);
    if (worst < prec.target_rel_err) break;
    if (d == opt.max_doublings) {
      fail_numeric("compute_moments: no convergence after " + std::to_string(d) +
                   " doublings (last relative change " + std::to_string(worst) + ")");
    }
  }
  mt.values = std::move(prev);
  mt.meta.bits = bits;
  mt.meta.nodes = M;
  mt.c = Real(c_in, bits);
  mt.gamma = Real(gamma_in, bits);
  if (loss > bits / 2) {
    mt.meta.cancellation_warnings = 1;
    mt.meta.warnings.push_back("quadrature sum lost " + std::to_string(loss) + " of " + std::to_string(bits) +
                               " bits to cancellation");
  }
  (void)gamma_zero;
  return mt;
}

MomentTable compute_moments(const ModelParams& p, int k, const Precision& prec, const MomentOptions& opt) {
  DerivedParams d = derive(p, static_cast<mpfr_prec_t>(prec.mantissa_bits));
  if (d.regime == Regime::Critical) {
    // Moments are regime-agnostic; only finiteness of c matters.
  }
  Real c = weight_c(k, p, static_cast<mpfr_prec_t>(std::max(prec.mantissa_bits, moment_start_bits(k, d.z0_d())) * 8));
  return compute_moments_c(c, d.gamma, d.z0_d(), k, -k, k, prec, opt);
}

HankelReport hankel_nonvanishing(const MomentTable& mt) {
  const int k = mt.k;
  if (mt.m_lo > -k || mt.m_hi < k - 2) fail_domain("hankel_nonvanishing: moment table does not cover [-k, k-2]");
  CMatrix H(k, mt.bits());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) H(i, j) = mt.at(i + j - k);
  LUFactor f = lu_factor(H);
  if (f.singular) fail_numeric("hankel_nonvanishing: zero pivot at working precision (raise precision)");
  HankelReport r;
  r.det_magnitude_log = f.log_abs_det;
  r.condition_estimate = condition_estimate(f, H);
  r.min_pivot_ratio = f.min_pivot_ratio;
  return r;
}

// ---------------------------------------------------------------------------

PlanarContourResult planar_contour_identity_check(double gamma_d, double N_d, double t_d, int j,
                                                  const std::vector<std::complex<double>>& q,
                                                  const Precision& prec) {
  if (j < 0 || j > 3) fail_domain("planar_contour_identity_check: j must lie in [0, 3]");
  if (!(gamma_d >= 0 && gamma_d < 1)) fail_domain("planar_contour_identity_check: gamma must lie in [0, 1)");
  const mpfr_prec_t bits = prec.mantissa_bits;
  Real g(gamma_d, bits), N(N_d, bits), t(t_d, bits);
  const Real two_pi = pi(bits) * 2.0;
  const double tol = std::max(prec.target_rel_err, 1e-14);

  auto qeval = [&](const BigComplex& u) {
    BigComplex acc(bits);
    for (size_t i = q.size(); i-- > 0;) acc = acc * u + BigComplex(q[i], bits);
    return acc;
  };

  // Contour side on the circle |u - t/2| = t/2 + 1/2, trapezoidal rule with doubling.
  auto contour_sum = [&](long M) {
    Real center = t / 2.0;
    Real rad = t / 2.0 + 0.5;
    BigComplex acc(bits);
    for (long n = 0; n < M; ++n) {
      BigComplex e = polar(Real(1.0, bits), two_pi * (static_cast<double>(n) / M));
      BigComplex du = e * rad;  // u - center, and du = i (u - center) d theta
      BigComplex u = du + center;
      BigComplex val = qeval(u) * exp(u * (N * t)) * pow(u - t, -static_cast<long>(j) - 1);
      if (!g.is_zero()) val = val * pow(1.0 - t / u, g);
      acc += val * du;
    }
    // (1/2 pi i) \oint = (1/M) sum f(u_n) (u_n - center).
    return acc / static_cast<double>(M);
  };
  long M = 64;
  BigComplex cprev = contour_sum(M);
  BigComplex contour;
  for (;;) {
    M *= 2;
    contour = contour_sum(M);
    if ((abs(contour - cprev) / abs(contour)).to_double() < tol * 1e-3 || M > (1L << 16)) break;
    cprev = contour;
  }
  Precision gp{static_cast<int>(bits), prec.target_rel_err};
  Real pref = pi(bits) * gamma_real(Real(static_cast<long>(j) + 1, bits) - g, gp) /
              pow(N, Real(static_cast<long>(j) + 1, bits) - g);
  contour = contour * pref;

  // Planar side in polar coordinates u = rho e^{i theta}; truncated where the
  // Gaussian factor e^{-N (rho - t)^2} drops below 2^{-bits/2} of its peak.
  const double R2 = t_d + std::sqrt(0.5 * bits * std::log(2.0) / N_d) + 1.0;
  auto angular = [&](const Real& rho, long Mt) {
    BigComplex acc(bits);
    for (long n = 0; n < Mt; ++n) {
      Real th = two_pi * (static_cast<double>(n) / Mt);
      BigComplex e = polar(Real(1.0, bits), th);
      BigComplex u = e * rho;
      BigComplex val = qeval(u) * pow(conj(u), static_cast<long>(j));
      Real expo = N * (t * u.re * 2.0 - rho * rho);
      acc += val * exp(expo);
    }
    return acc * (two_pi / static_cast<double>(Mt));
  };
  // Angular node count: the integrand is a trigonometric polynomial times e^{2 N t rho cos theta}.
  long Mt = 32;
  while (Mt < 4 * (2.0 * N_d * t_d * R2 + q.size() + j + 8) + 64) Mt *= 2;
  Mt *= 2;
  auto radial = [&](const Real& rho, const Real& /*xa*/, const Real& /*xb*/) {
    // rho^{1-2 gamma} from |u|^{-2 gamma} and the area element.
    Real w = pow(rho, 1.0 - g * 2.0);
    return angular(rho, Mt) * w;
  };
  QuadResult qr = tanh_sinh(radial, Real(0.0, bits), Real(R2, bits), tol * 1e-3, bits, 10);
  PlanarContourResult res;
  res.planar = qr.value;
  res.contour = contour;
  res.residual = (abs(res.planar - res.contour) / abs(res.contour)).to_double();
  return res;
}

}  // namespace opal
