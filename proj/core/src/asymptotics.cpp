// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/asymptotics.hpp"

#include <cmath>
#include <map>

#include "opal/error.hpp"

namespace opal {
namespace {

BigComplex cpow(const BigComplex& z, const Real& a) {
  if (a.is_zero()) return BigComplex(Real(1.0, z.bits()), Real(z.bits()));
  return pow(z, a);
}

struct PreCtx {
  mpfr_prec_t bits;
  DerivedParams d;
  Real A;  // (1 - 1/z0)^{-gamma-1} / Gamma(-gamma)
};

PreCtx pre_ctx(const ModelParams& p, const Precision& prec) {
  PreCtx c{static_cast<mpfr_prec_t>(prec.mantissa_bits), derive(p, prec.mantissa_bits), Real()};
  if (c.d.regime != Regime::PreCritical) fail_domain("predict_pre: pre-critical parameters required");
  Real base = 1.0 - 1.0 / c.d.z0;
  c.A = rgamma_real(-c.d.gamma, prec) * pow(base, -(c.d.gamma + 1.0));
  return c;
}

struct PostCtx {
  mpfr_prec_t bits;
  DerivedParams d;
  Real c;
};

PostCtx post_ctx(const ModelParams& p, const Precision& prec) {
  PostCtx c{static_cast<mpfr_prec_t>(prec.mantissa_bits), derive(p, prec.mantissa_bits), Real()};
  if (c.d.regime != Regime::PostCritical) fail_domain("predict_post: post-critical parameters required");
  c.c = post_constant_c(c.d, prec);
  return c;
}

// gamma z0^2 Q / (k (z - z0)): explicit 1/k term near the curve for gamma >= 1/2.
BigComplex post_one_over_k_term(const PostCtx& c, const BigComplex& z, int k) {
  const Real& g = c.d.gamma;
  const Real& z0 = c.d.z0;
  BigComplex dz = z - z0;
  Real q0 = g * (z0 * 4.0 - 1.0) / (z0 * 3.0 * (1.0 - z0)) + (2.0 - g) / (z0 * 3.0);
  BigComplex q = ((3.0 - g) / 2.0) / dz + q0;
  return q * (g * z0 * z0) / (dz * static_cast<double>(k));
}

}  // namespace

BigComplex outer_factor(const BigComplex& z, int k, const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  BigComplex zz(z, bits);
  BigComplex zk = pow(zz, static_cast<long>(k));
  if (d.regime == Regime::PostCritical) return zk * cpow((zz - d.z0) / zz, d.gamma);
  return zk * cpow(1.0 - 1.0 / zz, d.gamma);
}

BigComplex predict_pre(const BigComplex& z_in, int k, const ModelParams& p, Region region, const Precision& prec,
                       const PredictOptions& opt) {
  PreCtx c = pre_ctx(p, prec);
  const Real& g = c.d.gamma;
  const Real& z0 = c.d.z0;
  BigComplex z(z_in, c.bits);
  Real kk(static_cast<long>(k), c.bits);
  BigComplex zk = pow(z, static_cast<long>(k));
  BigComplex eint = exp((z - 1.0) * (kk / z0));
  Real kpow = pow(kk, -(g + 1.0));

  switch (region) {
    case Region::Exterior:
      return zk * cpow(1.0 - 1.0 / z, g);
    case Region::Interior:
      return eint * (kpow * c.A * static_cast<double>(opt.interior_sign)) / (z - 1.0);
    case Region::NearCurve:
      return zk * cpow(1.0 - 1.0 / z, g) - eint * (kpow * c.A) / (z - 1.0);
    case Region::NearSpecial: {
      // w = log z - (z-1)/z0 is conformal at z = 1 with w'(1) = 1 - 1/z0 > 0.
      BigComplex zm1 = z - 1.0;
      if (zm1.re.is_zero() && zm1.im.is_zero()) {
        BigComplex psi0 = psi_tilde_12(BigComplex(ldexp(Real(1.0, c.bits), -static_cast<long>(c.bits) / 2), Real(c.bits)), g, prec);
        Real pref = pow(1.0 - 1.0 / z0, -g);
        return -(psi0 * pref) * pow(kk, -g);
      }
      BigComplex w = log(z) - zm1 / z0;
      BigComplex pref = cpow(zm1 / (z * w), g);
      BigComplex psi = psi_tilde_12_upper(w * kk, g, prec);
      return pref * (zk * cpow(w, g) - eint * psi * pow(kk, -g));
    }
  }
  return BigComplex(c.bits);
}

BigComplex predict_post(const BigComplex& z_in, int k, const ModelParams& p, Region region, const Precision& prec,
                        const PredictOptions& opt) {
  PostCtx c = post_ctx(p, prec);
  const Real& g = c.d.gamma;
  const Real& z0 = c.d.z0;
  BigComplex z(z_in, c.bits);
  Real kk(static_cast<long>(k), c.bits);
  BigComplex zk = pow(z, static_cast<long>(k));
  BigComplex outer = zk * cpow((z - z0) / z, g);
  // e^{k g_int} with g_int = z/z0 + log z0 - 1.
  BigComplex eint = exp((z / z0 - 1.0) * kk) * pow(z0, static_cast<long>(k));
  Real kpow = pow(kk, -(g + 0.5));
  auto inner = [&]() {
    BigComplex dz = z - z0;
    return eint * (kpow * g * z0 * z0 / c.c) * cpow(dz / (z - 1.0), -g) / dz;
  };

  switch (region) {
    case Region::Exterior:
      return outer;
    case Region::Interior:
      return inner() * static_cast<double>(opt.interior_sign);
    case Region::NearCurve: {
      BigComplex lead = outer;
      if (opt.post_one_over_k && g >= 0.5) lead = outer * (1.0 - post_one_over_k_term(c, z, k));
      return lead - inner();
    }
    case Region::NearSpecial: {
      // w^2 = -phi with the principal log near z0; w ~ (z - z0)/(sqrt(2) z0).
      Real r2 = sqrt(Real(2.0, c.bits));
      BigComplex dz = z - z0;
      BigComplex phi = log(z / z0) - z / z0 + 1.0;
      BigComplex w(c.bits);
      BigComplex ratio(c.bits);  // (z - z0)/w
      if (dz.re.is_zero() && dz.im.is_zero()) {
        ratio = BigComplex(r2 * z0, Real(c.bits));
      } else {
        BigComplex lin = dz / (r2 * z0);
        w = lin * sqrt(-phi / (lin * lin));
        ratio = dz / w;
      }
      Real sk = sqrt(kk * 2.0);
      BigComplex pref = cpow(ratio / (z * sk), g);
      BigComplex u = pcf_u(-(g + 0.5), w * sk, prec);
      return zk * pref * exp(phi * (kk * -0.5)) * u;
    }
  }
  return BigComplex(c.bits);
}

Prediction predict(const BigComplex& z, int k, const ModelParams& p, const Precision& prec, const PredictOptions& opt) {
  DerivedParams d = derive(p, prec.mantissa_bits);
  require_noncritical(d);
  RegionOptions ro;
  ro.kappa = opt.kappa;
  ro.exclusion = opt.exclusion;
  Prediction out;
  out.region = classify_region(z, p, k, ro);
  out.value = d.regime == Regime::PreCritical ? predict_pre(z, k, p, out.region, prec, opt)
                                              : predict_post(z, k, p, out.region, prec, opt);
  return out;
}

Prediction predict_pn(const BigComplex& lambda, int k, const ModelParams& p, const Precision& prec,
                      const PredictOptions& opt) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  BigComplex lam(lambda, bits);
  Real t(p.t, bits);
  BigComplex z = 1.0 - pow(lam, static_cast<long>(p.s)) / t;
  Prediction pr = predict(z, k, p, prec, opt);
  pr.value = pr.value * pow(-t, static_cast<long>(k));
  if (p.l > 0) pr.value = pr.value * pow(lam, static_cast<long>(p.l));
  return pr;
}

BigComplex pn_near_curve_pre(const BigComplex& lambda, int k, const ModelParams& p, const Precision& prec,
                             NearCurveMutation mutation) {
  PreCtx c = pre_ctx(p, prec);
  const Real& g = c.d.gamma;
  BigComplex lam(lambda, c.bits);
  Real t(p.t, c.bits);
  Real kk(static_cast<long>(k), c.bits);
  BigComplex ls = pow(lam, static_cast<long>(p.s));
  BigComplex q = 1.0 - t / ls;  // 1 - t/lambda^s
  BigComplex base = pow(ls - t, static_cast<long>(k)) * cpow(q, -g);
  if (p.l > 0) base = base * pow(lam, static_cast<long>(p.l));
  BigComplex hphi = hat_phi_eval(p, Real(1.0, c.bits), lam);
  BigComplex x = exp(hphi * (-kk)) * (pow(kk, -(g + 1.0)) * c.A) * (t / ls);
  if (mutation != NearCurveMutation::DropGammaFactor) x = x * cpow(q, g);
  if (mutation == NearCurveMutation::FlipSign) x = -x;
  return base * (1.0 + x);
}

ConstantCheck post_constant_check(const ModelParams& p, const Precision& prec) {
  const mpfr_prec_t bits = prec.mantissa_bits;
  DerivedParams d = derive(p, bits);
  const Real& g = d.gamma;
  const Real& z0 = d.z0;
  ModelConstants mc = model_constants(g, prec);
  ConstantCheck out;
  BigComplex phase = polar(Real(1.0, bits), -(pi(bits) * g));
  Real mag = sqrt(Real(2.0, bits)) * pow((1.0 - z0) / (z0 * 2.0), g) * z0;
  out.from_model = phase * mc.psi1[1][0] * mag;
  out.closed_form = post_constant_c(d, prec);
  out.rel_diff = (abs(out.from_model - out.closed_form) / abs(out.closed_form)).to_double();
  return out;
}

AsymptoticReport error_study(const ModelParams& p, const std::vector<MonicPoly>& polys,
                             const std::vector<StudyPoint>& points, const StudyOptions& opt) {
  if (polys.size() < 3) fail_domain("error_study: at least 3 values of k are required");
  DerivedParams d = derive(p, opt.prec.mantissa_bits);
  require_noncritical(d);
  AsymptoticReport rep;
  rep.params = p;
  rep.quantity = opt.quantity;
  const double floor = std::max(opt.prec.target_rel_err * 1e3, std::ldexp(1.0, -opt.prec.mantissa_bits / 2));
  for (const auto& poly : polys) {
    rep.ks.push_back(poly.k);
    for (const auto& pt : points) {
      BigComplex z(pt.z, opt.prec.mantissa_bits);
      BigComplex exact = eval_poly(poly, BigComplex(z, poly.precision()));
      BigComplex ref(opt.prec.mantissa_bits);
      if (opt.quantity == StudyQuantity::PredictionError) {
        ref = d.regime == Regime::PreCritical ? predict_pre(z, poly.k, p, pt.region, opt.prec, opt.predict)
                                              : predict_post(z, poly.k, p, pt.region, opt.prec, opt.predict);
      } else {
        ref = outer_factor(z, poly.k, p, opt.prec);
        if (d.regime == Regime::PostCritical && opt.predict.post_one_over_k && d.gamma >= 0.5) {
          PostCtx c = post_ctx(p, opt.prec);
          ref = ref * (1.0 - post_one_over_k_term(c, z, poly.k));
        }
      }
      StudySample s;
      s.k = poly.k;
      s.label = pt.label;
      s.z = pt.z;
      s.region = pt.region;
      s.exact = exact.to_cd();
      s.predicted = ref.to_cd();
      BigComplex ex(exact, opt.prec.mantissa_bits);
      s.rel_err = abs(ex / ref - 1.0).to_double();
      s.at_floor = s.rel_err < floor;
      rep.samples.push_back(s);
    }
  }
  // Log-log fits per point label, precision-floor samples excluded.
  for (const auto& pt : points) {
    StudyFit f;
    f.label = pt.label;
    f.region = pt.region;
    std::vector<double> xs, ys, all;
    for (const auto& s : rep.samples) {
      if (s.label != pt.label) continue;
      all.push_back(s.rel_err);
      if (s.at_floor || !(s.rel_err > 0)) continue;
      xs.push_back(std::log(static_cast<double>(s.k)));
      ys.push_back(std::log(s.rel_err));
    }
    for (size_t i = 0; i + 1 < all.size(); ++i) f.ratios.push_back(all[i] / all[i + 1]);
    f.used = static_cast<int>(xs.size());
    if (xs.size() >= 2) {
      double n = static_cast<double>(xs.size());
      double mx = 0, my = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
      }
      double sxx = 0, sxy = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
      }
      f.exponent = sxx > 0 ? sxy / sxx : 0;
      double a = my - f.exponent * mx;
      f.prefactor = std::exp(a);
      double ss = 0;
      for (size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (a + f.exponent * xs[i]);
        ss += r * r;
      }
      f.residual = std::sqrt(ss / n);
    } else {
      f.exponent = std::nan("");
    }
    rep.fits.push_back(f);
  }
  return rep;
}

AsymptoticReport error_study(const ModelParams& p, const std::vector<int>& ks, const std::vector<StudyPoint>& points,
                             const StudyOptions& opt) {
  std::vector<MonicPoly> polys;
  for (int k : ks) polys.push_back(build_pi_k(p, k, opt.prec));
  return error_study(p, polys, points, opt);
}

}  // namespace opal
