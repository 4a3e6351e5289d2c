// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "opal/error.hpp"

namespace opal {
namespace {

using cd = std::complex<double>;

double log2_abs(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) return -std::numeric_limits<double>::infinity();
  Real a = abs(z);
  long e = 0;
  double m = mpfr_get_d_2exp(&e, a.get(), MPFR_RNDN);
  return std::log2(m) + static_cast<double>(e);
}

// Horner for a monic polynomial with ascending coefficients b (b.size() = degree).
void horner(const std::vector<BigComplex>& b, const BigComplex& z, BigComplex& v, BigComplex& dv) {
  mpfr_prec_t bits = z.bits();
  v = BigComplex(Real(1.0, bits), Real(bits));
  dv = BigComplex(bits);
  for (size_t i = b.size(); i-- > 0;) {
    dv = dv * z + v;
    v = v * z + b[i];
  }
}

// Initial approximations on circles from the upper convex hull of (i, log|b_i|).
std::vector<BigComplex> newton_polygon_seeds(const std::vector<BigComplex>& b, mpfr_prec_t bits) {
  const int d = static_cast<int>(b.size());
  std::vector<std::pair<int, double>> pts;
  for (int i = 0; i < d; ++i) {
    double l = log2_abs(b[i]);
    if (std::isfinite(l)) pts.emplace_back(i, l);
  }
  pts.emplace_back(d, 0.0);
  std::vector<std::pair<int, double>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& c = hull.back();
      double cross = (c.first - a.first) * (p.second - a.second) - (c.second - a.second) * (p.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(p);
  }
  std::vector<BigComplex> seeds;
  const double sigma = 0.7;
  for (size_t h = 0; h + 1 < hull.size(); ++h) {
    int ia = hull[h].first, ib = hull[h + 1].first;
    int cnt = ib - ia;
    double log2r = (hull[h].second - hull[h + 1].second) / cnt;
    Real rad = ldexp(Real(std::exp2(log2r - std::floor(log2r)), bits), static_cast<long>(std::floor(log2r)));
    for (int j = 0; j < cnt; ++j) {
      double ang = 2.0 * M_PI * j / cnt + 2.0 * M_PI * ia / d + sigma;
      seeds.push_back(polar(rad, Real(ang, bits)));
    }
  }
  // A zero constant term leaves the hull short of index 0: those roots sit at the origin.
  while (static_cast<int>(seeds.size()) < d) seeds.push_back(BigComplex(bits));
  return seeds;
}

bool arg_less(const BigComplex& a, const BigComplex& b) {
  Real aa = (a.re.is_zero() && a.im.is_zero()) ? Real(a.bits()) : arg(a);
  Real ab = (b.re.is_zero() && b.im.is_zero()) ? Real(b.bits()) : arg(b);
  if (aa < ab) return true;
  if (ab < aa) return false;
  return abs(a) < abs(b);
}

}  // namespace

double backward_error(const MonicPoly& poly, const BigComplex& r) {
  mpfr_prec_t bits = poly.precision();
  BigComplex z(r, bits);
  Real az = abs(z);
  Real denom = pow(az, static_cast<long>(poly.k));
  Real pw(1.0, bits);
  for (int i = 0; i < poly.k; ++i) {
    denom += abs(poly.coeffs[i]) * pw;
    pw *= az;
  }
  Real num = abs(eval_poly(poly, z));
  if (denom.is_zero()) return num.is_zero() ? 0.0 : INFINITY;
  return (num / denom).to_double();
}

std::vector<BigComplex> roots(const MonicPoly& poly, const Precision& prec, const RootOptions& opt, int* iterations) {
  const int k = poly.k;
  const mpfr_prec_t bits = std::max<mpfr_prec_t>(poly.precision(), prec.mantissa_bits);
  std::vector<BigComplex> out;
  if (iterations) *iterations = 0;
  if (k == 0) return out;

  // Roots at the origin: leading low-order coefficients below 2^{-bits/2} of the scale.
  Real scale(1.0, bits);
  for (const auto& c : poly.coeffs) scale = max(scale, abs(c));
  Real eps = ldexp(scale, -static_cast<long>(bits) / 2);
  int m0 = 0;
  while (m0 < k && abs(poly.coeffs[m0]) <= eps) ++m0;
  for (int i = 0; i < m0; ++i) out.push_back(BigComplex(bits));
  const int d = k - m0;
  if (d == 0) return out;

  // The simultaneous iteration runs at the polynomial's precision: the Hankel solve
  // already budgets for the conditioning of the coefficients.
  std::vector<BigComplex> b(poly.coeffs.begin() + m0, poly.coeffs.end());
  const mpfr_prec_t wb = bits;
  std::vector<BigComplex> bw(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) bw[i] = BigComplex(b[i], wb);

  std::vector<BigComplex> z = newton_polygon_seeds(bw, wb);
  std::vector<char> done(static_cast<size_t>(d), 0);
  // Stop at half precision; Newton polish does the rest.
  Real tol = ldexp(Real(1.0, wb), -static_cast<long>(wb) / 2);
  BigComplex v(wb), dv(wb);
  int it = 0;
  int remaining = d;
  for (; it < opt.max_iterations && remaining > 0; ++it) {
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      horner(bw, z[i], v, dv);
      if (v.re.is_zero() && v.im.is_zero()) {
        done[i] = 1;
        --remaining;
        continue;
      }
      BigComplex ratio = v / dv;
      BigComplex sum(wb);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        sum += 1.0 / (z[i] - z[j]);
      }
      BigComplex w = ratio / (1.0 - ratio * sum);
      z[i] -= w;
      if (abs(w) <= tol * (abs(z[i]) + tol)) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  if (iterations) *iterations = it;
  if (remaining > 0)
    fail_numeric("roots: simultaneous iteration did not converge in " + std::to_string(opt.max_iterations) +
                 " sweeps; raise precision");

  // Newton polish at full precision on the full polynomial.
  Real ftol = ldexp(Real(1.0, bits), -static_cast<long>(bits) + 16);
  BigComplex fv(bits), fdv(bits);
  for (int i = 0; i < d; ++i) {
    BigComplex r(z[i], bits);
    for (int pass = 0; pass < 12; ++pass) {
      eval_poly_deriv(poly, r, fv, fdv);
      if (fdv.re.is_zero() && fdv.im.is_zero()) break;
      BigComplex step = fv / fdv;
      r -= step;
      if (abs(step) <= ftol * (abs(r) + ftol)) break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<LambdaRoot> unfold(const std::vector<BigComplex>& z_roots, const std::vector<int>& multiplicity,
                               const ModelParams& p) {
  std::vector<LambdaRoot> out;
  mpfr_prec_t bits = z_roots.empty() ? 128 : z_roots.front().bits();
  for (int i = 0; i < p.l; ++i) out.push_back({BigComplex(bits), p.l, 0, -1});
  std::vector<BigComplex> omega(static_cast<size_t>(p.s));
  for (int j = 0; j < p.s; ++j) omega[j] = polar(Real(1.0, bits), pi(bits) * 2.0 * static_cast<double>(j) / p.s);
  Real t(p.t, bits);
  for (size_t i = 0; i < z_roots.size(); ++i) {
    BigComplex w = (1.0 - z_roots[i]) * t;
    BigComplex r0 = (w.re.is_zero() && w.im.is_zero()) || p.s == 1 ? w : pow(w, rational(1, p.s, bits));
    int mult = i < multiplicity.size() ? multiplicity[i] : 1;
    for (int j = 0; j < p.s; ++j) out.push_back({r0 * omega[j], mult, j, static_cast<int>(i)});
  }
  return out;
}

ZeroSet find_zeros(const MonicPoly& poly, const Precision& prec, const RootOptions& opt) {
  ZeroSet zs;
  zs.k = poly.k;
  zs.params = poly.params;
  zs.bits = static_cast<int>(std::max<mpfr_prec_t>(poly.precision(), prec.mantissa_bits));
  std::vector<BigComplex> r = roots(poly, prec, opt, &zs.iterations);

  // Clusters: union of roots within 2^{-bits/4} max(1, |z|).
  const int n = static_cast<int>(r.size());
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  const double crad = std::ldexp(1.0, -zs.bits / 4);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Real dist = abs(r[i] - r[j]);
      double scale = std::max(1.0, abs(r[i]).to_double());
      if (dist <= crad * scale) parent[find(i)] = find(j);
    }
  }
  std::vector<int> size(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) ++size[find(i)];

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return arg_less(r[a], r[b]); });
  std::vector<int> cluster_of(static_cast<size_t>(n), -1);
  std::vector<int> root_cluster_index(static_cast<size_t>(n), -1);
  for (int idx : order) {
    int c = find(idx);
    if (cluster_of[c] < 0) {
      cluster_of[c] = static_cast<int>(zs.clusters.size());
      BigComplex center(r[idx].bits());
      for (int j = 0; j < n; ++j)
        if (find(j) == c) center += r[j];
      zs.clusters.push_back({center / static_cast<double>(size[c]), size[c]});
    }
    zs.z_roots.push_back(r[idx]);
    zs.multiplicity.push_back(size[c]);
  }

  // Backward-error certificate. A cluster of multiplicity m is certified through the
  // normwise perturbation of the polynomial: the m-fold root at its center.
  const double eps = std::ldexp(1.0, -zs.bits / 2);
  for (size_t i = 0; i < zs.z_roots.size(); ++i) {
    double be;
    if (zs.multiplicity[i] > 1) {
      Real scale(1.0, zs.bits);
      for (const auto& c : poly.coeffs) scale = max(scale, abs(c));
      // Distance from pi to a polynomial with an exact m-fold root near the cluster center:
      // bounded by the size of the first m Taylor coefficients relative to the scale.
      BigComplex c0(zs.z_roots[i], zs.bits);
      std::vector<BigComplex> tay(poly.coeffs.begin(), poly.coeffs.end());
      tay.push_back(BigComplex(Real(1.0, zs.bits), Real(zs.bits)));
      Real worst(zs.bits);
      // Taylor shift by synthetic division, keeping the first m coefficients.
      const int m = zs.multiplicity[i];
      for (int q = 0; q < m; ++q) {
        BigComplex acc(zs.bits);
        for (int j = static_cast<int>(tay.size()) - 1; j >= q; --j) {
          acc = acc * c0 + tay[j];
          tay[j] = acc;
        }
        worst = max(worst, abs(tay[q]));
      }
      be = (worst / scale).to_double();
    } else {
      be = backward_error(poly, zs.z_roots[i]);
    }
    zs.backward_error.push_back(be);
    zs.residual_bound = std::max(zs.residual_bound, be);
    if (!(be <= eps))
      fail_numeric("find_zeros: backward error " + std::to_string(be) + " exceeds 2^-(bits/2); raise precision");
  }
  zs.lambda_roots = unfold(zs.z_roots, zs.multiplicity, poly.params);
  return zs;
}

double point_polyline_distance(cd q, const std::vector<cd>& line) {
  double best = INFINITY;
  if (line.size() == 1) return std::abs(q - line[0]);
  for (size_t i = 0; i + 1 < line.size(); ++i) {
    cd a = line[i], b = line[i + 1];
    cd ab = b - a;
    double len2 = std::norm(ab);
    double u = len2 > 0 ? std::clamp(((q - a) * std::conj(ab)).real() / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, std::abs(q - (a + u * ab)));
  }
  return best;
}

DistanceReport distance_to_curve(const std::vector<BigComplex>& points, Plane plane, const CurveSample& curve,
                                 const ModelParams& p, double exclusion) {
  DerivedParams d = derive(p, 64);
  const double special = d.regime == Regime::PostCritical ? d.z0_d() : 1.0;
  auto lines = polylines(curve, plane);
  DistanceReport rep;
  double sum = 0;
  for (const auto& pt : points) {
    cd q = pt.to_cd();
    cd z = plane == Plane::Z ? q : 1.0 - std::pow(q, p.s) / p.t;
    if (std::abs(z - special) < exclusion) {
      rep.per_zero.push_back(std::nan(""));
      continue;
    }
    double best = INFINITY;
    for (const auto& line : lines) best = std::min(best, point_polyline_distance(q, line));
    rep.per_zero.push_back(best);
    rep.hausdorff_one_sided = std::max(rep.hausdorff_one_sided, best);
    sum += best;
    ++rep.used;
  }
  if (rep.used == 0) fail_domain("distance_to_curve: no points left after the exclusion");
  rep.mean = sum / rep.used;
  return rep;
}

CountingReport counting_discrepancy(const ZeroSet& zs, const Precision& prec) {
  if (zs.z_roots.empty()) fail_domain("counting_discrepancy: empty zero set");
  PhiFunction f = make_phi(zs.params, prec);
  CountingReport rep;
  for (const auto& z : zs.z_roots) {
    std::complex<double> w = psi_eval(f, BigComplex(z, f.bits())).to_cd();
    double a = std::arg(w) / (2 * M_PI);
    if (a < 0) a += 1.0;
    rep.angles.push_back(a);
  }
  std::sort(rep.angles.begin(), rep.angles.end());
  const double n = static_cast<double>(rep.angles.size());
  for (size_t i = 0; i < rep.angles.size(); ++i) {
    double lo = rep.angles[i] - static_cast<double>(i) / n;
    double hi = static_cast<double>(i + 1) / n - rep.angles[i];
    rep.sup_distance = std::max({rep.sup_distance, lo, hi});
  }
  return rep;
}

}  // namespace opal
