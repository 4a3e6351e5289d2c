// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.
//
// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "checks.hpp"
#include "opal/asymptotics.hpp"
#include "opal/gas.hpp"
#include "opal/geometry.hpp"
#include "opal/moments.hpp"
#include "opal/poly.hpp"
#include "opal/special.hpp"
#include "opal/zeros.hpp"

using namespace opal;

namespace {

const Precision P{256, 1e-30};
const ModelParams kPre{3, 0, 0.5, 3.0};
const ModelParams kPost{3, 0, 1.5, 3.0};
const ModelParams kPost2{2, 0, 2.0, 2.0};
const ModelParams kPostG13{3, 1, 1.5, 3.0};
const ModelParams kGammaZero{3, 2, 0.5, 3.0};

// Pinned tolerances.
constexpr double kPlanarTol = 1e-8;
constexpr double kPlanarSeconds = 60;
constexpr double kGammaZeroTol = 1e-30;
constexpr double kMomentTol = 1e-30;
constexpr double kScaledDistSpread = 2.0;  // max/min of dist_to_C * k / log k
constexpr double kZerosSeconds = 600;
constexpr double kCountingConst = 5.0;
constexpr double kExteriorRatio = 4.0;
constexpr double kExponentTol = 0.3;
constexpr double kModelTol = 1e-25;
constexpr double kGaussTol = 1e-30;
constexpr double kBetaTol = 1e-30;
constexpr double kLimitTol = 1e-3;
constexpr double kBalayageTol = 1e-8;
constexpr double kQuadDomainTol = 1e-6;
constexpr double kMassTol = 1e-10;
constexpr double kInsideMin = 0.95;
constexpr double kGasMomentTol = 0.05;
constexpr double kGasSeconds = 300;

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("%s [%d] %s: %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
}

// Exceptions count as failures of the criterion that raised them.
void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail += std::string(" exception: ") + e.what();
  }
  report(id, name, pass, detail);
}

std::string fmt(const char* f, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double rel(const BigComplex& a, const BigComplex& b) { return (abs(a - b) / abs(b)).to_double(); }

double max_rel_change(const std::vector<BigComplex>& a, const MomentTable& mt) {
  double worst = 0;
  for (int m = mt.m_lo; m <= mt.m_hi; ++m)
    worst = std::max(worst, rel(a[static_cast<size_t>(m - mt.m_lo)], mt.at(m)));
  return worst;
}

bool planar_contour(std::string& d) {
  struct Case {
    double gamma, N, t;
  };
  const std::vector<std::vector<std::complex<double>>> qs = {{1.0}, {0.0, 1.0}, {0.0, 0.0, 1.0}};
  bool ok = true;
  for (const Case& c : {Case{0.5, 2, 0.3}, Case{2.0 / 3, 3, 0.5}}) {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (int j = 0; j <= 3; ++j)
      for (const auto& q : qs) worst = std::max(worst, planar_contour_identity_check(c.gamma, c.N, c.t, j, q, P).residual);
    double secs = seconds_since(t0);
    ok = ok && worst < kPlanarTol && secs < kPlanarSeconds;
    d += fmt("residual=%.2e", worst) + fmt(" (%.1fs); ", secs);
  }
  return ok;
}

bool gamma_zero(std::string& d) {
  double worst_a = 0, worst_p = 0;
  std::vector<BigComplex> lams = {BigComplex(1.1, 0.4, 256), BigComplex(-0.3, 0.9, 256), BigComplex(0.2, -0.05, 256)};
  for (int k : {1, 2, 5, 10, 20, 30, 40, 50}) {
    MonicPoly poly = build_pi_k(kGammaZero, k, P);
    for (const auto& a : poly.coeffs) worst_a = std::max(worst_a, abs(a).to_double());
    for (const auto& l : lams) {
      BigComplex expected = pow(l, kGammaZero.s - 1) * pow(pow(l, kGammaZero.s) - 0.5, k);
      worst_p = std::max(worst_p, rel(pn_eval(poly, l), expected));
    }
  }
  d = fmt("max|a_i|=%.2e", worst_a) + fmt(" p_n rel=%.2e", worst_p);
  return worst_a < kGammaZeroTol && worst_p < kGammaZeroTol;
}

bool moment_stability(std::string& d) {
  double dbl = 0, rad = 0;
  for (int k : {25, 50, 100}) {
    MomentTable mt = compute_moments(kPre, k, P);
    const mpfr_prec_t b2 = 2 * mt.bits();
    auto all = moments_on_circle(mt.c, mt.gamma, mt.m_lo, -1, Real(mt.meta.radius_neg, b2), 2 * mt.meta.nodes, b2);
    auto pos = moments_on_circle(mt.c, mt.gamma, 0, mt.m_hi, Real(mt.meta.radius_pos, b2), 2 * mt.meta.nodes, b2);
    all.insert(all.end(), pos.begin(), pos.end());
    dbl = std::max(dbl, max_rel_change(all, mt));
    MomentOptions opt;
    opt.radius_scale = 1.3;
    rad = std::max(rad, max_rel_change(compute_moments(kPre, k, P, opt).values, mt));
  }
  d = fmt("doubling=%.2e", dbl) + fmt(" radius=%.2e", rad);
  return dbl < kMomentTol && rad < kMomentTol;
}

struct ZeroRun {
  int k;
  double to_c, to_def, counting;
};

std::vector<ZeroRun> zero_runs(const ModelParams& p, double* secs) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<ZeroRun> out;
  CurveSample c = trace_curve(make_phi(p, P), 512, p);
  for (int k : {65, 80, 95}) {
    ZeroSet zs = find_zeros(build_pi_k(p, k, P), P);
    CurveSample def = deformed_zero_curve(p, k, 512, P, 0.15);
    out.push_back({k, distance_to_curve(zs.z_roots, Plane::Z, c, p, 0.15).hausdorff_one_sided,
                   distance_to_curve(zs.z_roots, Plane::Z, def, p, 0.15).hausdorff_one_sided,
                   counting_discrepancy(zs, P).sup_distance});
  }
  *secs = seconds_since(t0);
  return out;
}

std::vector<ZeroRun> pre_runs, post_runs;
double pre_secs = 0, post_secs = 0;

bool zero_curves(std::string& d) {
  pre_runs = zero_runs(kPre, &pre_secs);
  post_runs = zero_runs(kPost, &post_secs);
  bool ok = true;
  for (auto* runs : {&pre_runs, &post_runs}) {
    const char* name = runs == &pre_runs ? "pre" : "post";
    double secs = runs == &pre_runs ? pre_secs : post_secs;
    double lo = INFINITY, hi = 0;
    for (size_t i = 0; i < runs->size(); ++i) {
      const ZeroRun& r = (*runs)[i];
      ok = ok && r.to_def < r.to_c;
      if (i > 0) ok = ok && r.to_def < (*runs)[i - 1].to_def;
      double scaled = r.to_c * r.k / std::log(r.k);
      lo = std::min(lo, scaled);
      hi = std::max(hi, scaled);
      d += std::string(name) + " k=" + std::to_string(r.k) + fmt(" C=%.3e", r.to_c) + fmt(" def=%.3e; ", r.to_def);
    }
    ok = ok && hi / lo < kScaledDistSpread && secs < kZerosSeconds;
    d += std::string(name) + fmt(" spread=%.2f", hi / lo) + fmt(" (%.0fs); ", secs);
  }
  return ok;
}

bool counting(std::string& d) {
  bool ok = true;
  for (auto* runs : {&pre_runs, &post_runs}) {
    if (runs->empty()) return false;
    const ZeroRun& r = runs->back();
    ok = ok && r.counting < kCountingConst / r.k;
    d += std::string(runs == &pre_runs ? "pre" : "post") + fmt(" k*sup=%.2f; ", r.counting * r.k);
  }
  return ok;
}

StudyFit fit(const ModelParams& p, std::complex<double> z, Region region, StudyQuantity q) {
  StudyOptions opt;
  opt.quantity = q;
  return error_study(p, {16, 32, 64}, {{z, region, "pt"}}, opt).fits.at(0);
}

std::complex<double> point_on_curve(const ModelParams& p) {
  return trace_curve(make_phi(p, P), 256, p).points[64].z.to_cd();
}

bool asymptotic_fidelity(std::string& d) {
  StudyFit ext = fit(kPre, {2, 2}, Region::Exterior, StudyQuantity::PredictionError);
  bool ok = ext.ratios.size() == 2 && ext.ratios[0] > kExteriorRatio && ext.ratios[1] > kExteriorRatio;
  d += fmt("ext-pre ratios=%.3g", ext.ratios.at(0)) + fmt(",%.3g; ", ext.ratios.at(1));
  auto expo = [&](const char* name, const StudyFit& f, double target) {
    ok = ok && std::abs(f.exponent - target) < kExponentTol;
    d += std::string(name) + fmt(" exp=%.3f", f.exponent) + fmt(" (target %.3f); ", target);
  };
  expo("int-pre", fit(kPre, {0.3, 0}, Region::Interior, StudyQuantity::PredictionError), -1.0);
  expo("ext-post", fit(kPost2, {-1, 0}, Region::Exterior, StudyQuantity::PredictionError), -1.0);
  expo("near-pre", fit(kPre, point_on_curve(kPre), Region::NearCurve, StudyQuantity::CorrectionMagnitude),
       -(1.0 + 2.0 / 3));
  expo("near-post g=1/3",
       fit(kPostG13, point_on_curve(kPostG13), Region::NearCurve, StudyQuantity::CorrectionMagnitude),
       -(0.5 + 1.0 / 3));
  return ok;
}

bool model_problem(std::string& d) {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> box(-6.0, 6.0);
  double r1 = 0, r2 = 0, r3 = 0, gauss = 0, jumps = 0, beta = 0, lim = 0;
  Real s2pi = sqrt(pi(256) * 2.0);
  for (double g : {1.0 / 3, 2.0 / 3}) {
    const double a = -(g + 0.5);
    Real ar(a, 256), am(-a, 256);
    Real g1 = gamma_real(Real(0.5 + a, 256), P), g2 = gamma_real(Real(0.5 - a, 256), P);
    BigComplex e1 = polar(Real(1.0, 256), -(pi(256) * (a - 0.5) / 2.0));
    BigComplex e2 = polar(Real(1.0, 256), -(pi(256) * (a + 0.5) / 2.0));
    Real h(1e-20, 256);
    BigComplex hc(h, Real(256));
    for (int i = 0; i < 20; ++i) {
      BigComplex xi(box(rng), box(rng), 256);
      BigComplex ixi = mul_i(xi);
      BigComplex u = pcf_u(ar, xi, P), um = pcf_u(ar, -xi, P);
      r1 = std::max(r1, rel((e1 * u + conj(e1) * um) * g1 / s2pi, pcf_u(am, ixi, P)));
      r2 = std::max(r2, rel((e2 * pcf_u(am, ixi, P) + conj(e2) * pcf_u(am, -ixi, P)) * g2 / s2pi, u));
      BigComplex du = (pcf_u(ar, xi + hc, P) - pcf_u(ar, xi - hc, P)) / (h * 2.0);
      r3 = std::max(r3, (abs(du + xi * u / 2.0 + pcf_u(ar + 1.0, xi, P) * (a + 0.5)) / abs(u)).to_double());
      BigComplex gx = exp(-(xi * xi) / 4.0);
      gauss = std::max(gauss, rel(pcf_u(Real(-0.5, 256), xi, P), gx));
    }
    Real gr(g, 256);
    for (double x : {0.5, 1.3, 3.1}) {
      struct Ray {
        int index;
        BigComplex point;
        Sector plus, minus;
      };
      const Ray rays[] = {{0, BigComplex(x, 0.0, 256), Sector::Plus1, Sector::Minus1},
                          {1, BigComplex(0.0, x, 256), Sector::Plus2, Sector::Plus1},
                          {2, BigComplex(-x, 0.0, 256), Sector::Plus2, Sector::Minus2},
                          {3, BigComplex(0.0, -x, 256), Sector::Minus1, Sector::Minus2}};
      for (const auto& r : rays) {
        auto pa = model_psi_post(r.point, r.plus, gr, P).m;
        auto pb = model_psi_post(r.point, r.minus, gr, P).m;
        auto v = model_jump(r.index, gr, 256);
        double worst = 0, scale = 0;
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            worst = std::max(worst, abs(pa[i][j] - (pb[i][0] * v[0][j] + pb[i][1] * v[1][j])).to_double());
            scale = std::max(scale, abs(pa[i][j]).to_double());
          }
        jumps = std::max(jumps, worst / scale);
      }
    }
    ModelConstants mc = model_constants(gr, P);
    beta = std::max(beta, abs(mc.beta12 * mc.beta21 - g / 2).to_double());
    BigComplex xi = polar(Real(1000.0, 256), pi(256) / 4.0);
    double target = 1.0 / gamma_real(-gr, P).to_double();
    lim = std::max(lim, std::abs((xi * psi_tilde_12(xi, gr, P)).to_cd() - target));
  }
  d = fmt("rel1=%.1e", r1) + fmt(" rel2=%.1e", r2) + fmt(" rel3=%.1e", r3) + fmt(" gauss=%.1e", gauss) +
      fmt(" jumps=%.1e", jumps) + fmt(" beta=%.1e", beta) + fmt(" limit=%.1e", lim);
  return r1 < kModelTol && r2 < kModelTol && r3 < kModelTol && gauss < kGaussTol && jumps < kModelTol &&
         beta < kBetaTol && lim < kLimitTol;
}

bool potential_theory(std::string& d) {
  bool ok = true;
  for (const ModelParams& p : {kPre, kPost}) {
    cli::RunConfig cfg;
    cfg.model = p;
    cfg.prec = P;
    d += p.t < 1 ? "pre:" : "post:";
    for (const auto& line : cli::run_identity_suite(cfg)) {
      double tol = 0;
      if (line.name == "balayage_nu" || line.name == "balayage_droplet") tol = kBalayageTol;
      if (line.name == "quadrature_domain") tol = kQuadDomainTol;
      if (line.name == "nu_mass" || line.name == "nu_hat_mass") tol = kMassTol;
      if (line.name == "nu_positive") tol = 0.5;
      if (tol == 0) continue;
      ok = ok && line.value < tol;
      d += " " + line.name + fmt("=%.1e", line.value);
    }
    d += "; ";
  }
  return ok;
}

bool gas(std::string& d) {
  auto t0 = std::chrono::steady_clock::now();
  GasConfig cfg;
  cfg.n = 200;
  cfg.sweeps = 200000;
  cfg.burn_in = 20000;
  cfg.thin = 100;
  cfg.seed = 7;
  GasStats st = gas_stats(sample_gas(kPre, cfg), 0.05);
  double secs = seconds_since(t0);
  d = fmt("inside=%.4f", st.inside_fraction) + fmt(" moment_rel_err=%.4f", st.moment_rel_err) +
      fmt(" acceptance=%.3f", st.acceptance_rate) + fmt(" (%.0fs)", secs);
  return st.inside_fraction >= kInsideMin && st.moment_rel_err < kGasMomentTol && secs < kGasSeconds;
}

}  // namespace

int main() {
  criterion(1, "planar-contour identity", planar_contour);
  criterion(2, "gamma=0 closed form", gamma_zero);
  criterion(3, "moment stability", moment_stability);
  criterion(4, "zero-curve convergence", zero_curves);
  criterion(5, "counting-measure convergence", counting);
  criterion(6, "asymptotic formula fidelity", asymptotic_fidelity);
  criterion(7, "model-problem suite", model_problem);
  criterion(8, "potential-theory identities", potential_theory);
  criterion(9, "gas validation", gas);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
