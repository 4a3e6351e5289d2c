// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "commands.hpp"

#include <fmt/format.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "checks.hpp"
#include "opal/asymptotics.hpp"
#include "opal/error.hpp"
#include "opal/gas.hpp"
#include "opal/geometry.hpp"
#include "opal/poly.hpp"
#include "opal/zeros.hpp"

namespace opal::cli {
namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return fs::path(cfg.out_dir) / name;
}

void write_json(const RunConfig& cfg, const std::string& name, const json& j) {
  std::ofstream f(out_path(cfg, name));
  f << j.dump(2) << "\n";
  if (!f) fail_config("cannot write " + name);
}

class Csv {
 public:
  Csv(const RunConfig& cfg, const std::string& name, const std::string& header) : f_(out_path(cfg, name)) {
    if (!f_) fail_config("cannot write " + name);
    f_ << kSchemaLine << "\n" << header << "\n";
  }
  template <typename... Args>
  void row(const Args&... args) {
    bool first = true;
    ((f_ << (first ? "" : ",") << cell(args), first = false), ...);
    f_ << "\n";
  }

 private:
  static std::string cell(double x) { return fmt_num(x); }
  static std::string cell(int x) { return std::to_string(x); }
  static std::string cell(long x) { return std::to_string(x); }
  static std::string cell(size_t x) { return std::to_string(x); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  std::ofstream f_;
};

json params_json(const ModelParams& p) {
  DerivedParams d = derive(p);
  return json{{"s", p.s},       {"l", p.l},           {"t", p.t},
              {"T", p.T},       {"t_c", d.t_c.to_double()}, {"z0", d.z0_d()},
              {"gamma", d.gamma_d()}, {"regime", to_string(d.regime)}};
}

json complex_json(const BigComplex& z, int digits) {
  return json{{"re", z.re.to_string(digits)}, {"im", z.im.to_string(digits)}};
}

double special_point(const ModelParams& p) {
  DerivedParams d = derive(p);
  return d.regime == Regime::PostCritical ? d.z0_d() : 1.0;
}

Real curve_r(const ModelParams& p, mpfr_prec_t bits) {
  DerivedParams d = derive(p, bits);
  return d.regime == Regime::PostCritical ? d.z0 : Real(1.0, bits);
}

}  // namespace

std::string fmt_num(double x) { return fmt::format("{:.16e}", x); }

int cmd_poly(const RunConfig& cfg) {
  require_noncritical(derive(cfg.model));
  const int digits = static_cast<int>(cfg.prec.mantissa_bits * 0.30103) - 2;
  for (int k : cfg.ks) {
    MomentTable mt = compute_moments(cfg.model, k, cfg.prec);
    MonicPoly poly = orthopoly(mt, cfg.model);
    {
      Csv csv(cfg, fmt::format("moments_k{}.csv", k), "m,re_I,im_I,rel_err_estimate");
      for (int m = mt.m_lo; m <= mt.m_hi; ++m) {
        auto v = mt.at(m).to_cd();
        csv.row(m, v.real(), v.imag(), mt.rel_err[static_cast<size_t>(m - mt.m_lo)]);
      }
    }
    json j;
    j["schema"] = "opal-schema v1";
    j["params"] = params_json(cfg.model);
    j["k"] = k;
    j["n"] = degree_n(k, cfg.model);
    j["bits"] = poly.bits;
    j["solve_residual"] = poly.solve_residual;
    j["refinement_rounds"] = poly.refinement_rounds;
    json coeffs = json::array();
    for (const auto& a : poly.coeffs) coeffs.push_back(complex_json(a, digits));
    coeffs.push_back(json{{"re", "1"}, {"im", "0"}});
    j["coeffs_ascending"] = coeffs;
    write_json(cfg, fmt::format("poly_k{}.json", k), j);
    std::cout << fmt::format("poly k={} bits={} residual={}\n", k, poly.bits, fmt_num(poly.solve_residual));
  }
  return 0;
}

int cmd_zeros(const RunConfig& cfg) {
  const ModelParams& p = cfg.model;
  DerivedParams d = derive(p);
  require_noncritical(d);
  CurveSample c = trace_curve(make_phi(p, cfg.prec), cfg.curve_M, p);
  for (int k : cfg.ks) {
    MonicPoly poly = build_pi_k(p, k, cfg.prec);
    ZeroSet zs = find_zeros(poly, cfg.prec);
    const bool with_curves = d.gamma_d() > 0;
    DistanceReport dc, dd;
    if (with_curves) {
      dc = distance_to_curve(zs.z_roots, Plane::Z, c, p, cfg.exclusion);
      CurveSample def = deformed_zero_curve(p, k, cfg.curve_M, cfg.prec, cfg.exclusion);
      dd = distance_to_curve(zs.z_roots, Plane::Z, def, p, cfg.exclusion);
    }
    // Distances are z-plane distances of the source root; empty when excluded or not computed.
    auto dist = [&](const DistanceReport& r, int src) -> std::string {
      if (!with_curves || src < 0 || std::isnan(r.per_zero[static_cast<size_t>(src)])) return "";
      return fmt_num(r.per_zero[static_cast<size_t>(src)]);
    };
    Csv csv(cfg, fmt::format("zeros_k{}.csv", k),
            "k,index,plane,re,im,multiplicity,dist_to_C,dist_to_deformed,backward_error,branch");
    for (size_t i = 0; i < zs.z_roots.size(); ++i) {
      auto z = zs.z_roots[i].to_cd();
      int src = static_cast<int>(i);
      csv.row(k, i, "z", z.real(), z.imag(), zs.multiplicity[i], dist(dc, src), dist(dd, src), zs.backward_error[i], 0);
    }
    for (size_t i = 0; i < zs.lambda_roots.size(); ++i) {
      const auto& lr = zs.lambda_roots[i];
      auto l = lr.lambda.to_cd();
      double be = lr.source >= 0 ? zs.backward_error[lr.source] : 0.0;
      csv.row(k, i, "lambda", l.real(), l.imag(), lr.multiplicity, dist(dc, lr.source), dist(dd, lr.source), be,
              lr.branch);
    }
    json j;
    j["schema"] = "opal-schema v1";
    j["params"] = params_json(p);
    j["k"] = k;
    j["bits"] = zs.bits;
    j["roots"] = zs.z_roots.size();
    j["clusters"] = zs.clusters.size();
    j["residual_bound"] = zs.residual_bound;
    j["iterations"] = zs.iterations;
    if (with_curves) {
      CountingReport cr = counting_discrepancy(zs, cfg.prec);
      j["distance_C"] = {{"max", dc.hausdorff_one_sided}, {"mean", dc.mean}, {"used", dc.used}};
      j["distance_deformed"] = {{"max", dd.hausdorff_one_sided}, {"mean", dd.mean}, {"used", dd.used}};
      j["counting_discrepancy"] = cr.sup_distance;
    }
    write_json(cfg, fmt::format("zeros_k{}_summary.json", k), j);
    std::cout << fmt::format("zeros k={} roots={} clusters={} residual_bound={}\n", k, zs.z_roots.size(),
                             zs.clusters.size(), fmt_num(zs.residual_bound));
  }
  return 0;
}

int cmd_curves(const RunConfig& cfg) {
  const ModelParams& p = cfg.model;
  require_noncritical(derive(p));
  const mpfr_prec_t bits = cfg.prec.mantissa_bits;
  const std::string header = "theta,re_z,im_z,re_lambda,im_lambda,branch,nu_weight";
  // Every branch of a z-plane curve is written (lambda rotated by omega^b); nu weights are per branch.
  auto emit = [&](const std::string& name, const CurveSample& cs, bool all_branches) {
    Csv csv(cfg, name, header);
    const int nb = all_branches ? p.s : 1;
    for (int b = 0; b < nb; ++b) {
      std::complex<double> w = std::polar(1.0, 2 * M_PI * b / p.s);
      for (const auto& pt : cs.points) {
        auto z = pt.z.to_cd();
        auto l = pt.lambda.to_cd() * w;
        csv.row(pt.theta, z.real(), z.imag(), l.real(), l.imag(), pt.branch + b, pt.nu_weight / nb);
      }
    }
  };
  CurveSample c = trace_curve(make_phi(p, cfg.prec), cfg.curve_M, p);
  emit("curve_C.csv", c, false);
  emit("curve_Chat.csv", hat_curve(p, curve_r(p, bits), cfg.curve_M, cfg.prec), false);
  {
    Csv csv(cfg, "droplet_boundary.csv", header);
    std::vector<int> counter(static_cast<size_t>(p.s), 0);
    for (const auto& [comp, l] : droplet(p).boundary(cfg.curve_M)) {
      int idx = counter[static_cast<size_t>(comp)]++;
      std::complex<double> z = 1.0 - std::pow(l, p.s) / p.t;
      csv.row(2 * M_PI * idx / cfg.curve_M, z.real(), z.imag(), l.real(), l.imag(), comp, 0.0);
    }
  }
  for (int k : cfg.ks) {
    emit(fmt::format("curve_deformed_k{}.csv", k), deformed_zero_curve(p, k, cfg.curve_M, cfg.prec, cfg.exclusion),
         true);
  }
  std::cout << fmt::format("curves written to {}\n", cfg.out_dir);
  return 0;
}

int cmd_asym(const RunConfig& cfg) {
  const ModelParams& p = cfg.model;
  DerivedParams d = derive(p);
  require_noncritical(d);
  const int kmax = *std::max_element(cfg.asym_ks.begin(), cfg.asym_ks.end());
  std::vector<std::complex<double>> pts = cfg.asym_points;
  if (pts.empty()) {
    const double sp = special_point(p);
    CurveSample c = trace_curve(make_phi(p, cfg.prec), 64, p);
    pts = {d.regime == Regime::PreCritical ? std::complex<double>(2, 2) : std::complex<double>(-1, 0),
           {0.3 * sp, 0.1 * sp}, c.points[24].z.to_cd(), {sp, 0.05}};
  }
  std::vector<StudyPoint> study;
  for (size_t i = 0; i < pts.size(); ++i) {
    Region r = classify_region(BigComplex(pts[i], 128), p, kmax);
    study.push_back({pts[i], r, fmt::format("p{}", i)});
  }
  StudyOptions opt;
  opt.prec = cfg.prec;
  opt.predict.exclusion = cfg.exclusion;
  opt.quantity = cfg.asym_correction ? StudyQuantity::CorrectionMagnitude : StudyQuantity::PredictionError;
  AsymptoticReport rep = error_study(p, cfg.asym_ks, study, opt);
  Csv csv(cfg, "asym_errors.csv", "k,region,point,re_z,im_z,rel_err");
  json samples = json::array();
  for (const auto& s : rep.samples) {
    csv.row(s.k, std::string(to_string(s.region)), s.label, s.z.real(), s.z.imag(), s.rel_err);
    samples.push_back({{"k", s.k},
                       {"point", s.label},
                       {"region", to_string(s.region)},
                       {"z", {s.z.real(), s.z.imag()}},
                       {"exact", {s.exact.real(), s.exact.imag()}},
                       {"predicted", {s.predicted.real(), s.predicted.imag()}},
                       {"rel_err", s.rel_err},
                       {"at_floor", s.at_floor}});
  }
  json fits = json::array();
  for (const auto& f : rep.fits) {
    fits.push_back({{"point", f.label},
                    {"region", to_string(f.region)},
                    {"exponent", f.exponent},
                    {"prefactor", f.prefactor},
                    {"residual", f.residual},
                    {"used", f.used},
                    {"ratios", f.ratios}});
    std::cout << fmt::format("{} {} exponent={:.4f} used={}\n", f.label, to_string(f.region), f.exponent, f.used);
  }
  json j;
  j["schema"] = "opal-schema v1";
  j["params"] = params_json(p);
  j["quantity"] = cfg.asym_correction ? "correction" : "error";
  j["ks"] = rep.ks;
  j["samples"] = samples;
  j["fits"] = fits;
  write_json(cfg, "asym_report.json", j);
  return 0;
}

int cmd_check(const RunConfig& cfg) {
  std::vector<CheckLine> lines = run_identity_suite(cfg);
  bool ok = true;
  json arr = json::array();
  for (const auto& l : lines) {
    ok = ok && l.pass;
    std::cout << fmt::format("{} {} value={:.3e} threshold={:.1e}\n", l.pass ? "PASS" : "FAIL", l.name, l.value,
                             l.threshold);
    arr.push_back({{"name", l.name}, {"value", l.value}, {"threshold", l.threshold}, {"pass", l.pass}});
  }
  json j;
  j["schema"] = "opal-schema v1";
  j["params"] = params_json(cfg.model);
  j["checks"] = arr;
  j["pass"] = ok;
  write_json(cfg, "check.json", j);
  return ok ? 0 : 1;
}

int cmd_gas(const RunConfig& cfg) {
  const ModelParams& p = cfg.model;
  std::vector<GasRun> runs;
  if (cfg.gas_chains == 1) {
    runs.push_back(sample_gas(p, cfg.gas));
  } else {
    runs = sample_gas_chains(p, cfg.gas, cfg.gas_chains);
  }
  Csv fin(cfg, "gas_final.csv", "chain,index,re,im");
  Csv rad(cfg, "gas_radial.csv", "chain,r_lo,r_hi,empirical,expected");
  Csv en(cfg, "gas_energy.csv", "chain,sweep,energy");
  json chains = json::array();
  for (size_t c = 0; c < runs.size(); ++c) {
    const GasRun& run = runs[c];
    for (size_t i = 0; i < run.final_state.size(); ++i)
      fin.row(c, i, run.final_state[i].real(), run.final_state[i].imag());
    GasStats st = gas_stats(run, cfg.gas_delta);
    for (const auto& b : st.radial_profile) rad.row(c, b.r_lo, b.r_hi, b.empirical, b.expected);
    for (size_t s = 0; s < run.energies.size(); s += static_cast<size_t>(run.config.thin))
      en.row(c, s, run.energies[s]);
    chains.push_back({{"seed", run.config.seed},
                      {"N", run.N},
                      {"proposal_sigma", run.sigma},
                      {"acceptance_rate", st.acceptance_rate},
                      {"samples", st.samples},
                      {"inside_fraction", st.inside_fraction},
                      {"delta", st.delta},
                      {"moment_2s", st.moment_2s},
                      {"moment_2s_expected", st.moment_2s_expected},
                      {"moment_rel_err", st.moment_rel_err},
                      {"radial_ks", st.radial_ks},
                      {"energy_drift", st.energy_drift}});
    std::cout << fmt::format("gas chain={} acceptance={:.3f} inside={:.4f} moment_rel_err={:.4f}\n", c,
                             st.acceptance_rate, st.inside_fraction, st.moment_rel_err);
  }
  json j;
  j["schema"] = "opal-schema v1";
  j["params"] = {{"s", p.s}, {"l", p.l}, {"t", p.t}, {"T", p.T}};
  j["n"] = cfg.gas.n;
  j["sweeps"] = cfg.gas.sweeps;
  j["burn_in"] = cfg.gas.burn_in;
  j["thin"] = cfg.gas.thin;
  j["chains"] = chains;
  write_json(cfg, "gas_stats.json", j);
  return 0;
}

}  // namespace opal::cli
