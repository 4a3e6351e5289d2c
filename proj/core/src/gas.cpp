// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include "opal/gas.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "opal/error.hpp"

namespace opal {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double t_c_of(const ModelParams& p) { return std::sqrt(p.T / p.s); }

// Area of {|u| <= R} intersected with {|u - d| <= rho}.
double lens_area(double R, double d, double rho) {
  if (R <= 0) return 0;
  if (d >= R + rho) return 0;
  if (d <= std::abs(R - rho)) return M_PI * std::min(R, rho) * std::min(R, rho);
  double a1 = std::acos(std::clamp((d * d + R * R - rho * rho) / (2 * d * R), -1.0, 1.0));
  double a2 = std::acos(std::clamp((d * d + rho * rho - R * R) / (2 * d * rho), -1.0, 1.0));
  double k = (-d + R + rho) * (d + R - rho) * (d - R + rho) * (d + R + rho);
  return R * R * a1 + rho * rho * a2 - 0.5 * std::sqrt(std::max(k, 0.0));
}

}  // namespace

void GasConfig::validate() const {
  if (n < 2) fail_config("gas: n must be at least 2");
  if (sweeps < 1) fail_config("gas: sweeps must be at least 1");
  if (burn_in < 0 || burn_in >= sweeps) fail_config("gas: burn_in must lie in [0, sweeps)");
  if (thin < 1) fail_config("gas: thin must be at least 1");
  if (proposal_sigma < 0) fail_config("gas: proposal_sigma must be positive");
}

double GasConfig::resolved_N(const ModelParams& p) const { return N > 0 ? N : n / p.T; }

double GasConfig::resolved_sigma(const ModelParams& p) const {
  return proposal_sigma > 0 ? proposal_sigma : 0.5 / std::sqrt(resolved_N(p) * p.s);
}

double gas_potential(const std::complex<double>& lambda, const ModelParams& p) {
  std::complex<double> ls = std::pow(lambda, p.s);
  return std::norm(ls) - 2 * p.t * ls.real();
}

double gas_energy(const GasState& x, const ModelParams& p, double N) {
  double e = 0;
  const size_t n = x.size();
  for (size_t i = 0; i < n; ++i) {
    e += N * gas_potential(x[i], p);
    for (size_t j = i + 1; j < n; ++j) e -= std::log(std::norm(x[i] - x[j]));
  }
  return e;
}

double gas_energy_delta(const GasState& x, int i, const std::complex<double>& to, const ModelParams& p, double N) {
  const std::complex<double> from = x[i];
  // Products of |to - x_j|^2 / |from - x_j|^2 in blocks of 8, one log per block.
  double logsum = 0;
  double prod = 1;
  int in_block = 0;
  const int n = static_cast<int>(x.size());
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    prod *= std::norm(to - x[j]) / std::norm(from - x[j]);
    if (++in_block == 8) {
      logsum += std::log(prod);
      prod = 1;
      in_block = 0;
    }
  }
  logsum += std::log(prod);
  return -logsum + N * (gas_potential(to, p) - gas_potential(from, p));
}

GasState gas_initial_state(const ModelParams& p, int n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double tc = t_c_of(p);
  GasState x(n);
  for (int i = 0; i < n; ++i) {
    // u uniform on |u - t| <= t_c, then one of the s roots of u.
    double rad = tc * std::sqrt(unif(rng));
    double ang = 2 * M_PI * unif(rng);
    std::complex<double> u = p.t + std::polar(rad, ang);
    int branch = std::min(static_cast<int>(unif(rng) * p.s), p.s - 1);
    x[i] = std::pow(u, 1.0 / p.s) * std::polar(1.0, 2 * M_PI * branch / p.s);
  }
  return x;
}

// The gas also makes sense at t = 0 (the s = 1 case is the Ginibre ensemble).
static void validate_gas_params(const ModelParams& p) {
  if (p.s < 1) fail_domain("gas: s must be >= 1");
  if (!(p.t >= 0) || !std::isfinite(p.t)) fail_domain("gas: t must be >= 0");
  if (!(p.T > 0) || !std::isfinite(p.T)) fail_domain("gas: T must be > 0");
}

GasRun sample_gas(const ModelParams& p, const GasConfig& cfg) {
  validate_gas_params(p);
  cfg.validate();
  GasRun run;
  run.config = cfg;
  run.params = p;
  run.N = cfg.resolved_N(p);
  run.sigma = cfg.resolved_sigma(p);
  GasState x = gas_initial_state(p, cfg.n, cfg.seed);
  std::mt19937_64 rng(splitmix64(cfg.seed ^ 0x5bd1e995ULL));
  std::normal_distribution<double> gauss(0.0, run.sigma);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double energy = gas_energy(x, p, run.N);
  long accepted = 0;
  run.energies.reserve(cfg.sweeps);
  for (long sweep = 0; sweep < cfg.sweeps; ++sweep) {
    for (int i = 0; i < cfg.n; ++i) {
      std::complex<double> to = x[i] + std::complex<double>(gauss(rng), gauss(rng));
      double de = gas_energy_delta(x, i, to, p, run.N);
      if (de <= 0 || unif(rng) < std::exp(-de)) {
        x[i] = to;
        energy += de;
        ++accepted;
      }
    }
    run.energies.push_back(energy);
    if (sweep >= cfg.burn_in && (sweep - cfg.burn_in) % cfg.thin == 0) run.snapshots.push_back(x);
  }
  run.acceptance_rate = static_cast<double>(accepted) / (static_cast<double>(cfg.sweeps) * cfg.n);
  run.final_state = std::move(x);
  return run;
}

std::vector<GasRun> sample_gas_chains(const ModelParams& p, const GasConfig& cfg, int chains) {
  if (chains < 1) fail_config("gas: chains must be at least 1");
  std::vector<std::future<GasRun>> jobs;
  for (int j = 0; j < chains; ++j) {
    GasConfig c = cfg;
    c.seed = splitmix64(cfg.seed + static_cast<std::uint64_t>(j));
    jobs.push_back(std::async(std::launch::async, [p, c] { return sample_gas(p, c); }));
  }
  std::vector<GasRun> out;
  for (auto& f : jobs) out.push_back(f.get());
  return out;
}

double equilibrium_radial_cdf(double r, const ModelParams& p) {
  if (r <= 0) return 0;
  const double tc = t_c_of(p);
  return lens_area(std::pow(r, p.s), p.t, tc) / (M_PI * tc * tc);
}

double energy_drift(const std::vector<double>& energies) {
  const size_t n = energies.size();
  if (n < 6) return 0;
  const size_t w = n / 6;
  double a = 0, b = 0, scale = 0;
  for (size_t i = n - 2 * w; i < n - w; ++i) a += energies[i];
  for (size_t i = n - w; i < n; ++i) b += energies[i];
  for (size_t i = n - 2 * w; i < n; ++i) scale += std::abs(energies[i]);
  a /= static_cast<double>(w);
  b /= static_cast<double>(w);
  scale /= static_cast<double>(2 * w);
  return scale > 0 ? std::abs(b - a) / scale : 0;
}

GasStats gas_stats(const GasRun& run, double delta, int radial_bins) {
  if (run.snapshots.empty()) fail_domain("gas_stats: no samples after burn-in");
  const ModelParams& p = run.params;
  const double tc = t_c_of(p);
  GasStats st;
  st.delta = delta;
  st.acceptance_rate = run.acceptance_rate;
  st.moment_2s_expected = p.t * p.t + tc * tc / 2;
  std::vector<double> radii;
  long inside = 0;
  double m2s = 0;
  for (const auto& snap : run.snapshots) {
    for (const auto& l : snap) {
      std::complex<double> u = std::pow(l, p.s);
      if (std::abs(u - p.t) <= tc * (1 + delta)) ++inside;
      m2s += std::norm(u);
      radii.push_back(std::abs(l));
    }
  }
  st.samples = static_cast<long>(radii.size());
  const double ns = static_cast<double>(st.samples);
  st.inside_fraction = static_cast<double>(inside) / ns;
  st.moment_2s = m2s / ns;
  st.moment_rel_err = std::abs(st.moment_2s - st.moment_2s_expected) / st.moment_2s_expected;

  std::sort(radii.begin(), radii.end());
  for (size_t i = 0; i < radii.size(); ++i) {
    double f = equilibrium_radial_cdf(radii[i], p);
    st.radial_ks = std::max({st.radial_ks, std::abs(f - static_cast<double>(i) / ns),
                             std::abs(static_cast<double>(i + 1) / ns - f)});
  }
  const double rmax = std::pow(p.t + tc, 1.0 / p.s) * (1 + delta);
  size_t pos = 0;
  for (int b = 0; b < radial_bins; ++b) {
    RadialBin bin;
    bin.r_lo = rmax * b / radial_bins;
    bin.r_hi = rmax * (b + 1) / radial_bins;
    size_t start = pos;
    while (pos < radii.size() && (radii[pos] < bin.r_hi || b == radial_bins - 1)) ++pos;
    bin.empirical = static_cast<double>(pos - start) / ns;
    bin.expected = equilibrium_radial_cdf(bin.r_hi, p) - equilibrium_radial_cdf(bin.r_lo, p);
    st.radial_profile.push_back(bin);
  }
  st.energy_drift = energy_drift(run.energies);
  return st;
}

}  // namespace opal
