// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "opal/params.hpp"

namespace opal {

// Eigenvalue gas with density prod_{i<j} |l_i - l_j|^2 exp(-N sum W(l_i)),
// W(l) = |l|^{2s} - t (l^s + conj(l)^s). Double precision throughout.
struct GasConfig {
  int n = 200;
  double N = 0;               // <= 0 selects n / T
  long burn_in = 20000;       // sweeps discarded before sampling
  long sweeps = 200000;       // total sweeps, burn-in included
  long thin = 100;            // a snapshot every `thin` sweeps after burn-in
  double proposal_sigma = 0;  // <= 0 selects 0.5 / sqrt(N s)
  std::uint64_t seed = 1;

  void validate() const;
  double resolved_N(const ModelParams& p) const;
  double resolved_sigma(const ModelParams& p) const;
};

using GasState = std::vector<std::complex<double>>;

struct GasRun {
  GasConfig config;
  ModelParams params;
  double N = 0;
  double sigma = 0;
  double acceptance_rate = 0;
  GasState final_state;
  std::vector<GasState> snapshots;  // after burn-in, every `thin` sweeps
  std::vector<double> energies;     // energy after every sweep
};

double gas_potential(const std::complex<double>& lambda, const ModelParams& p);

// -2 sum_{i<j} log|l_i - l_j| + N sum W(l_i).
double gas_energy(const GasState& x, const ModelParams& p, double N);

// Energy change when particle i moves to `to` (O(n)).
double gas_energy_delta(const GasState& x, int i, const std::complex<double>& to, const ModelParams& p, double N);

// Draws n points from the equilibrium measure (start of the chain).
GasState gas_initial_state(const ModelParams& p, int n, std::uint64_t seed);

// Single-particle Gaussian-proposal Metropolis chain. Deterministic given the seed.
GasRun sample_gas(const ModelParams& p, const GasConfig& cfg);

// Independent chains, chain j seeded from cfg.seed and j.
std::vector<GasRun> sample_gas_chains(const ModelParams& p, const GasConfig& cfg, int chains);

struct RadialBin {
  double r_lo = 0;
  double r_hi = 0;
  double empirical = 0;  // fraction of particles in the bin
  double expected = 0;   // mu* mass of the annulus
};

struct GasStats {
  long samples = 0;  // particle samples used
  double delta = 0.05;
  double inside_fraction = 0;
  double moment_2s = 0;           // Monte Carlo E|l|^{2s}
  double moment_2s_expected = 0;  // t^2 + t_c^2 / 2
  double moment_rel_err = 0;
  double radial_ks = 0;  // sup distance of empirical and mu* radial CDFs
  double energy_drift = 0;
  double acceptance_rate = 0;
  std::vector<RadialBin> radial_profile;
};

// Throws if the run has no snapshots.
GasStats gas_stats(const GasRun& run, double delta = 0.05, int radial_bins = 40);

// mu*(|l| <= r).
double equilibrium_radial_cdf(double r, const ModelParams& p);

// Relative change of the mean energy between the last two sixths of the chain.
double energy_drift(const std::vector<double>& energies);

}  // namespace opal
