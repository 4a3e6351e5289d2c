// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <gtest/gtest.h>

#include <cmath>

#include "opal/error.hpp"
#include "opal/gas.hpp"

using namespace opal;

namespace {

const ModelParams kPre{3, 0, 0.5, 3.0};
const ModelParams kGinibre{1, 0, 0.0, 1.0};

GasConfig small_config(long sweeps) {
  GasConfig c;
  c.n = 60;
  c.sweeps = sweeps;
  c.burn_in = sweeps / 5;
  c.thin = 10;
  c.seed = 7;
  return c;
}

}  // namespace

TEST(Gas, SameSeedSameChain) {
  GasConfig c = small_config(300);
  GasRun a = sample_gas(kPre, c), b = sample_gas(kPre, c);
  EXPECT_EQ(a.final_state, b.final_state);
  EXPECT_EQ(a.energies, b.energies);
  EXPECT_DOUBLE_EQ(a.acceptance_rate, b.acceptance_rate);
  c.seed = 8;
  GasRun d = sample_gas(kPre, c);
  EXPECT_NE(a.final_state, d.final_state);
}

TEST(Gas, ChainsAreIndependentAndReproducible) {
  GasConfig c = small_config(100);
  auto r1 = sample_gas_chains(kPre, c, 3);
  auto r2 = sample_gas_chains(kPre, c, 3);
  ASSERT_EQ(r1.size(), 3u);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(r1[j].final_state, r2[j].final_state);
  EXPECT_NE(r1[0].final_state, r1[1].final_state);
}

TEST(Gas, EnergyRotationInvariant) {
  GasState x = gas_initial_state(kPre, 80, 3);
  const double N = 80 / kPre.T;
  const std::complex<double> omega = std::polar(1.0, 2 * M_PI / 3);
  GasState y = x;
  for (auto& v : y) v *= omega;
  double e = gas_energy(x, kPre, N), f = gas_energy(y, kPre, N);
  EXPECT_NEAR(e, f, 1e-12 * std::abs(e));
  for (const auto& v : x) EXPECT_NEAR(gas_potential(v, kPre), gas_potential(v * omega, kPre), 1e-14);
}

TEST(Gas, DeltaMatchesFullEnergy) {
  GasState x = gas_initial_state(kPre, 50, 11);
  const double N = 50 / kPre.T;
  for (int i : {0, 17, 49}) {
    std::complex<double> to = x[i] + std::complex<double>(0.03, -0.02);
    GasState y = x;
    y[i] = to;
    double full = gas_energy(y, kPre, N) - gas_energy(x, kPre, N);
    EXPECT_NEAR(gas_energy_delta(x, i, to, kPre, N), full, 1e-9 * (1 + std::abs(full)));
  }
}

TEST(Gas, PotentialFormula) {
  std::complex<double> l(0.4, 0.3);
  std::complex<double> ls = std::pow(l, 3);
  double expect = std::norm(ls) - 2 * kPre.t * ls.real();
  EXPECT_NEAR(gas_potential(l, kPre), expect, 1e-15);
}

TEST(Gas, InitialStateInsideDroplet) {
  GasState x = gas_initial_state(kPre, 500, 5);
  for (const auto& v : x) EXPECT_LE(std::abs(std::pow(v, 3) - kPre.t), 1.0 + 1e-12);
}

TEST(Gas, GinibreUniformDisk) {
  GasConfig c;
  c.n = 200;
  c.sweeps = 4000;
  c.burn_in = 1000;
  c.thin = 20;
  c.seed = 3;
  GasStats st = gas_stats(sample_gas(kGinibre, c));
  EXPECT_LT(st.radial_ks, 0.05);
  EXPECT_GT(st.inside_fraction, 0.95);
}

TEST(Gas, PreCriticalMomentAndConcentration) {
  GasConfig c;
  c.n = 200;
  c.sweeps = 4000;
  c.burn_in = 1000;
  c.thin = 20;
  GasStats st = gas_stats(sample_gas(kPre, c));
  EXPECT_NEAR(st.moment_2s_expected, 0.25 + 0.5, 1e-15);
  EXPECT_LT(st.moment_rel_err, 0.05);
  EXPECT_GE(st.inside_fraction, 0.95);
  EXPECT_GT(st.acceptance_rate, 0.2);
  EXPECT_LT(st.acceptance_rate, 0.9);
  EXPECT_LT(std::abs(st.energy_drift), 0.01);
  double mass = 0;
  for (const auto& b : st.radial_profile) mass += b.expected;
  EXPECT_NEAR(mass, 1.0, 1e-6);
}

TEST(Gas, RadialCdf) {
  for (double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(equilibrium_radial_cdf(r, kGinibre), r * r, 1e-12);
  EXPECT_NEAR(equilibrium_radial_cdf(5.0, kPre), 1.0, 1e-12);
  double prev = 0;
  for (double r = 0; r < 1.3; r += 0.05) {
    double v = equilibrium_radial_cdf(r, kPre);
    EXPECT_GE(v, prev - 1e-15);
    prev = v;
  }
}

TEST(Gas, DriftOfFlatSeries) {
  std::vector<double> e(600, -100.0);
  EXPECT_NEAR(energy_drift(e), 0.0, 1e-15);
}

TEST(Gas, ConfigValidation) {
  GasConfig c;
  c.n = 1;
  EXPECT_THROW(c.validate(), Error);
  c = GasConfig{};
  c.sweeps = 0;
  EXPECT_THROW(c.validate(), Error);
  c = GasConfig{};
  c.burn_in = c.sweeps;
  EXPECT_THROW(c.validate(), Error);
  c = GasConfig{};
  EXPECT_NO_THROW(c.validate());
  EXPECT_NEAR(c.resolved_N(kPre), 200 / 3.0, 1e-12);
  EXPECT_NEAR(c.resolved_sigma(kPre), 0.5 / std::sqrt(200.0), 1e-12);
}

TEST(Gas, StatsNeedSamples) {
  GasRun empty;
  EXPECT_THROW(gas_stats(empty), Error);
}
