// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <benchmark/benchmark.h>

#include "opal/gas.hpp"
#include "opal/moments.hpp"
#include "opal/poly.hpp"
#include "opal/special.hpp"
#include "opal/zeros.hpp"

namespace {

using namespace opal;

const Precision P{256, 1e-30};
const ModelParams kPre{3, 0, 0.5, 3.0};

void BM_Moments(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(compute_moments(kPre, k, P));
}
BENCHMARK(BM_Moments)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Orthopoly(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  MomentTable mt = compute_moments(kPre, k, P);
  for (auto _ : state) benchmark::DoNotOptimize(orthopoly(mt, kPre));
}
BENCHMARK(BM_Orthopoly)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Roots(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  MonicPoly poly = build_pi_k(kPre, k, P);
  for (auto _ : state) benchmark::DoNotOptimize(find_zeros(poly, P));
}
BENCHMARK(BM_Roots)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

// Small |xi| takes the series path, large |xi| in the right half plane the asymptotic one.
void BM_PcfU(benchmark::State& state) {
  Real a(-(2.0 / 3 + 0.5), 256);
  BigComplex xi(static_cast<double>(state.range(0)), 0.5, 256);
  for (auto _ : state) benchmark::DoNotOptimize(pcf_u(a, xi, P));
}
BENCHMARK(BM_PcfU)->Arg(1)->Arg(8)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_GasSweeps(benchmark::State& state) {
  GasConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.sweeps = 100;
  cfg.burn_in = 10;
  cfg.thin = 10;
  for (auto _ : state) benchmark::DoNotOptimize(sample_gas(kPre, cfg));
  state.SetItemsProcessed(state.iterations() * cfg.sweeps * cfg.n);
}
BENCHMARK(BM_GasSweeps)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
