// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <vector>

#include "opal/geometry.hpp"
#include "opal/poly.hpp"

namespace opal {

struct RootCluster {
  BigComplex center;
  int multiplicity = 1;
};

struct LambdaRoot {
  BigComplex lambda;
  int multiplicity = 1;  // multiplicity of the source z cluster (l for the origin)
  int branch = 0;        // power of omega = e^{2 pi i/s}
  int source = -1;       // index into z_roots, -1 for the prepended lambda = 0
};

struct ZeroSet {
  int k = 0;
  ModelParams params;
  int bits = 0;
  std::vector<BigComplex> z_roots;  // k entries, sorted by arg then modulus
  std::vector<int> multiplicity;    // size of the cluster each root belongs to
  std::vector<double> backward_error;
  std::vector<RootCluster> clusters;
  std::vector<LambdaRoot> lambda_roots;
  double residual_bound = 0;  // max backward error
  int iterations = 0;
};

struct RootOptions {
  int max_iterations = 500;
};

// Aberth iteration seeded from the Newton polygon, then Newton polish at full precision.
std::vector<BigComplex> roots(const MonicPoly& poly, const Precision& prec, const RootOptions& opt = {},
                              int* iterations = nullptr);

// Roots with clustering, backward-error certificates and the lambda-plane unfolding.
ZeroSet find_zeros(const MonicPoly& poly, const Precision& prec, const RootOptions& opt = {});

// |pi(r)| / sum |a_i| |r|^i (leading coefficient included).
double backward_error(const MonicPoly& poly, const BigComplex& r);

// lambda^s = t (1 - z) for each root, times omega^j, after l copies of lambda = 0.
std::vector<LambdaRoot> unfold(const std::vector<BigComplex>& z_roots, const std::vector<int>& multiplicity,
                               const ModelParams& p);

struct DistanceReport {
  double hausdorff_one_sided = 0;  // max over used zeros
  double mean = 0;
  int used = 0;
  std::vector<double> per_zero;  // NaN for excluded zeros
};

// Distances from points to the curve's polylines in `plane`. Points whose z-plane image lies
// within `exclusion` of the special point (1 pre-critical, z0 post-critical) are skipped.
DistanceReport distance_to_curve(const std::vector<BigComplex>& points, Plane plane, const CurveSample& curve,
                                 const ModelParams& p, double exclusion = 0.15);

struct CountingReport {
  double sup_distance = 0;     // Kolmogorov distance between the angle samples and uniform
  std::vector<double> angles;  // arg psi(z_i) / 2 pi in [0, 1), sorted
};

// Compares the normalized zero counting measure of pi_k with nu: along C, d nu = d theta / 2 pi
// with theta = arg psi(z), so the angles of the zeros should be close to uniform.
CountingReport counting_discrepancy(const ZeroSet& zs, const Precision& prec);

double point_polyline_distance(std::complex<double> q, const std::vector<std::complex<double>>& line);

}  // namespace opal
