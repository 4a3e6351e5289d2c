// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <string>
#include <vector>

#include "opal/geometry.hpp"
#include "opal/poly.hpp"

namespace opal {

struct PredictOptions {
  // Sign of the interior term k^{-1-gamma} e^{k g_int} (...) relative to the
  // near-curve formulas. -1 keeps the interior, near-curve and exterior regions
  // consistent with one another.
  int interior_sign = -1;
  // Post-critical, gamma >= 1/2: include the closed-form explicit 1/k term near the curve.
  // Off by default: its coefficient does not match exact pi_k (see README).
  bool post_one_over_k = false;
  double exclusion = 0.15;
  double kappa = -1;  // <0 selects 3(1+gamma)
};

// Leading asymptotic value of pi_k(z) in the given region.
BigComplex predict_pre(const BigComplex& z, int k, const ModelParams& p, Region region, const Precision& prec,
                       const PredictOptions& opt = {});
BigComplex predict_post(const BigComplex& z, int k, const ModelParams& p, Region region, const Precision& prec,
                        const PredictOptions& opt = {});

struct Prediction {
  Region region = Region::Exterior;
  BigComplex value;
};

// Region picked by classify_region, then the matching formula.
Prediction predict(const BigComplex& z, int k, const ModelParams& p, const Precision& prec,
                   const PredictOptions& opt = {});

// p_n(lambda) through p_n = (-t)^k lambda^l pi_k(1 - lambda^s/t).
Prediction predict_pn(const BigComplex& lambda, int k, const ModelParams& p, const Precision& prec,
                      const PredictOptions& opt = {});

// Exterior-matched leading factor: z^k (1-1/z)^gamma pre-critical, z^k ((z-z0)/z)^gamma post-critical.
BigComplex outer_factor(const BigComplex& z, int k, const ModelParams& p, const Precision& prec);

enum class NearCurveMutation { None, FlipSign, DropGammaFactor };

// Pre-critical near-curve formula written in the lambda plane:
// lambda^l (lambda^s - t)^k (1 - t/lambda^s)^{-gamma}
//   [1 + e^{-k hat phi} k^{-1-gamma} (1-1/z0)^{-1-gamma}/Gamma(-gamma) (t/lambda^s)(1-t/lambda^s)^gamma].
BigComplex pn_near_curve_pre(const BigComplex& lambda, int k, const ModelParams& p, const Precision& prec,
                             NearCurveMutation mutation = NearCurveMutation::None);

// Two closed forms of the post-critical constant c.
struct ConstantCheck {
  BigComplex from_model;  // 2^{1/2} ((1-z0)/(2 z0))^gamma e^{-i pi gamma} z0 (Psi_1)_{21}
  Real closed_form;       // -Gamma(1-gamma)/sqrt(2 pi) ((1-z0)/z0)^gamma z0
  double rel_diff = 0;
};
ConstantCheck post_constant_check(const ModelParams& p, const Precision& prec);

enum class StudyQuantity {
  PredictionError,       // |exact/predicted - 1|
  CorrectionMagnitude,   // |exact/outer_factor - 1 (- explicit 1/k term)|
};

struct StudyPoint {
  std::complex<double> z;
  Region region = Region::Exterior;  // forced region for the formula
  std::string label;
};

struct StudySample {
  int k = 0;
  std::string label;
  std::complex<double> z;
  Region region = Region::Exterior;
  std::complex<double> exact;
  std::complex<double> predicted;
  double rel_err = 0;
  bool at_floor = false;
};

struct StudyFit {
  std::string label;
  Region region = Region::Exterior;
  double exponent = 0;
  double prefactor = 0;
  double residual = 0;  // rms of the log-log fit
  int used = 0;
  std::vector<double> ratios;  // err(k_i)/err(k_{i+1})
};

struct AsymptoticReport {
  ModelParams params;
  StudyQuantity quantity = StudyQuantity::PredictionError;
  std::vector<int> ks;
  std::vector<StudySample> samples;
  std::vector<StudyFit> fits;
};

struct StudyOptions {
  StudyQuantity quantity = StudyQuantity::PredictionError;
  Precision prec{256, 1e-30};
  PredictOptions predict;
};

// Exact pi_k from the moment pipeline at each k, then errors and log-log fits per point.
AsymptoticReport error_study(const ModelParams& p, const std::vector<int>& ks, const std::vector<StudyPoint>& points,
                             const StudyOptions& opt = {});

// Same, reusing already computed polynomials (one per k, same order as ks).
AsymptoticReport error_study(const ModelParams& p, const std::vector<MonicPoly>& polys,
                             const std::vector<StudyPoint>& points, const StudyOptions& opt = {});

}  // namespace opal
