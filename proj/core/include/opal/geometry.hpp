// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <vector>

#include "opal/params.hpp"
#include "opal/special.hpp"

namespace opal {

// phi_r(z) = log(z/r) - (z - r)/z0 with the regime's log cut.
// Pre-critical: r = 1, principal log. Post-critical: r = z0, cut on (0, inf).
struct PhiFunction {
  Regime regime = Regime::PreCritical;
  Real r;
  Real z0;
  LogCut cut = LogCut::NegRealAxis;

  mpfr_prec_t bits() const { return r.bits(); }
};

// The level selected for the zero curve C (r = 1 pre-critical, r = z0 otherwise).
PhiFunction make_phi(const ModelParams& p, const Precision& prec);
PhiFunction make_phi_r(const ModelParams& p, const Real& r, const Precision& prec);

// Throws at z = 0. Points on the cut take the value from the upper side.
BigComplex phi_eval(const PhiFunction& f, const BigComplex& z);
// Re phi_r, independent of the cut.
Real re_phi(const PhiFunction& f, const BigComplex& z);
// psi_r(z) = (z/r) exp((r - z)/z0) = exp(phi_r(z)), entire.
BigComplex psi_eval(const PhiFunction& f, const BigComplex& z);

// hat phi_r(lambda) = log(t - lambda^s) + lambda^s/(t z0) - log(r t) + (r - 1)/z0 (principal log).
BigComplex hat_phi_eval(const ModelParams& p, const Real& r, const BigComplex& lambda);

enum class Plane { Z, Lambda };

struct CurvePoint {
  double theta = 0;
  BigComplex z;
  BigComplex lambda;
  int branch = 0;
  double nu_weight = 0;
};

struct CurveSample {
  Plane plane = Plane::Z;
  int components = 1;
  bool closed = true;
  double r = 1;
  std::vector<CurvePoint> points;  // grouped by branch, ordered by theta within a branch
};

// Polylines per component in the requested plane (double precision).
std::vector<std::vector<std::complex<double>>> polylines(const CurveSample& cs, Plane plane);

// Uniform: theta_j = 2 pi j / M, weights 1/M. Graded: theta_j = 2 pi x(j/M) with a sin^4
// transformation and weights x'(j/M)/M, so sums against nu stay accurate at the corner z = z0.
enum class ThetaGrid { Uniform, Graded };

// Solves exp(phi_r(z)) = exp(i theta_j) by Newton continuation from z = r.
CurveSample trace_curve(const PhiFunction& f, int M, const ModelParams& p, ThetaGrid grid = ThetaGrid::Uniform);

// Unfolds the z-plane curve through lambda^s = t (1 - z) over all s branches.
CurveSample hat_curve(const ModelParams& p, const Real& r, int M, const Precision& prec,
                      ThetaGrid grid = ThetaGrid::Uniform);

// d nu increments along consecutive points: exact integral of (1/2 pi i)(1/z - 1/z0) dz per chord.
std::vector<std::complex<double>> nu_increments(const CurveSample& cs, const PhiFunction& f);

// -Gamma(1-gamma)/sqrt(2 pi) ((1-z0)/z0)^gamma z0, the post-critical constant.
Real post_constant_c(const DerivedParams& d, const Precision& prec);

enum class DeformedForm {
  Corrected,  // post-critical modulus includes 1/|z - z0|
  AsStated,   // post-critical modulus without it
};

// Right-hand side of the deformed-curve equation Re phi(z) = rhs(z).
Real deformed_rhs(const ModelParams& p, int k, const BigComplex& z, const Precision& prec,
                  DeformedForm form = DeformedForm::Corrected);

// Zero curve of pi_k to o(1/k): Newton along the normal of C from each base point.
// Base points inside the exclusion disk around the special point are dropped.
CurveSample deformed_zero_curve(const ModelParams& p, int k, int M, const Precision& prec,
                                double exclusion = 0.15, DeformedForm form = DeformedForm::Corrected);

struct Droplet {
  int s = 1;
  double t = 0;
  double t_c = 0;

  bool contains(const std::complex<double>& lambda) const;
  bool contains(const BigComplex& lambda) const;
  // Boundary points, each tagged with its component index.
  std::vector<std::pair<int, std::complex<double>>> boundary(int M) const;
};

Droplet droplet(const ModelParams& p);

// S(lambda) = (t + t_c^2/(lambda^s - t))^{1/s} on the branch with S = conj(lambda) on the boundary.
BigComplex schwarz(const BigComplex& lambda, const ModelParams& p, const Precision& prec);

// int d hat nu(eta)/(lambda - eta) by the curve's nu weights.
BigComplex cauchy_nu(const BigComplex& lambda, const CurveSample& cs);
// Closed form lambda^{s-1}/(lambda^s - t).
BigComplex cauchy_closed_form(const BigComplex& lambda, const ModelParams& p);
// int_D d mu*(eta)/(lambda - eta) by 2D quadrature over D (u = lambda^s frame).
BigComplex cauchy_droplet(const BigComplex& lambda, const ModelParams& p, const Precision& prec);

enum class TestFunction { One, Lambda, Lambda2, Exp };

struct QuadratureDomainResult {
  BigComplex area_integral;
  BigComplex point_average;
  double residual = 0;
};

// int_D h d mu* against (1/s) sum_j h(t^{1/s} omega^j).
QuadratureDomainResult quadrature_domain_check(const ModelParams& p, TestFunction h, const Precision& prec);

enum class Region { Exterior, NearCurve, Interior, NearSpecial };

const char* to_string(Region r);

struct RegionOptions {
  double kappa = -1;  // <0 selects 3(1+gamma)
  double exclusion = 0.15;
};

Region classify_region(const BigComplex& z, const ModelParams& p, int k, const RegionOptions& opt = {});
Region classify_region_lambda(const BigComplex& lambda, const ModelParams& p, int k, const RegionOptions& opt = {});

// Exterior conformal map of the pre-critical droplet and its inverse.
BigComplex uniformize(const BigComplex& xi, const ModelParams& p, const Precision& prec);
BigComplex uniformize_inverse(const BigComplex& lambda, const ModelParams& p, const Precision& prec);

}  // namespace opal
