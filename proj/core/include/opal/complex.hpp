// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <complex>
#include <string>

#include "opal/real.hpp"

namespace opal {

struct BigComplex {
  Real re;
  Real im;

  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t bits) : re(bits), im(bits) {}
  BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit BigComplex(Real r) : re(std::move(r)), im(re.bits()) {}
  BigComplex(double r, double i, mpfr_prec_t bits) : re(r, bits), im(i, bits) {}
  BigComplex(std::complex<double> z, mpfr_prec_t bits)
      : re(z.real(), bits), im(z.imag(), bits) {}
  BigComplex(const BigComplex& z, mpfr_prec_t bits) : re(z.re, bits), im(z.im, bits) {}

  mpfr_prec_t bits() const { return max_bits(re, im); }
  std::complex<double> to_cd() const { return {re.to_double(), im.to_double()}; }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }

  BigComplex& operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  BigComplex& operator-=(const BigComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator*=(const Real& o) {
    re *= o;
    im *= o;
    return *this;
  }
  BigComplex& operator*=(double o) {
    re *= o;
    im *= o;
    return *this;
  }
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator/=(const Real& o) {
    re /= o;
    im /= o;
    return *this;
  }
  BigComplex& operator/=(double o) {
    re /= o;
    im /= o;
    return *this;
  }
};

BigComplex operator+(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a, const BigComplex& b);
BigComplex operator*(const BigComplex& a, const BigComplex& b);
BigComplex operator/(const BigComplex& a, const BigComplex& b);
BigComplex operator-(const BigComplex& a);

BigComplex operator+(const BigComplex& a, const Real& b);
BigComplex operator-(const BigComplex& a, const Real& b);
BigComplex operator*(const BigComplex& a, const Real& b);
BigComplex operator/(const BigComplex& a, const Real& b);
BigComplex operator+(const BigComplex& a, double b);
BigComplex operator-(const BigComplex& a, double b);
BigComplex operator*(const BigComplex& a, double b);
BigComplex operator/(const BigComplex& a, double b);
BigComplex operator-(double a, const BigComplex& b);
BigComplex operator/(double a, const BigComplex& b);
BigComplex operator-(const Real& a, const BigComplex& b);
BigComplex operator/(const Real& a, const BigComplex& b);
inline BigComplex operator*(const Real& a, const BigComplex& b) { return b * a; }
inline BigComplex operator*(double a, const BigComplex& b) { return b * a; }
inline BigComplex operator+(double a, const BigComplex& b) { return b + a; }
inline BigComplex operator+(const Real& a, const BigComplex& b) { return b + a; }

BigComplex conj(const BigComplex& z);
Real abs(const BigComplex& z);
Real norm(const BigComplex& z);  // |z|^2
Real arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal logarithm, arg in (-pi, pi].
BigComplex log(const BigComplex& z);
// Principal square root.
BigComplex sqrt(const BigComplex& z);
// exp(a * Log z) with the principal logarithm.
BigComplex pow(const BigComplex& z, const Real& a);
BigComplex pow(const BigComplex& z, long n);
BigComplex polar(const Real& r, const Real& theta);
// i * z
BigComplex mul_i(const BigComplex& z);

// acc += a * b without allocating a result object per call.
void fma_into(BigComplex& acc, const BigComplex& a, const BigComplex& b, Real& t1, Real& t2);

std::string to_string(const BigComplex& z, int digits);

}  // namespace opal
