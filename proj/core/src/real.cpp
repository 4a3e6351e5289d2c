// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#include <cstdio>
#include <vector>

#include "opal/complex.hpp"

namespace opal {

std::string Real::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
  return std::string(buf.data());
}

Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real rational(long p, long q, mpfr_prec_t bits) {
  Real r(p, bits);
  mpfr_div_si(r.get(), r.get(), q, MPFR_RNDN);
  return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  *this = *this / o;
  return *this;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  mpfr_prec_t p = std::max(a.bits(), b.bits());
  BigComplex r(p);
  Real t(p);
  mpfr_mul(r.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(r.re.get(), r.re.get(), t.get(), MPFR_RNDN);
  mpfr_mul(r.im.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(r.im.get(), r.im.get(), t.get(), MPFR_RNDN);
  return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  // Smith's algorithm avoids overflow in |b|^2.
  if (abs(b.re) >= abs(b.im)) {
    Real q = b.im / b.re;
    Real d = b.re + b.im * q;
    return {(a.re + a.im * q) / d, (a.im - a.re * q) / d};
  }
  Real q = b.re / b.im;
  Real d = b.re * q + b.im;
  return {(a.re * q + a.im) / d, (a.im * q - a.re) / d};
}

BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigComplex operator+(const BigComplex& a, const Real& b) { return {a.re + b, Real(a.im, std::max(a.im.bits(), b.bits()))}; }
BigComplex operator-(const BigComplex& a, const Real& b) { return {a.re - b, Real(a.im, std::max(a.im.bits(), b.bits()))}; }
BigComplex operator*(const BigComplex& a, const Real& b) { return {a.re * b, a.im * b}; }
BigComplex operator/(const BigComplex& a, const Real& b) { return {a.re / b, a.im / b}; }
BigComplex operator+(const BigComplex& a, double b) { return {a.re + b, a.im}; }
BigComplex operator-(const BigComplex& a, double b) { return {a.re - b, a.im}; }
BigComplex operator*(const BigComplex& a, double b) { return {a.re * b, a.im * b}; }
BigComplex operator/(const BigComplex& a, double b) { return {a.re / b, a.im / b}; }
BigComplex operator-(double a, const BigComplex& b) { return {a - b.re, -b.im}; }
BigComplex operator/(double a, const BigComplex& b) {
  return BigComplex(Real(a, b.bits()), Real(b.bits())) / b;
}
BigComplex operator-(const Real& a, const BigComplex& b) { return {a - b.re, Real(-b.im, std::max(a.bits(), b.im.bits()))}; }

BigComplex operator/(const Real& a, const BigComplex& b) {
  return BigComplex(a, Real(b.bits())) / b;
}

BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
Real abs(const BigComplex& z) { return hypot(z.re, z.im); }
Real norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
Real arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z) {
  Real m = exp(z.re);
  mpfr_prec_t p = z.bits();
  Real s(p), c(p);
  mpfr_sin_cos(s.get(), c.get(), z.im.get(), MPFR_RNDN);
  return {m * c, m * s};
}

BigComplex log(const BigComplex& z) { return {log(abs(z)), arg(z)}; }

BigComplex sqrt(const BigComplex& z) {
  mpfr_prec_t p = z.bits();
  if (z.re.is_zero() && z.im.is_zero()) return BigComplex(p);
  Real m = abs(z);
  // Stable half-angle form.
  if (z.re.sign() >= 0) {
    Real u = sqrt((m + z.re) / 2.0);
    return {u, z.im / (u * 2.0)};
  }
  Real v = sqrt((m - z.re) / 2.0);
  if (z.im.sign() < 0) v = -v;
  return {z.im / (v * 2.0), v};
}

BigComplex pow(const BigComplex& z, const Real& a) {
  if (z.re.is_zero() && z.im.is_zero()) return BigComplex(z.bits());
  return exp(log(z) * a);
}

BigComplex pow(const BigComplex& z, long n) {
  mpfr_prec_t p = z.bits();
  BigComplex result(Real(1.0, p), Real(p));
  BigComplex base = z;
  bool inv = n < 0;
  unsigned long e = inv ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  if (inv) return 1.0 / result;
  return result;
}

BigComplex polar(const Real& r, const Real& theta) {
  Real s(theta.bits()), c(theta.bits());
  mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
  return {r * c, r * s};
}

BigComplex mul_i(const BigComplex& z) { return {-z.im, z.re}; }

void fma_into(BigComplex& acc, const BigComplex& a, const BigComplex& b, Real& t1, Real& t2) {
  mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
  mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.re.get(), acc.re.get(), t1.get(), MPFR_RNDN);
  mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
  mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
  mpfr_add(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
  mpfr_add(acc.im.get(), acc.im.get(), t1.get(), MPFR_RNDN);
}

std::string to_string(const BigComplex& z, int digits) {
  return z.re.to_string(digits) + (z.im.sign() < 0 ? " - " : " + ") + abs(z.im).to_string(digits) + "i";
}

}  // namespace opal
