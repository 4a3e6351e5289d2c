// Copyright 2026 The opal Authors.
// Licensed under the Apache License, Version 2.0.

#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

namespace opal {

// Working precision. Every high-precision entry point takes one of these.
struct Precision {
  int mantissa_bits = 256;
  double target_rel_err = 1e-30;

  Precision doubled() const { return {2 * mantissa_bits, target_rel_err}; }
  Precision with_bits(int b) const { return {b, target_rel_err}; }
};

// RAII MPFR scalar. Each value owns its precision; binary operations
// produce results at the larger operand precision.
class Real {
 public:
  Real() : Real(mpfr_prec_t{64}) {}
  explicit Real(mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_zero(v_, 1);
  }
  Real(double x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(long x, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(int x, mpfr_prec_t bits) : Real(static_cast<long>(x), bits) {}
  Real(const std::string& s, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }
  // Copy at a different precision (rounds).
  Real(const Real& o, mpfr_prec_t bits) {
    mpfr_init2(v_, bits);
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Base-2 exponent (floor(log2|x|)+1); very negative for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }
  std::string to_string(int digits) const;

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(double d) {
    mpfr_add_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(double d) {
    mpfr_sub_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(double d) {
    mpfr_mul_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(double d) {
    mpfr_div_d(v_, v_, d, MPFR_RNDN);
    return *this;
  }

 private:
  mpfr_t v_;
};

inline mpfr_prec_t max_bits(const Real& a, const Real& b) {
  return a.bits() > b.bits() ? a.bits() : b.bits();
}

#define OPAL_REAL_BINOP(op, fn, fnd, dfn)                         \
  inline Real operator op(const Real& a, const Real& b) {         \
    Real r(max_bits(a, b));                                       \
    fn(r.get(), a.get(), b.get(), MPFR_RNDN);                     \
    return r;                                                     \
  }                                                               \
  inline Real operator op(const Real& a, double b) {              \
    Real r(a.bits());                                             \
    fnd(r.get(), a.get(), b, MPFR_RNDN);                          \
    return r;                                                     \
  }                                                               \
  inline Real operator op(double a, const Real& b) {              \
    Real r(b.bits());                                             \
    dfn(r.get(), a, b.get(), MPFR_RNDN);                          \
    return r;                                                     \
  }

namespace detail {
inline int add_d_rev(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t m) {
  return mpfr_add_d(r, b, a, m);
}
inline int mul_d_rev(mpfr_ptr r, double a, mpfr_srcptr b, mpfr_rnd_t m) {
  return mpfr_mul_d(r, b, a, m);
}
}  // namespace detail

OPAL_REAL_BINOP(+, mpfr_add, mpfr_add_d, detail::add_d_rev)
OPAL_REAL_BINOP(-, mpfr_sub, mpfr_sub_d, mpfr_d_sub)
OPAL_REAL_BINOP(*, mpfr_mul, mpfr_mul_d, detail::mul_d_rev)
OPAL_REAL_BINOP(/, mpfr_div, mpfr_div_d, mpfr_d_div)
#undef OPAL_REAL_BINOP

inline Real operator-(const Real& a) {
  Real r(a.bits());
  mpfr_neg(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()); }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()); }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()); }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()); }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()); }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) < 0; }
inline bool operator<=(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) <= 0; }
inline bool operator>=(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) >= 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.get(), b) > 0; }

#define OPAL_REAL_UNARY(name, fn)       \
  inline Real name(const Real& a) {     \
    Real r(a.bits());                   \
    fn(r.get(), a.get(), MPFR_RNDN);    \
    return r;                           \
  }
OPAL_REAL_UNARY(abs, mpfr_abs)
OPAL_REAL_UNARY(sqrt, mpfr_sqrt)
OPAL_REAL_UNARY(exp, mpfr_exp)
OPAL_REAL_UNARY(log, mpfr_log)
OPAL_REAL_UNARY(log1p, mpfr_log1p)
OPAL_REAL_UNARY(expm1, mpfr_expm1)
OPAL_REAL_UNARY(sin, mpfr_sin)
OPAL_REAL_UNARY(cos, mpfr_cos)
OPAL_REAL_UNARY(tanh, mpfr_tanh)
OPAL_REAL_UNARY(sinh, mpfr_sinh)
OPAL_REAL_UNARY(cosh, mpfr_cosh)
OPAL_REAL_UNARY(atan, mpfr_atan)
OPAL_REAL_UNARY(erfc, mpfr_erfc)
#undef OPAL_REAL_UNARY

inline Real atan2(const Real& y, const Real& x) {
  Real r(max_bits(y, x));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}
inline Real hypot(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, const Real& b) {
  Real r(max_bits(a, b));
  mpfr_pow(r.get(), a.get(), b.get(), MPFR_RNDN);
  return r;
}
inline Real pow(const Real& a, long n) {
  Real r(a.bits());
  mpfr_pow_si(r.get(), a.get(), n, MPFR_RNDN);
  return r;
}
inline Real ldexp(const Real& a, long e) {
  Real r(a.bits());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}
inline Real max(const Real& a, const Real& b) { return a < b ? b : a; }
inline Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real pi(mpfr_prec_t bits);
// Exact rational p/q rounded to the given precision.
Real rational(long p, long q, mpfr_prec_t bits);

}  // namespace opal
