#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>

#include "tanint/rational.hpp"

namespace tanint {

/// Working precision in bits for a decimal digit count, with guard headroom.
mpfr_prec_t prec_for_digits(int digits);

/// Arbitrary-precision binary float with value semantics (MPFR-backed).
/// Every value carries its own precision; binary operations produce a result
/// at the wider of the two operand precisions, rounding to nearest. All
/// operations are deterministic for fixed operands.
class Real {
 public:
  Real() { mpfr_init2(v_, MPFR_PREC_MIN); }
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(long v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, v, MPFR_RNDN);
  }
  Real(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
  }
  Real(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.raw(), MPFR_RNDN);
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

  /// Parses a decimal literal such as "1e-12" or "0.5"; throws
  /// std::invalid_argument on garbage.
  static Real from_str(const std::string& s, mpfr_prec_t prec);

  static Real pi(mpfr_prec_t prec);
  static Real ln2(mpfr_prec_t prec);
  static Real catalan(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal rendering with the given number of significant digits
  /// (printf %g style).
  std::string str(int significant_digits) const;

  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  Real& operator+=(const Real& o) {
    bump_prec(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    bump_prec(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    bump_prec(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real tan(const Real& a) { return unary(a, mpfr_tan); }
  friend Real cos(const Real& a) { return unary(a, mpfr_cos); }
  friend Real log(const Real& a) { return unary(a, mpfr_log); }
  friend Real atan(const Real& a) { return unary(a, mpfr_atan); }
  friend Real exp(const Real& a) { return unary(a, mpfr_exp); }
  friend Real sinh(const Real& a) { return unary(a, mpfr_sinh); }
  friend Real cosh(const Real& a) { return unary(a, mpfr_cosh); }
  friend Real tanh(const Real& a) { return unary(a, mpfr_tanh); }

  friend Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// a * 2^k, exact.
  friend Real mul_2si(const Real& a, long k) {
    Real r(a.prec());
    mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
  static Real unary(const Real& a, UnaryFn fn) {
    Real r(a.prec());
    fn(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  static mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_));
  }
  void bump_prec(const Real& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) {
      mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
    }
  }

  mpfr_t v_;
};

}  // namespace tanint
