#pragma once

#include <gmp.h>

#include <compare>
#include <string>

#include "tanint/integer.hpp"

namespace tanint {

/// Exact rational number (GMP-backed), kept canonical at all times:
/// gcd(|num|, den) = 1, den >= 1, zero stored as 0/1.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {  // NOLINT: implicit by design
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den);

  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  /// Parses the canonical textual form: "0", "-3", "1/4", "-88069/90090".
  /// Rejects anything non-canonical ("2/1", "2/4", "1/-4", "-0", "007").
  /// Throws std::invalid_argument on rejection.
  static Rational parse_canonical(const std::string& s);

  /// Canonical textual form; inverse of parse_canonical.
  std::string str() const;

  Integer numerator() const {
    Integer r;
    mpz_set(r.raw(), mpq_numref(v_));
    return r;
  }
  Integer denominator() const {
    Integer r;
    mpz_set(r.raw(), mpq_denref(v_));
    return r;
  }

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  /// Multiplicative inverse; throws std::domain_error on zero.
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.v_, a.v_, b.v_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  /// True iff the stored representation is reduced with positive denominator.
  bool is_canonical() const;

  double to_double() const { return mpq_get_d(v_); }

  mpq_srcptr raw() const { return v_; }

 private:
  mpq_t v_;
};

}  // namespace tanint
