#pragma once

#include <gmp.h>

#include <compare>
#include <cstddef>
#include <string>

namespace tanint {

/// Arbitrary-precision signed integer with value semantics (GMP-backed).
class Integer {
 public:
  Integer() { mpz_init(v_); }
  Integer(long v) { mpz_init_set_si(v_, v); }  // NOLINT: implicit by design
  explicit Integer(const std::string& decimal);

  Integer(const Integer& o) { mpz_init_set(v_, o.v_); }
  Integer(Integer&& o) noexcept {
    mpz_init(v_);
    mpz_swap(v_, o.v_);
  }
  Integer& operator=(const Integer& o) {
    if (this != &o) mpz_set(v_, o.v_);
    return *this;
  }
  Integer& operator=(Integer&& o) noexcept {
    mpz_swap(v_, o.v_);
    return *this;
  }
  ~Integer() { mpz_clear(v_); }

  bool is_zero() const { return mpz_sgn(v_) == 0; }
  int sign() const { return mpz_sgn(v_); }
  bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
  long to_long() const { return mpz_get_si(v_); }

  std::string str() const;

  Integer operator-() const {
    Integer r;
    mpz_neg(r.v_, v_);
    return r;
  }
  Integer abs() const {
    Integer r;
    mpz_abs(r.v_, v_);
    return r;
  }

  friend Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.v_, a.v_, b.v_);
    return r;
  }
  friend Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.v_, a.v_, b.v_);
    return r;
  }
  friend Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.v_, a.v_, b.v_);
    return r;
  }

  friend bool operator==(const Integer& a, const Integer& b) {
    return mpz_cmp(a.v_, b.v_) == 0;
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = mpz_cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  static Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.v_, a.v_, b.v_);
    return r;
  }
  static Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.v_, a.v_, b.v_);
    return r;
  }
  /// Quotient a / b for exact divisions only (b must divide a).
  static Integer div_exact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.v_, a.v_, b.v_);
    return r;
  }
  static Integer pow(unsigned long base, unsigned long exp) {
    Integer r;
    mpz_ui_pow_ui(r.v_, base, exp);
    return r;
  }

  mpz_srcptr raw() const { return v_; }
  mpz_ptr raw() { return v_; }

 private:
  mpz_t v_;
};

}  // namespace tanint
