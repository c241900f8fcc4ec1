#include "tanint/real.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace tanint {

mpfr_prec_t prec_for_digits(int digits) {
  if (digits < 1) digits = 1;
  // log2(10) ~ 3.3219...; round up and add guard bits for accumulated
  // rounding in multi-step evaluations.
  auto bits = static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
  return std::max<mpfr_prec_t>(bits, MPFR_PREC_MIN);
}

Real Real::from_str(const std::string& s, mpfr_prec_t prec) {
  Real r(prec);
  if (s.empty() || mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    throw std::invalid_argument("Real::from_str: invalid decimal literal: \"" + s + "\"");
  }
  return r;
}

Real Real::pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

Real Real::ln2(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_log2(r.v_, MPFR_RNDN);
  return r;
}

Real Real::catalan(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_catalan(r.v_, MPFR_RNDN);
  return r;
}

std::string Real::str(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  char* out = nullptr;
  if (mpfr_asprintf(&out, "%.*Rg", significant_digits, v_) < 0) {
    throw std::runtime_error("Real::str: mpfr_asprintf failed");
  }
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace tanint
