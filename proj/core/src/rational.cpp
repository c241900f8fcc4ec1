#include "tanint/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tanint {

namespace {

// Canonical decimal integer: "0" or [-]?[1-9][0-9]*, no "-0", no leading zeros.
bool is_canonical_int(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i == s.size()) return false;
  if (s[i] == '0') return s == "0";
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  mpq_init(v_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(v_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(v_);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
  mpq_init(v_);
  mpz_set(mpq_numref(v_), num.raw());
  mpz_set(mpq_denref(v_), den.raw());
  if (mpz_sgn(mpq_denref(v_)) < 0) {
    mpz_neg(mpq_numref(v_), mpq_numref(v_));
    mpz_neg(mpq_denref(v_), mpq_denref(v_));
  }
  mpq_canonicalize(v_);
}

Rational Rational::parse_canonical(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_canonical_int(s)) {
      throw std::invalid_argument("Rational: malformed value '" + s + "'");
    }
    Rational r;
    mpz_set_str(mpq_numref(r.v_), s.c_str(), 10);
    return r;
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_canonical_int(num) || !is_canonical_int(den) || den[0] == '-') {
    throw std::invalid_argument("Rational: malformed value '" + s + "'");
  }
  if (num == "0" || den == "0" || den == "1") {
    // "0/k", "n/0" and "n/1" are never the canonical spelling.
    throw std::invalid_argument("Rational: non-canonical value '" + s + "'");
  }
  Rational r;
  mpz_set_str(mpq_numref(r.v_), num.c_str(), 10);
  mpz_set_str(mpq_denref(r.v_), den.c_str(), 10);
  if (!r.is_canonical()) {
    throw std::invalid_argument("Rational: non-canonical value '" + s + "'");
  }
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  Rational r;
  mpq_div(r.v_, a.v_, b.v_);
  return r;
}

bool Rational::is_canonical() const {
  if (mpz_sgn(mpq_denref(v_)) <= 0) return false;
  if (mpq_sgn(v_) == 0) return mpz_cmp_ui(mpq_denref(v_), 1) == 0;
  mpz_t g;
  mpz_init(g);
  mpz_gcd(g, mpq_numref(v_), mpq_denref(v_));
  const bool reduced = mpz_cmp_ui(g, 1) == 0;
  mpz_clear(g);
  return reduced;
}

}  // namespace tanint
