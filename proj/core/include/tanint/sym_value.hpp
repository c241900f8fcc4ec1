#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "tanint/const_atom.hpp"
#include "tanint/rational.hpp"

namespace tanint {

struct SymValueParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An exact element of the Q-vector space spanned by the constant basis,
/// plus a rational part. Canonical form: zero coefficients are never stored,
/// so equality is plain coefficient-wise comparison. Values are immutable
/// after construction; all operations return fresh values.
class SymValue {
 public:
  SymValue() = default;
  explicit SymValue(Rational rational_part) : rational_(std::move(rational_part)) {}

  /// Single term coeff * atom (the zero value if coeff == 0).
  static SymValue term(const ConstAtom& atom, Rational coeff);

  const Rational& rational_part() const { return rational_; }
  const std::map<ConstAtom, Rational>& terms() const { return terms_; }
  bool is_zero() const { return rational_.is_zero() && terms_.empty(); }

  /// Stored coefficient of the atom, or 0 when absent.
  Rational coefficient(const ConstAtom& atom) const;

  SymValue operator+(const SymValue& o) const;
  SymValue operator-(const SymValue& o) const;
  SymValue operator-() const;
  /// Every coefficient multiplied by c; scaling by 0 yields the zero value.
  SymValue scaled(const Rational& c) const;

  friend bool operator==(const SymValue& a, const SymValue& b) {
    return a.rational_ == b.rational_ && a.terms_ == b.terms_;
  }

  /// Sum of |rational part| and all |coefficients|; magnitude envelope used
  /// for rounding-error accounting.
  Rational abs_coeff_sum() const;

  /// Serializes to the schema {"rational": "...", "terms": {name: coeff}}
  /// with keys in lexicographic order.
  std::string to_json() const;
  /// Strict inverse of to_json; throws SymValueParseError on malformed text,
  /// unknown atom names, or non-canonical rationals.
  static SymValue parse_json(const std::string& text);

  /// Invariant check used by tests: every stored coefficient is nonzero and
  /// reduced.
  bool is_canonical() const;

 private:
  Rational rational_;
  std::map<ConstAtom, Rational> terms_;
};

// Operation-style spellings.
inline SymValue add(const SymValue& a, const SymValue& b) { return a + b; }
inline SymValue scale(const Rational& c, const SymValue& a) { return a.scaled(c); }
inline Rational extract_coefficient(const SymValue& a, const ConstAtom& atom) {
  return a.coefficient(atom);
}

}  // namespace tanint
