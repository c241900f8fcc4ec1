#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace tanint {

/// One element of the canonical symbolic constant basis:
///   pi^j (j >= 1), ln 2, pi*ln 2, Catalan's G, or an opaque seed S_q (q >= 2).
///
/// S_q stands for the integral of x^q tan x over [0, pi/4]; S_0 and S_1 have
/// closed forms over the other atoms and are always expanded, so seed atoms
/// exist only for q >= 2. The integral of ln(cos x) over [0, pi/4] is likewise
/// never an atom: it is normalized to G/2 - (pi/4) ln 2.
class ConstAtom {
 public:
  enum class Kind : std::uint8_t { PiPow, Ln2, PiLn2, Catalan, Seed };

  static ConstAtom pi_pow(int j);  // throws std::invalid_argument unless j >= 1
  static ConstAtom ln2() { return {Kind::Ln2, 0}; }
  static ConstAtom pi_ln2() { return {Kind::PiLn2, 0}; }
  static ConstAtom catalan() { return {Kind::Catalan, 0}; }
  static ConstAtom seed(int q);    // throws std::invalid_argument unless q >= 2

  Kind kind() const { return kind_; }
  /// Pi exponent or seed index; 0 for the argument-free kinds.
  int arg() const { return arg_; }

  /// Serialized name: "pi^3", "ln2", "pi*ln2", "catalan", "seed_4".
  std::string name() const;
  /// Strict inverse of name(); nullopt for anything unrecognized.
  static std::optional<ConstAtom> from_name(const std::string& s);

  friend bool operator==(const ConstAtom&, const ConstAtom&) = default;
  friend std::strong_ordering operator<=>(const ConstAtom&, const ConstAtom&) = default;

 private:
  ConstAtom(Kind k, int a) : kind_(k), arg_(a) {}

  Kind kind_;
  int arg_;
};

}  // namespace tanint
