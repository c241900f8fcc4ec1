#include "tanint/const_atom.hpp"

#include <cctype>
#include <stdexcept>

namespace tanint {

namespace {

// Positive decimal without leading zeros; returns -1 on mismatch or overflow.
int parse_index(const std::string& s) {
  if (s.empty() || s[0] == '0' || s.size() > 8) return -1;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

ConstAtom ConstAtom::pi_pow(int j) {
  if (j < 1) throw std::invalid_argument("ConstAtom: pi power requires j >= 1");
  return {Kind::PiPow, j};
}

ConstAtom ConstAtom::seed(int q) {
  if (q < 2) throw std::invalid_argument("ConstAtom: seed requires q >= 2");
  return {Kind::Seed, q};
}

std::string ConstAtom::name() const {
  switch (kind_) {
    case Kind::PiPow:
      return "pi^" + std::to_string(arg_);
    case Kind::Ln2:
      return "ln2";
    case Kind::PiLn2:
      return "pi*ln2";
    case Kind::Catalan:
      return "catalan";
    case Kind::Seed:
      return "seed_" + std::to_string(arg_);
  }
  throw std::logic_error("ConstAtom: corrupt kind");
}

std::optional<ConstAtom> ConstAtom::from_name(const std::string& s) {
  if (s == "ln2") return ln2();
  if (s == "pi*ln2") return pi_ln2();
  if (s == "catalan") return catalan();
  if (s.rfind("pi^", 0) == 0) {
    const int j = parse_index(s.substr(3));
    if (j >= 1) return ConstAtom{Kind::PiPow, j};
    return std::nullopt;
  }
  if (s.rfind("seed_", 0) == 0) {
    const int q = parse_index(s.substr(5));
    if (q >= 2) return ConstAtom{Kind::Seed, q};
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace tanint
