#include "tanint/sym_value.hpp"

#include <json.hpp>

namespace tanint {

using nlohmann::json;

SymValue SymValue::term(const ConstAtom& atom, Rational coeff) {
  SymValue v;
  if (!coeff.is_zero()) v.terms_.emplace(atom, std::move(coeff));
  return v;
}

Rational SymValue::coefficient(const ConstAtom& atom) const {
  const auto it = terms_.find(atom);
  return it == terms_.end() ? Rational{} : it->second;
}

SymValue SymValue::operator+(const SymValue& o) const {
  SymValue r;
  r.rational_ = rational_ + o.rational_;
  r.terms_ = terms_;
  for (const auto& [atom, coeff] : o.terms_) {
    const auto it = r.terms_.find(atom);
    if (it == r.terms_.end()) {
      r.terms_.emplace(atom, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) r.terms_.erase(it);
    }
  }
  return r;
}

SymValue SymValue::operator-(const SymValue& o) const { return *this + (-o); }

SymValue SymValue::operator-() const {
  SymValue r;
  r.rational_ = -rational_;
  for (const auto& [atom, coeff] : terms_) r.terms_.emplace(atom, -coeff);
  return r;
}

SymValue SymValue::scaled(const Rational& c) const {
  SymValue r;
  if (c.is_zero()) return r;
  r.rational_ = rational_ * c;
  for (const auto& [atom, coeff] : terms_) r.terms_.emplace(atom, coeff * c);
  return r;
}

Rational SymValue::abs_coeff_sum() const {
  Rational s = rational_.abs();
  for (const auto& [atom, coeff] : terms_) s += coeff.abs();
  return s;
}

std::string SymValue::to_json() const {
  json terms = json::object();
  for (const auto& [atom, coeff] : terms_) terms[atom.name()] = coeff.str();
  // nlohmann objects iterate in lexicographic key order, as the schema wants.
  json j;
  j["rational"] = rational_.str();
  j["terms"] = std::move(terms);
  return j.dump();
}

SymValue SymValue::parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SymValueParseError(std::string("SymValue: invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.size() != 2 || !j.contains("rational") || !j.contains("terms")) {
    throw SymValueParseError("SymValue: expected exactly {\"rational\", \"terms\"}");
  }
  if (!j["rational"].is_string() || !j["terms"].is_object()) {
    throw SymValueParseError("SymValue: wrong field types");
  }
  SymValue v;
  try {
    v.rational_ = Rational::parse_canonical(j["rational"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SymValueParseError(e.what());
  }
  for (const auto& [key, val] : j["terms"].items()) {
    const auto atom = ConstAtom::from_name(key);
    if (!atom) throw SymValueParseError("SymValue: unknown atom '" + key + "'");
    if (!val.is_string()) throw SymValueParseError("SymValue: coefficient must be a string");
    Rational coeff;
    try {
      coeff = Rational::parse_canonical(val.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SymValueParseError(e.what());
    }
    if (coeff.is_zero()) {
      throw SymValueParseError("SymValue: zero coefficient for '" + key + "' is non-canonical");
    }
    v.terms_.emplace(*atom, std::move(coeff));
  }
  return v;
}

bool SymValue::is_canonical() const {
  if (!rational_.is_canonical()) return false;
  for (const auto& [atom, coeff] : terms_) {
    (void)atom;
    if (coeff.is_zero() || !coeff.is_canonical()) return false;
  }
  return true;
}

}  // namespace tanint
