#include "tanint/render.hpp"

#include <algorithm>
#include <vector>

#include "tanint/const_atom.hpp"
#include "tanint/rational.hpp"

namespace tanint {

namespace {

struct Piece {
  Rational coeff;
  std::string text_sym;   // empty for the pure rational part
  std::string latex_sym;  // empty for the pure rational part
};

std::string latex_sym_for(const ConstAtom& atom) {
  switch (atom.kind()) {
    case ConstAtom::Kind::PiPow: {
      const int j = atom.arg();
      if (j == 1) return "\\pi";
      if (j <= 9) return "\\pi^" + std::to_string(j);
      return "\\pi^{" + std::to_string(j) + "}";
    }
    case ConstAtom::Kind::Ln2:
      return "\\ln 2";
    case ConstAtom::Kind::PiLn2:
      return "\\pi\\ln 2";
    case ConstAtom::Kind::Catalan:
      return "G";
    case ConstAtom::Kind::Seed:
      return "S_{" + std::to_string(atom.arg()) + "}";
  }
  return "?";
}

std::string text_sym_for(const ConstAtom& atom) {
  switch (atom.kind()) {
    case ConstAtom::Kind::PiPow:
      return atom.arg() == 1 ? "pi" : "pi^" + std::to_string(atom.arg());
    case ConstAtom::Kind::Ln2:
      return "ln2";
    case ConstAtom::Kind::PiLn2:
      return "pi*ln2";
    case ConstAtom::Kind::Catalan:
      return "G";
    case ConstAtom::Kind::Seed:
      return "S_" + std::to_string(atom.arg());
  }
  return "?";
}

/// Display order: pi powers by descending exponent, then the rational part,
/// then ln2, pi*ln2, G, and seeds by ascending index.
std::vector<Piece> display_pieces(const SymValue& v) {
  std::vector<std::pair<int, ConstAtom>> pi_terms;
  for (const auto& [atom, coeff] : v.terms()) {
    if (atom.kind() == ConstAtom::Kind::PiPow) pi_terms.emplace_back(atom.arg(), atom);
  }
  std::sort(pi_terms.begin(), pi_terms.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  std::vector<Piece> pieces;
  auto push_atom = [&](const ConstAtom& atom) {
    pieces.push_back(Piece{v.coefficient(atom), text_sym_for(atom), latex_sym_for(atom)});
  };
  for (const auto& [j, atom] : pi_terms) push_atom(atom);
  if (!v.rational_part().is_zero()) pieces.push_back(Piece{v.rational_part(), "", ""});
  for (ConstAtom atom : {ConstAtom::ln2(), ConstAtom::pi_ln2(), ConstAtom::catalan()}) {
    if (!v.coefficient(atom).is_zero()) push_atom(atom);
  }
  for (const auto& [atom, coeff] : v.terms()) {
    if (atom.kind() == ConstAtom::Kind::Seed) push_atom(atom);
  }
  return pieces;
}

std::string text_body(const Piece& p) {
  const Integer num = p.coeff.numerator().abs();
  const Integer den = p.coeff.denominator();
  const bool unit_num = num == Integer(1);
  const bool unit_den = den == Integer(1);
  if (p.text_sym.empty()) {
    return unit_den ? num.str() : num.str() + "/" + den.str();
  }
  std::string body = unit_num ? p.text_sym : num.str() + "*" + p.text_sym;
  if (!unit_den) body += "/" + den.str();
  return body;
}

std::string latex_body(const Piece& p) {
  const Integer num = p.coeff.numerator().abs();
  const Integer den = p.coeff.denominator();
  const bool unit_num = num == Integer(1);
  const bool unit_den = den == Integer(1);
  std::string top;
  if (p.latex_sym.empty()) {
    top = num.str();
  } else {
    top = unit_num ? p.latex_sym : num.str() + p.latex_sym;
  }
  if (unit_den) return top;
  return "\\frac{" + top + "}{" + den.str() + "}";
}

}  // namespace

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text:
      return "text";
    case OutputFormat::Json:
      return "json";
    case OutputFormat::Csv:
      return "csv";
    case OutputFormat::Latex:
      return "latex";
  }
  return "text";
}

std::optional<OutputFormat> format_from_name(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "latex") return OutputFormat::Latex;
  return std::nullopt;
}

std::string render_text(const SymValue& v) {
  const std::vector<Piece> pieces = display_pieces(v);
  if (pieces.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const bool negative = pieces[i].coeff.sign() < 0;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += text_body(pieces[i]);
  }
  return out;
}

std::string render_latex(const SymValue& v) {
  const std::vector<Piece> pieces = display_pieces(v);
  if (pieces.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    const bool negative = pieces[i].coeff.sign() < 0;
    if (negative) {
      out += "-";
    } else if (i != 0) {
      out += "+";
    }
    out += latex_body(pieces[i]);
  }
  return out;
}

}  // namespace tanint
