#pragma once

#include <optional>
#include <string>

#include "tanint/sym_value.hpp"

namespace tanint {

enum class OutputFormat { Text, Json, Csv, Latex };

std::string format_name(OutputFormat f);
std::optional<OutputFormat> format_from_name(const std::string& s);

/// Plain-text form, e.g. "-pi^2/32 + pi/4 - ln2/2". Term order: pi powers
/// by descending exponent, rational part, ln2, pi*ln2, G, seeds by
/// ascending index. The zero value renders as "0".
std::string render_text(const SymValue& v);

/// LaTeX form in the same term order, e.g.
/// "-\frac{\pi^2}{32}+\frac{\pi}{4}-\frac{\ln 2}{2}".
std::string render_latex(const SymValue& v);

}  // namespace tanint
