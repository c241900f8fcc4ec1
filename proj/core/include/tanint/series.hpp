#pragma once

#include "tanint/engine.hpp"
#include "tanint/oracle.hpp"
#include "tanint/real.hpp"
#include "tanint/sym_value.hpp"

namespace tanint {

/// Verified interval: the target value lies in [lo, hi]. terms_used counts
/// the series terms actually summed.
struct Enclosure {
  Real lo;
  Real hi;
  int terms_used = 0;
};

/// Two-sided enclosure of J_n = integral of tan^n x / (1 - x) over
/// [0, pi/4], via the expansion of 1/(1-x) into sum of x^i and the exact
/// values of the family integrals. The tail past the truncation point is
/// nonnegative and bounded geometrically; the returned interval accounts for
/// it plus a computed rounding allowance, and has width < eps.
///
/// Throws std::invalid_argument when n < 0, eps <= 0, or `digits` is too
/// small for the rounding allowance to stay below eps/10.
Enclosure j_series(int n, const Real& eps, int digits);
/// As above, reusing a caller-provided context (ctx.digits() must be at
/// least `digits`) and memo table.
Enclosure j_series(int n, const Real& eps, int digits, NumericContext& ctx, MemoTable& memo);

/// Exact value of L_n = integral of arctan^n x over [0, 1], reduced to the
/// family by the substitution u = arctan x:
/// L_n = (pi/4)^{n+1}/(n+1) + I_2^(n).
SymValue l_integral(int n);
SymValue l_integral(int n, MemoTable& memo);

}  // namespace tanint
