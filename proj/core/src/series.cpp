#include "tanint/series.hpp"

#include <stdexcept>
#include <string>

namespace tanint {

Enclosure j_series(int n, const Real& eps, int digits, NumericContext& ctx, MemoTable& memo) {
  if (n < 0) throw std::invalid_argument("j_series: n must be >= 0");
  if (ctx.digits() < digits) {
    throw std::invalid_argument("j_series: context precision below requested digits");
  }
  const mpfr_prec_t P = ctx.prec();
  const Real eps_w = Real(0L, P) + eps;
  if (!(eps_w > Real(0L, P))) throw std::invalid_argument("j_series: eps must be positive");

  const Real one(1L, P);
  const Real quarter_pi = mul_2si(ctx.pi(), -2);

  // Tail after truncating at index n0: sum_{i>n0} of a term bounded by
  // (pi/4)^i * I_n, so the tail is at most I_n * (pi/4)^{n0+1} / (1 - pi/4).
  // The truncation threshold is 0.8*eps, leaving room for the rounding
  // allowance (< eps/10 on each side) while keeping total width under eps.
  const Real in_num = eval_numeric(tan_power_integral(n), ctx);
  const Real threshold = Real(Rational(4, 5), P) * eps_w;
  Real tail = in_num / (one - quarter_pi);
  int n0 = -1;
  while (!(tail < threshold)) {
    ++n0;
    tail *= quarter_pi;
    if (n0 > 100000) {
      throw std::invalid_argument("j_series: eps too small to reach by truncation");
    }
  }

  Real sum(0L, P);
  Real abs_coeffs(0L, P);
  for (int i = 0; i <= n0; ++i) {
    const SymValue term = compute(n, i, memo);
    sum += eval_numeric(term, ctx);
    abs_coeffs += Real(term.abs_coeff_sum(), P);
  }

  // Each summed term carries constant-evaluation error below
  // abs_coeff_sum * 10^(1-digits); the extra 2*(n0+2) covers per-operation
  // rounding in the accumulation and in the tail bound itself.
  const Real unit = pow_si(Real(10L, P), 1 - digits);
  const Real slack = (abs_coeffs + Real(2L * (n0 + 2), P)) * unit;
  if (!(slack < eps_w / Real(10L, P))) {
    throw std::invalid_argument("j_series: insufficient digits for eps " + eps_w.str(3) +
                                " (rounding allowance " + slack.str(3) + ")");
  }

  Enclosure enc;
  enc.lo = sum - slack;
  enc.hi = sum + tail + slack;
  enc.terms_used = n0 + 1;
  return enc;
}

Enclosure j_series(int n, const Real& eps, int digits) {
  NumericContext ctx(digits < 15 ? 15 : digits);
  MemoTable memo;
  return j_series(n, eps, digits, ctx, memo);
}

SymValue l_integral(int n, MemoTable& memo) {
  if (n < 0) throw std::invalid_argument("l_integral: n must be >= 0");
  const SymValue head = pi_quarter_pow(n + 1).scaled(Rational(1, n + 1));
  return head + compute(2, n, memo);
}

SymValue l_integral(int n) {
  MemoTable memo;
  return l_integral(n, memo);
}

}  // namespace tanint
