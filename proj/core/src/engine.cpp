#include "tanint/engine.hpp"

#include <stdexcept>

namespace tanint {

namespace {

void require_non_negative(int n, int p) {
  if (n < 0 || p < 0) {
    throw std::invalid_argument("engine: n and p must be non-negative");
  }
}

}  // namespace

Rational harmonic(int n) {
  if (n < 1) throw std::invalid_argument("harmonic: n must be >= 1");
  Rational h;
  for (int k = 1; k <= n; ++k) h += Rational(1, k);
  return h;
}

SymValue pi_quarter_pow(int p) {
  if (p < 0) throw std::invalid_argument("pi_quarter_pow: p must be >= 0");
  if (p == 0) return SymValue(Rational(1));
  return SymValue::term(ConstAtom::pi_pow(p),
                        Rational(Integer(1), Integer::pow(4, p)));
}

SymValue base_i0(int p) {
  if (p < 0) throw std::invalid_argument("base_i0: p must be >= 0");
  const Integer den = Integer::pow(4, p + 1) * Integer(p + 1);
  return SymValue::term(ConstAtom::pi_pow(p + 1), Rational(Integer(1), den));
}

SymValue seed_s(int q) {
  if (q < 0) throw std::invalid_argument("seed_s: q must be >= 0");
  if (q == 0) return SymValue::term(ConstAtom::ln2(), Rational(1, 2));
  if (q == 1) {
    // Integration by parts of x tan x gives (pi/8) ln 2 plus the ln(cos)
    // integral, which normalizes to G/2 - (pi/4) ln 2.
    return SymValue::term(ConstAtom::catalan(), Rational(1, 2)) +
           SymValue::term(ConstAtom::pi_ln2(), Rational(-1, 8));
  }
  return SymValue::term(ConstAtom::seed(q), Rational(1));
}

SymValue tan_power_integral(int n) {
  if (n < 0) throw std::invalid_argument("tan_power_integral: n must be >= 0");
  const int k = n / 2;
  const int sign_k = (k % 2 == 0) ? 1 : -1;
  Rational sum;
  for (int l = 1; l <= k; ++l) {
    const int sign = ((l + k) % 2 == 0) ? 1 : -1;
    sum += Rational(sign, n % 2 == 0 ? 2 * l - 1 : 2 * l);
  }
  SymValue head = (n % 2 == 0)
      ? SymValue::term(ConstAtom::pi_pow(1), Rational(sign_k, 4))
      : SymValue::term(ConstAtom::ln2(), Rational(sign_k, 2));
  return head + SymValue(sum);
}

SymValue compute(int n, int p, MemoTable& memo) {
  require_non_negative(n, p);
  if (auto hit = memo.find({n, p})) return std::move(*hit);

  SymValue value;
  if (n == 0) {
    value = base_i0(p);
  } else if (n == 1) {
    value = seed_s(p);
  } else {
    const Rational inv(1, n - 1);
    value = pi_quarter_pow(p).scaled(inv) - compute(n - 2, p, memo);
    if (p >= 1) {
      // For p = 0 the middle term vanishes with its p factor and
      // I^(-1) is never touched.
      value = value - compute(n - 1, p - 1, memo).scaled(Rational(p, n - 1));
    }
  }
  return memo.insert({n, p}, std::move(value));
}

std::vector<std::pair<IntegralId, SymValue>> table(int n_max, int p_max, MemoTable& memo) {
  require_non_negative(n_max, p_max);
  std::vector<std::pair<IntegralId, SymValue>> out;
  out.reserve(static_cast<std::size_t>(n_max + 1) * (p_max + 1));
  for (int p = 0; p <= p_max; ++p) {
    for (int n = 0; n <= n_max; ++n) {
      out.emplace_back(IntegralId{n, p}, compute(n, p, memo));
    }
  }
  return out;
}

}  // namespace tanint
