#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tanint/engine.hpp"
#include "tanint/oracle.hpp"

using tanint::compute;
using tanint::ConstAtom;
using tanint::eval_numeric;
using tanint::Integrand;
using tanint::MemoTable;
using tanint::NumericContext;
using tanint::PowTanIntegrand;
using tanint::quad;
using tanint::Rational;
using tanint::Real;
using tanint::SymValue;

namespace {

Real pow10(long e, mpfr_prec_t prec) { return pow_si(Real(10L, prec), e); }

Real quarter_pi(NumericContext& ctx) { return mul_2si(ctx.pi(), -2); }

}  // namespace

TEST_CASE("context validates digits") {
  CHECK_THROWS_AS(NumericContext(14), std::invalid_argument);
  NumericContext ctx(15);
  CHECK(ctx.digits() == 15);
  CHECK(ctx.prec() >= tanint::prec_for_digits(15));
}

TEST_CASE("standard constants to the requested digits") {
  NumericContext ctx(20);
  CHECK(ctx.const_numeric(ConstAtom::pi_pow(1)).str(20) == "3.1415926535897932385");

  NumericContext ctx15(15);
  CHECK(ctx15.const_numeric(ConstAtom::catalan()).str(15) == "0.915965594177219");

  NumericContext ctx30(30);
  const Real ln2 = ctx30.const_numeric(ConstAtom::ln2());
  CHECK(ln2.str(20) == "0.69314718055994530942");
  // Cross identity: pi*ln2 atom equals the product of the parts.
  const Real lhs = ctx30.const_numeric(ConstAtom::pi_ln2());
  const Real rhs = ctx30.const_numeric(ConstAtom::pi_pow(1)) * ln2;
  CHECK(abs(lhs - rhs) < pow10(-29, ctx30.prec()));
  // Powers are plain powers.
  const Real pi = ctx30.const_numeric(ConstAtom::pi_pow(1));
  CHECK(abs(ctx30.const_numeric(ConstAtom::pi_pow(3)) - pi * pi * pi) <
        pow10(-27, ctx30.prec()));
}

TEST_CASE("the slow alternating series brackets the Catalan value") {
  // Partial sums of sum_r (-1)^r/(2r+1)^2 alternate around the limit, so
  // consecutive ones bracket it; this pins the fast method to the defining
  // series without demanding more than its 1/N convergence can give.
  NumericContext ctx(30);
  const Real g = ctx.const_numeric(ConstAtom::catalan());
  const mpfr_prec_t P = ctx.prec();
  Real partial(0L, P);
  Real prev(0L, P);
  const int kTerms = 4001;
  for (int r = 0; r < kTerms; ++r) {
    prev = partial;
    const long odd = 2L * r + 1L;
    const Real inc = Real(1L, P) / Real(odd * odd, P);
    partial += (r % 2 == 0) ? inc : -inc;
  }
  // kTerms is odd, so the last added term was positive: prev < G < partial.
  CHECK(prev < g);
  CHECK(g < partial);
  CHECK(abs(partial - g) < Real(1e-3, P));
}

TEST_CASE("seed constants come from quadrature and scale with precision") {
  NumericContext lo(20);
  NumericContext hi(40);
  const Real s2_lo = lo.const_numeric(ConstAtom::seed(2));
  const Real s2_hi = hi.const_numeric(ConstAtom::seed(2));
  CHECK(abs(s2_lo - s2_hi) < pow10(-20, hi.prec()));
  // ballpark: integral of x^2 tan x over [0, pi/4] is about 0.111189.
  CHECK(s2_lo > Real(0.111, lo.prec()));
  CHECK(s2_lo < Real(0.112, lo.prec()));
}

TEST_CASE("quadrature of trivial and known integrals") {
  NumericContext ctx(30);
  const Real zero(0L, ctx.prec());
  const Real qpi = quarter_pi(ctx);

  const Real const_one = quad(PowTanIntegrand{0, 0}, zero, qpi, ctx);
  CHECK(abs(const_one - qpi) < pow10(-25, ctx.prec()));

  // ln(cos) integral: G/2 - (pi/4) ln 2, negative.
  const Real lncos = quad(tanint::LnCosIntegrand{}, zero, qpi, ctx);
  const Real expected = mul_2si(ctx.const_numeric(ConstAtom::catalan()), -1) -
                        qpi * ctx.const_numeric(ConstAtom::ln2());
  CHECK(abs(lncos - expected) < pow10(-25, ctx.prec()));
  CHECK(lncos < zero);

  // x tan x integral matches the seed expansion S_1 = G/2 - (pi/8) ln 2.
  const Real xtanx = quad(PowTanIntegrand{1, 1}, zero, qpi, ctx);
  MemoTable memo;
  const Real s1 = eval_numeric(tanint::seed_s(1), ctx);
  CHECK(abs(xtanx - s1) < pow10(-25, ctx.prec()));

  // Degenerate interval.
  CHECK(quad(PowTanIntegrand{2, 1}, qpi, qpi, ctx).is_zero());
}

TEST_CASE("eval_numeric") {
  NumericContext ctx(30);
  MemoTable memo;
  CHECK(eval_numeric(SymValue(), ctx).is_zero());

  const Real qpi_eval = eval_numeric(compute(0, 0, memo), ctx);
  CHECK(abs(qpi_eval - quarter_pi(ctx)) < pow10(-28, ctx.prec()));

  const Real i21 = eval_numeric(compute(2, 1, memo), ctx);
  const Real q21 =
      quad(PowTanIntegrand{2, 1}, Real(0L, ctx.prec()), quarter_pi(ctx), ctx);
  CHECK(abs(i21 - q21) < pow10(-25, ctx.prec()));
  CHECK(i21.str(6) == "0.130399");
}

TEST_CASE("verify passes on the corrected recurrence") {
  NumericContext ctx(50);
  const Real tol = pow10(-40, ctx.prec());
  const auto reports = tanint::verify(2, 1, ctx, tol);
  REQUIRE(reports.size() == 6);
  for (const auto& r : reports) {
    CAPTURE(r.id.n);
    CAPTURE(r.id.p);
    CHECK(r.pass);
    CHECK(r.abs_diff <= r.tolerance);
  }

  NumericContext ctx15(15);
  const auto single = tanint::verify(0, 0, ctx15, pow10(-10, ctx15.prec()));
  REQUIRE(single.size() == 1);
  CHECK(single[0].pass);
}

TEST_CASE("verify rejects a tolerance below the precision floor") {
  NumericContext ctx(15);
  CHECK_THROWS_AS(tanint::verify(1, 1, ctx, pow10(-15, ctx.prec())), std::invalid_argument);
  CHECK_THROWS_AS(tanint::verify(-1, 0, ctx, pow10(-10, ctx.prec())), std::invalid_argument);
}

TEST_CASE("doubling digits never worsens the disagreement") {
  MemoTable memo;
  const SymValue v = compute(6, 2, memo);
  NumericContext c20(20);
  NumericContext c40(40);
  const Real zero20(0L, c20.prec());
  const Real zero40(0L, c40.prec());
  const Real d20 =
      abs(eval_numeric(v, c20) - quad(PowTanIntegrand{6, 2}, zero20, quarter_pi(c20), c20));
  const Real d40 =
      abs(eval_numeric(v, c40) - quad(PowTanIntegrand{6, 2}, zero40, quarter_pi(c40), c40));
  CHECK(d40 <= d20);
}

TEST_CASE("oracle results are deterministic") {
  MemoTable memo;
  const SymValue v = compute(9, 3, memo);

  NumericContext a(25);
  NumericContext b(25);
  const Real ea = eval_numeric(v, a);
  const Real eb = eval_numeric(v, b);
  CHECK(ea == eb);
  CHECK(ea.str(25) == eb.str(25));

  const Real qa = quad(PowTanIntegrand{9, 3}, Real(0L, a.prec()), quarter_pi(a), a);
  const Real qb = quad(PowTanIntegrand{9, 3}, Real(0L, b.prec()), quarter_pi(b), b);
  CHECK(qa == qb);
  // Re-running inside one context is also bit-stable.
  const Real qa2 = quad(PowTanIntegrand{9, 3}, Real(0L, a.prec()), quarter_pi(a), a);
  CHECK(qa == qa2);
}

TEST_CASE("uncorrected plus sign is grossly wrong at n=2, p=1") {
  // Recurrence with the middle term added instead of subtracted:
  // (pi/4)/1 + 1*S_0 - I_0^(1), which misses the true value by exactly ln 2.
  MemoTable memo;
  const SymValue wrong = tanint::pi_quarter_pow(1) + tanint::seed_s(0) - compute(0, 1, memo);
  const SymValue right = compute(2, 1, memo);
  CHECK_FALSE(wrong == right);

  NumericContext ctx(30);
  const Real q = quad(PowTanIntegrand{2, 1}, Real(0L, ctx.prec()), quarter_pi(ctx), ctx);
  const Real mismatch = abs(eval_numeric(wrong, ctx) - q);
  CHECK(mismatch > Real(0.5, ctx.prec()));
  const Real ln2 = ctx.const_numeric(ConstAtom::ln2());
  CHECK(abs(mismatch - ln2) < pow10(-25, ctx.prec()));
}
