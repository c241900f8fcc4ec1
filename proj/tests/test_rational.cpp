#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "tanint/const_atom.hpp"
#include "tanint/integer.hpp"
#include "tanint/rational.hpp"

using tanint::ConstAtom;
using tanint::Integer;
using tanint::Rational;

TEST_CASE("Integer construction and string round trip") {
  CHECK(Integer().str() == "0");
  CHECK(Integer(-17).str() == "-17");
  CHECK(Integer("123456789012345678901234567890").str() == "123456789012345678901234567890");
  CHECK_THROWS_AS(Integer("12x"), std::invalid_argument);
  CHECK_THROWS_AS(Integer(""), std::invalid_argument);
}

TEST_CASE("Integer arithmetic and helpers") {
  CHECK(Integer(6) * Integer(-7) == Integer(-42));
  CHECK(Integer(6) + Integer(7) == Integer(13));
  CHECK(Integer(6) - Integer(7) == Integer(-1));
  CHECK(-Integer(5) == Integer(-5));
  CHECK(Integer(-5).abs() == Integer(5));
  CHECK(Integer::gcd(Integer(12), Integer(18)) == Integer(6));
  CHECK(Integer::lcm(Integer(4), Integer(6)) == Integer(12));
  CHECK(Integer::div_exact(Integer(84), Integer(7)) == Integer(12));
  CHECK(Integer::pow(4, 5) == Integer(1024));
  CHECK(Integer::pow(10, 0) == Integer(1));
  CHECK(Integer(3) < Integer(4));
  CHECK(Integer(3).sign() == 1);
  CHECK(Integer(-3).sign() == -1);
  CHECK(Integer(0).is_zero());
  CHECK(Integer(41).fits_long());
  CHECK(Integer(41).to_long() == 41);
}

TEST_CASE("Rational canonicalization") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(0, 7).denominator() == Integer(1));
  CHECK(Rational(12, 8).numerator() == Integer(3));
  CHECK(Rational(12, 8).denominator() == Integer(2));
  CHECK(Rational(2, 4).is_canonical());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("Rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(3, 4).reciprocal() == Rational(4, 3));
  CHECK_THROWS_AS(Rational(0, 1).reciprocal(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0, 1), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(7, 1).is_integer());
  CHECK_FALSE(Rational(7, 2).is_integer());

  Rational acc(1, 2);
  acc += Rational(1, 3);
  acc *= Rational(6, 5);
  acc -= Rational(1, 1);
  CHECK(acc == Rational(0, 1));
}

TEST_CASE("Rational strict parsing") {
  CHECK(Rational::parse_canonical("0") == Rational(0, 1));
  CHECK(Rational::parse_canonical("-7") == Rational(-7, 1));
  CHECK(Rational::parse_canonical("3/4") == Rational(3, 4));
  CHECK(Rational::parse_canonical("-36979/180180") == Rational(-36979, 180180));

  for (const char* bad : {"", "1/", "/2", "2/4", "3/3", "2/1", "0/3", "-0", "007", "1/-2",
                          "1/02", "+1", "1 /2", "a/b", "0/0", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse_canonical(bad), std::invalid_argument);
  }
}

TEST_CASE("Rational string round trip") {
  for (long num = -12; num <= 12; ++num) {
    for (long den = 1; den <= 9; ++den) {
      const Rational r(num, den);
      CHECK(Rational::parse_canonical(r.str()) == r);
    }
  }
}

TEST_CASE("ConstAtom factories validate their argument") {
  CHECK(ConstAtom::pi_pow(1).arg() == 1);
  CHECK(ConstAtom::seed(2).arg() == 2);
  CHECK_THROWS_AS(ConstAtom::pi_pow(0), std::invalid_argument);
  CHECK_THROWS_AS(ConstAtom::pi_pow(-3), std::invalid_argument);
  CHECK_THROWS_AS(ConstAtom::seed(1), std::invalid_argument);
  CHECK_THROWS_AS(ConstAtom::seed(0), std::invalid_argument);
}

TEST_CASE("ConstAtom names round trip") {
  const ConstAtom atoms[] = {ConstAtom::pi_pow(1),  ConstAtom::pi_pow(2), ConstAtom::pi_pow(12),
                             ConstAtom::ln2(),      ConstAtom::pi_ln2(),  ConstAtom::catalan(),
                             ConstAtom::seed(2),    ConstAtom::seed(10)};
  for (const auto& atom : atoms) {
    CAPTURE(atom.name());
    const auto back = ConstAtom::from_name(atom.name());
    REQUIRE(back.has_value());
    CHECK(*back == atom);
  }
  CHECK(ConstAtom::pi_pow(3).name() == "pi^3");
  CHECK(ConstAtom::ln2().name() == "ln2");
  CHECK(ConstAtom::pi_ln2().name() == "pi*ln2");
  CHECK(ConstAtom::catalan().name() == "catalan");
  CHECK(ConstAtom::seed(4).name() == "seed_4");
}

TEST_CASE("ConstAtom rejects malformed names") {
  for (const char* bad : {"", "pi", "pi^", "pi^0", "pi^01", "pi^-1", "pi^123456789", "Pi^1",
                          "seed", "seed_", "seed_1", "seed_0", "seed_02", "seed_x", "ln 2",
                          "LN2", "catalan ", "pi*ln2 ", "pi^1x", "foo"}) {
    CAPTURE(bad);
    CHECK_FALSE(ConstAtom::from_name(bad).has_value());
  }
}

TEST_CASE("ConstAtom ordering is total and groups kinds") {
  CHECK(ConstAtom::pi_pow(1) < ConstAtom::pi_pow(2));
  CHECK(ConstAtom::seed(2) < ConstAtom::seed(3));
  CHECK(ConstAtom::pi_pow(99) < ConstAtom::ln2());
  CHECK(ConstAtom::ln2() < ConstAtom::pi_ln2());
  CHECK(ConstAtom::pi_ln2() < ConstAtom::catalan());
  CHECK(ConstAtom::catalan() < ConstAtom::seed(2));
}
