#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gva/scalar.hpp"

using namespace gva;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  Rational r = Rational(-8) / Rational(-20);
  CHECK(numerator(r) == 2);
  CHECK(denominator(r) == 5);
  r = Rational(8) / Rational(-20);
  CHECK(numerator(r) == -2);
  CHECK(denominator(r) == 5);
  CHECK(rational_to_string(Rational(-8, 5)) == "-8/5");
  CHECK(rational_to_string(Rational(6)) == "6");
  CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("rational_from_string is strict") {
  CHECK(*rational_from_string("-8/5") == Rational(-8, 5));
  CHECK(*rational_from_string("42") == Rational(42));
  CHECK(*rational_from_string("+3/9") == Rational(1, 3));
  CHECK(!rational_from_string(""));
  CHECK(!rational_from_string("1/0"));
  CHECK(!rational_from_string("1.5"));
  CHECK(!rational_from_string("1/2x"));
  CHECK(!rational_from_string("/2"));
}

TEST_CASE("dual product rule (a + b nil)(c + d nil) = ac + (ad + bc) nil") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  for (int it = 0; it < 300; ++it) {
    Rational a = rnd(), b = rnd(), c = rnd(), d = rnd();
    Scalar p = Scalar::dual(a, b) * Scalar::dual(c, d);
    CHECK(p.real_part() == a * c);
    CHECK(p.nil_part() == a * d + b * c);
  }
}

TEST_CASE("squares and the nilpotent unit") {
  Scalar x = Scalar::dual(Rational(3, 2), Rational(-5));
  Scalar sq = x * x;
  CHECK(sq.real_part() == Rational(9, 4));
  CHECK(sq.nil_part() == Rational(2) * Rational(3, 2) * Rational(-5));
  Scalar nil = Scalar::dual(0, 1);
  CHECK((nil * nil).is_zero());
  CHECK((nil * nil).mode() == ScalarMode::dual);
}

TEST_CASE("division is defined exactly when the real part is nonzero") {
  Scalar a = Scalar::dual(Rational(1), Rational(2));
  Scalar b = Scalar::dual(Rational(3), Rational(-4));
  auto q = a.divided_by(b);
  REQUIRE(q.has_value());
  CHECK(*q * b == a);

  Scalar pure_nil = Scalar::dual(0, 7);
  CHECK(!a.divided_by(pure_nil).has_value());
  CHECK(!a.divided_by(Scalar()).has_value());
  CHECK(pure_nil.invertible() == false);

  // rational mode division by zero is undefined the same way
  CHECK(!Scalar::from_int(1).divided_by(Scalar::from_int(0)).has_value());
  CHECK(Scalar::from_int(-6).divided_by(Scalar::from_int(4))->real_part() == Rational(-3, 2));
}

TEST_CASE("rational-mode scalars keep a zero nil part through arithmetic") {
  Scalar a = Scalar::from_rational(Rational(2, 3));
  Scalar b = Scalar::from_rational(Rational(-1, 6));
  for (const Scalar& s : {a + b, a - b, a * b, -a, a.pow(5)}) {
    CHECK(s.mode() == ScalarMode::rational);
    CHECK(s.nil_part() == 0);
  }
}

TEST_CASE("powers, including x^0 = 1") {
  CHECK(Scalar::from_int(0).pow(0) == Scalar::from_int(1));
  CHECK(Scalar::from_rational(Rational(-1, 2)).pow(3) ==
        Scalar::from_rational(Rational(-1, 8)));
  Scalar d = Scalar::dual(2, 1);
  // (2 + nil)^2 = 4 + 4 nil
  CHECK(d.pow(2) == Scalar::dual(4, 4));
}

TEST_CASE("scalar formatting") {
  CHECK(Scalar::from_rational(Rational(-8, 5)).str() == "-8/5");
  CHECK(Scalar::dual(Rational(1, 2), Rational(1, 3)).str() == "1/2 + 1/3*nil");
  CHECK(Scalar::dual(Rational(1, 2), Rational(-1, 3)).str() == "1/2 - 1/3*nil");
  CHECK(Scalar::dual(0, Rational(-2)).str() == "-2*nil");
  CHECK(Scalar::dual(0, 0).str() == "0");
}
