#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "conformal/rational.hpp"

using conformal::Rational;

TEST_CASE("construction keeps the canonical reduced form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("parse accepts p and p/q") {
  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("0") .is_zero());
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/2/3"));
}

TEST_CASE("str round-trips") {
  CHECK(Rational(-1, 2).str() == "-1/2");
  CHECK(Rational(7).str() == "7");
  CHECK(Rational(0).str() == "0");
  for (long n = -12; n <= 12; ++n)
    for (long d = 1; d <= 9; ++d) {
      Rational r(n, d);
      CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 20);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int t = 0; t < 200; ++t) {
    Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("pow and reciprocal") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(0) == Rational(1));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-1, 2).reciprocal() == Rational(-2));
  CHECK_THROWS(Rational(0).reciprocal());
  CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 4).abs() == Rational(3, 4));
}

TEST_CASE("factorial, binomial, falling factorial") {
  CHECK(conformal::factorial(0) == Rational(1));
  CHECK(conformal::factorial(5) == Rational(120));
  CHECK(conformal::binomial(5, 2) == Rational(10));
  CHECK(conformal::binomial(5, 0) == Rational(1));
  CHECK(conformal::binomial(5, 6) == Rational(0));
  CHECK(conformal::binomial(5, -1) == Rational(0));
  CHECK(conformal::binomial(1, 2) == Rational(0));
  CHECK(conformal::falling_factorial(5, 2) == Rational(20));
  CHECK(conformal::falling_factorial(5, 0) == Rational(1));
  CHECK(conformal::falling_factorial(3, 5) == Rational(0));
  // Pascal recurrence on a grid.
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(conformal::binomial(n, k) ==
            conformal::binomial(n - 1, k - 1) + conformal::binomial(n - 1, k));
}

TEST_CASE("big values stay exact") {
  Rational r(1);
  for (int i = 1; i <= 40; ++i) r *= Rational(10);
  Rational s = r + Rational(1);
  CHECK(s - r == Rational(1));
  CHECK(conformal::factorial(30) * Rational(31) == conformal::factorial(31));
}
