#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "conformal/rational_function.hpp"

using namespace conformal;

namespace {
Polynomial v(Variable x) { return Polynomial::variable(x); }
}

TEST_CASE("construction and normalization") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  CHECK_THROWS(RationalFunction(d, Polynomial()));
  // zero numerator collapses the denominator
  RationalFunction z(Polynomial(), d + l);
  CHECK(z.is_zero());
  CHECK(z.den() == Polynomial(1L));
  // monic denominator
  RationalFunction f(d, l * Rational(2));
  CHECK(f.den() == l);
  CHECK(f.num() == d * Rational(1, 2));
  // shared monomial content cancels
  RationalFunction g(d * l, d * d);
  CHECK(g.num() == l);
  CHECK(g.den() == d);
  // univariate gcd cancels when both sides live in one variable
  RationalFunction h(d * d - Polynomial(1L), d - Polynomial(1L));
  CHECK(h.is_polynomial());
  CHECK(*h.as_polynomial() == d + Polynomial(1L));
}

TEST_CASE("field operations and equality by cross-multiplication") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  RationalFunction f(Polynomial(1L), d);
  RationalFunction g(Polynomial(1L), l);
  RationalFunction sum = f + g;
  CHECK(sum == RationalFunction(d + l, d * l));
  CHECK(f * g == RationalFunction(Polynomial(1L), d * l));
  CHECK(f - f == RationalFunction());
  CHECK(f / g == RationalFunction(l, d));
  CHECK(f.reciprocal() == RationalFunction(d));
  CHECK_THROWS(RationalFunction().reciprocal());
  CHECK_THROWS(f / RationalFunction());
  // equality sees through non-canceled common factors
  RationalFunction lhs((d + l) * d, (d + l) * l);
  CHECK(lhs == RationalFunction(d, l));
}

TEST_CASE("field axioms on random values") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> c(-5, 5), pick(0, 2);
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  auto rnd_poly = [&] {
    Polynomial p;
    for (int t = 0, n = pick(rng) + 1; t < n; ++t)
      p += d.pow(pick(rng)) * l.pow(pick(rng)) * Rational(c(rng));
    return p;
  };
  auto rnd = [&]() -> RationalFunction {
    Polynomial den = rnd_poly();
    while (den.is_zero()) den = rnd_poly();
    return RationalFunction(rnd_poly(), den);
  };
  for (int t = 0; t < 40; ++t) {
    RationalFunction a = rnd(), b = rnd(), cc = rnd();
    CHECK(a + b == b + a);
    CHECK((a + b) + cc == a + (b + cc));
    CHECK(a * (b + cc) == a * b + a * cc);
    CHECK((a - a).is_zero());
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("as_polynomial and expect_polynomial") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  RationalFunction f((d + l) * (d - l), d + l);
  auto p = f.as_polynomial();
  REQUIRE(p.has_value());
  CHECK(*p == d - l);
  CHECK(f.expect_polynomial("test") == d - l);
  RationalFunction g(Polynomial(1L), d);
  CHECK(!g.as_polynomial().has_value());
  CHECK_THROWS_AS(g.expect_polynomial("test"), std::domain_error);
  CHECK(RationalFunction(Rational(1, 2)).constant_value() == Rational(1, 2));
}

TEST_CASE("substitution") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  RationalFunction f(d + l * Rational(2));
  // lambda -> -lambda - d sends d + 2l to -d - 2l
  RationalFunction g = f.substitute(vars::lambda(), Polynomial() - l - d);
  CHECK(g == RationalFunction(Polynomial() - d - l * Rational(2)));
  // denominator collapse is an error
  RationalFunction h(Polynomial(1L), d - Polynomial(1L));
  CHECK_THROWS_AS(h.substitute(vars::d(), Polynomial(1L)), std::domain_error);
}

TEST_CASE("str form") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  CHECK(RationalFunction(d + l * Rational(2)).str() == "d + 2*l");
  CHECK(RationalFunction(d, l).str() == "(d) / (l)");
  CHECK(RationalFunction().str() == "0");
}
