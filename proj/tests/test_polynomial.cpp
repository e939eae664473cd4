#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "conformal/polynomial.hpp"

using namespace conformal;

namespace {
Polynomial v(Variable x) { return Polynomial::variable(x); }

Polynomial random_poly(std::mt19937 &rng, const std::vector<Variable> &varset,
                       int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms), coef(-6, 6), deg(0, max_deg);
  Polynomial p;
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (auto x : varset) m = m * Monomial::var(x, deg(rng));
    p += Polynomial::monomial(m, Rational(coef(rng)));
  }
  return p;
}
}  // namespace

TEST_CASE("monomial ordering is graded lex with the reserved variable order") {
  Monomial d2l = Monomial::var(vars::d(), 2) * Monomial::var(vars::lambda());
  Monomial d3 = Monomial::var(vars::d(), 3);
  Monomial l3 = Monomial::var(vars::lambda(), 3);
  Monomial a1 = Monomial::var(vars::alpha());
  CHECK(Monomial::cmp(d3, d2l) > 0);   // same degree, more d wins
  CHECK(Monomial::cmp(d2l, l3) > 0);
  CHECK(Monomial::cmp(d3, a1) > 0);    // degree dominates
  CHECK(Monomial::cmp(a1, a1) == 0);
  CHECK(Monomial::cmp(Monomial(), a1) < 0);
  // l before m before n before a, all before user names
  Monomial l = Monomial::var(vars::lambda()), m = Monomial::var(vars::mu());
  Monomial n = Monomial::var(vars::nu()), a = Monomial::var(vars::alpha());
  Monomial z = Monomial::var(Variable("b1"));
  CHECK(Monomial::cmp(l, m) > 0);
  CHECK(Monomial::cmp(m, n) > 0);
  CHECK(Monomial::cmp(n, a) > 0);
  CHECK(Monomial::cmp(a, z) > 0);
}

TEST_CASE("canonical string form") {
  Polynomial p = Polynomial::monomial(
                     Monomial::var(vars::d(), 2) * Monomial::var(vars::lambda()),
                     Rational(-1, 2)) +
                 v(vars::alpha()) * Rational(3);
  CHECK(p.str() == "(-1/2)*d^2*l + 3*a");
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial(Rational(1)).str() == "1");
  CHECK((v(vars::d()) + Polynomial(2L) * v(vars::lambda())).str() == "d + 2*l");
  CHECK((v(vars::d()) - v(vars::lambda())).str() == "d + (-1)*l");
  CHECK(v(vars::d()).pow(3).str() == "d^3");
}

TEST_CASE("arithmetic basics") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  Polynomial p = (d + l) * (d - l);
  CHECK(p == d * d - l * l);
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 2);
  CHECK(Polynomial().total_degree() == -1);
  CHECK(p.degree_in(vars::d()) == 2);
  CHECK(p.degree_in(vars::mu()) == 0);
  CHECK((d + l).pow(0) == Polynomial(1L));
  CHECK((d + l).pow(2) == d * d + d * l * Rational(2) + l * l);
  CHECK((p / Rational(2)) * Rational(2) == p);
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(777);
  std::vector<Variable> vs = {vars::d(), vars::lambda(), vars::alpha()};
  for (int t = 0; t < 60; ++t) {
    Polynomial a = random_poly(rng, vs), b = random_poly(rng, vs), c = random_poly(rng, vs);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("coefficient extraction") {
  Polynomial d = v(vars::d()), l = v(vars::lambda()), a = v(vars::alpha());
  Polynomial p = (a - d) + l * d * Rational(2) + l * l * Rational(3);
  CHECK(p.coefficient_of(vars::lambda(), 0) == a - d);
  CHECK(p.coefficient_of(vars::lambda(), 1) == d * Rational(2));
  CHECK(p.coefficient_of(vars::lambda(), 2) == Polynomial(3L));
  CHECK(p.coefficient_of(vars::lambda(), 3).is_zero());
  auto cs = p.coefficients_in(vars::lambda());
  REQUIRE(cs.size() == 3);
  // reconstruction: sum coeff_k * l^k
  Polynomial rec;
  for (size_t k = 0; k < cs.size(); ++k) rec += cs[k] * l.pow((long)k);
  CHECK(rec == p);
  CHECK(p.degree_in(vars::lambda()) == 2);
}

TEST_CASE("substitution is a ring homomorphism and is simultaneous") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  // lambda -> -lambda - d  on  d + 2l  gives  -d - 2l
  Polynomial p = d + l * Rational(2);
  Polynomial q = p.substitute(vars::lambda(), Polynomial() - l - d);
  CHECK(q == Polynomial() - d - l * Rational(2));
  // simultaneous swap d <-> l
  std::map<Variable, Polynomial> swap_dl = {{vars::d(), l}, {vars::lambda(), d}};
  Polynomial r = (d * d + l).substitute(swap_dl);
  CHECK(r == l * l + d);

  std::mt19937 rng(99);
  std::vector<Variable> vs = {vars::d(), vars::lambda()};
  std::map<Variable, Polynomial> bind = {{vars::d(), l + Polynomial(1L)},
                                         {vars::lambda(), d * d - l}};
  for (int t = 0; t < 40; ++t) {
    Polynomial a = random_poly(rng, vs), b = random_poly(rng, vs);
    CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
    CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
  }
}

TEST_CASE("evaluate") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  Polynomial p = d * d + l * Rational(3);
  std::map<Variable, Rational> at = {{vars::d(), Rational(2)}, {vars::lambda(), Rational(1, 3)}};
  CHECK(p.evaluate(at) == Rational(5));
  std::map<Variable, Rational> missing = {{vars::d(), Rational(2)}};
  CHECK_THROWS(p.evaluate(missing));
}

TEST_CASE("exact division") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  Polynomial num = (d + l) * (d - l) * (d + Polynomial(2L));
  auto q = Polynomial::divide_exact(num, d + l);
  REQUIRE(q.has_value());
  CHECK(*q == (d - l) * (d + Polynomial(2L)));
  CHECK(!Polynomial::divide_exact(d * d + Polynomial(1L), d + Polynomial(1L)).has_value());
  // dividing zero by anything nonzero gives zero
  auto z = Polynomial::divide_exact(Polynomial(), d + l);
  REQUIRE(z.has_value());
  CHECK(z->is_zero());
  std::mt19937 rng(4242);
  std::vector<Variable> vs = {vars::d(), vars::lambda(), vars::mu()};
  for (int t = 0; t < 40; ++t) {
    Polynomial a = random_poly(rng, vs, 3, 2), b = random_poly(rng, vs, 3, 2);
    if (b.is_zero()) continue;
    auto res = Polynomial::divide_exact(a * b, b);
    REQUIRE(res.has_value());
    CHECK(*res == a);
  }
}

TEST_CASE("univariate gcd") {
  Polynomial d = v(vars::d());
  Polynomial p = d * d - Polynomial(1L);        // (d-1)(d+1)
  Polynomial q = d - Polynomial(1L);
  CHECK(univariate_gcd(p, q, vars::d()) == q);
  CHECK(univariate_gcd(p, Polynomial(), vars::d()) == d * d - Polynomial(1L));
  CHECK(univariate_gcd(Polynomial(), Polynomial(), vars::d()).is_zero());
  // gcd of coprime is 1
  CHECK(univariate_gcd(d + Polynomial(1L), d + Polynomial(2L), vars::d()) == Polynomial(1L));
  // monic normalization
  CHECK(univariate_gcd(d * Rational(2) + Polynomial(2L), d + Polynomial(1L), vars::d()) ==
        d + Polynomial(1L));
  // gcd divides both inputs (random univariate products)
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> c(-4, 4);
  auto rnd_uni = [&](int deg) {
    Polynomial r;
    for (int k = 0; k <= deg; ++k) r += d.pow(k) * Rational(c(rng));
    return r;
  };
  for (int t = 0; t < 30; ++t) {
    Polynomial a = rnd_uni(2), b = rnd_uni(2), g0 = rnd_uni(1);
    Polynomial g = univariate_gcd(a * g0, b * g0, vars::d());
    if ((a * g0).is_zero() && (b * g0).is_zero()) continue;
    REQUIRE(!g.is_zero());
    CHECK(Polynomial::divide_exact(a * g0, g).has_value());
    CHECK(Polynomial::divide_exact(b * g0, g).has_value());
    if (!g0.is_zero()) CHECK(Polynomial::divide_exact(g, g0 / g0.leading_coefficient()).has_value());
  }
  Polynomial l = v(vars::lambda());
  CHECK_THROWS(univariate_gcd(d + l, d, vars::d()));
}

TEST_CASE("leading data and content") {
  Polynomial d = v(vars::d()), l = v(vars::lambda());
  Polynomial p = d * d * l * Rational(5) + d * l * l * Rational(-2);
  CHECK(p.leading_coefficient() == Rational(5));
  CHECK(p.leading_monomial() == Monomial::var(vars::d(), 2) * Monomial::var(vars::lambda()));
  CHECK(p.monomial_content() == Monomial::var(vars::d()) * Monomial::var(vars::lambda()));
  CHECK(Polynomial().leading_coefficient() == Rational(0));
  CHECK_THROWS(Polynomial().leading_monomial());
  CHECK(p.is_univariate_in(vars::d()) == false);
  CHECK((d * d + d).is_univariate_in(vars::d()));
  CHECK(Polynomial(3L).is_univariate_in(vars::d()));
}
