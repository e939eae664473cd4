#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conformal/catalog.hpp"

using namespace conformal;

namespace {
Polynomial pv(Variable v) { return Polynomial::variable(v); }
const Polynomial D = pv(vars::d());
const Polynomial L = pv(vars::lambda());
const Polynomial A_ = pv(vars::alpha());

RationalFunction sym_alpha() { return RationalFunction(A_); }

Element g(long i, const Polynomial &c) { return Element::term({'G', i}, RationalFunction(c)); }
}  // namespace

TEST_CASE("first family table rows") {
  auto B1 = make_B(1, sym_alpha());
  CHECK(B1.rule(-1, -1).is_zero());
  CHECK(B1.rule(-1, 0) == g(-1, A_ - D));
  CHECK(B1.rule(-1, 1) == g(0, Polynomial(2L)));
  CHECK(B1.rule(-1, 4) == g(3, Polynomial(5L)));
  CHECK(B1.rule(0, 0) == g(0, D + L * 2));
  CHECK(B1.rule(1, 2) == g(3, A_ + L * 5 + D * 2));
  CHECK(B1.rule(2, 1) == g(3, -A_ + L * 5 + D * 3));
  // bottom column is the skew completion of the bottom row
  CHECK(B1.rule(0, -1) == g(-1, D - A_));
  CHECK(B1.rule(2, -1) == g(1, Polynomial(-3L)));
}

TEST_CASE("second family table rows") {
  auto B2 = make_B(2, sym_alpha());
  CHECK(B2.rule(-1, -1).is_zero());
  CHECK(B2.rule(-1, 0) == g(-1, A_ + L));
  CHECK(B2.rule(-1, 3) == g(2, (A_ + L) * 4));
  CHECK(B2.rule(0, 0) == g(0, D + L * 2));
  CHECK(B2.rule(1, 2) == g(3, A_ + L * 5 + D * 2));
  CHECK(B2.rule(2, -1) == g(1, A_ * (-3) + L * 3 + D * 3));
  // rational specialization
  auto B2h = make_B(2, RationalFunction(Rational(1, 2)));
  CHECK(B2h.rule(-1, 0) == g(-1, L + Polynomial(Rational(1, 2))));
  CHECK(B2h.symbolic_alpha == false);
  CHECK(make_B(2, sym_alpha()).symbolic_alpha == true);
}

TEST_CASE("degree-zero row is the rank-one table in both families") {
  auto V = make_virasoro();
  Element vir = V.rule(0, 0);
  for (int s : {1, 2}) {
    auto B = make_B(s, sym_alpha());
    Element row = B.rule(0, 0);
    REQUIRE(row.component_count() == 1);
    CHECK(row.coeff({'G', 0}) == vir.coeff({'L', 0}));
  }
}

TEST_CASE("filtered family table rows") {
  auto G = make_gc1();
  CHECK(G.rule(0, 0).is_zero());
  CHECK(G.rule(0, 1) == Element::term({'J', 0}, RationalFunction(L)));
  CHECK(G.rule(1, 0) == Element::term({'J', 0}, RationalFunction(L + D)));
  CHECK(G.rule(1, 1) == Element::term({'J', 1}, RationalFunction(L * 2 + D)));
  Element r21 = G.rule(2, 1);
  CHECK(r21.coeff({'J', 3}).is_zero());
  CHECK(r21.coeff({'J', 2}) == RationalFunction(L * 3 + D * 2));
  CHECK(r21.coeff({'J', 1}) == RationalFunction((L + D) * (L + D)));
}

TEST_CASE("axioms hold at small bounds") {
  CHECK(verify_axioms(make_virasoro(), 0, false).ok());
  CHECK(verify_axioms(make_B(1, sym_alpha()), 2, true).ok());
  CHECK(verify_axioms(make_B(2, sym_alpha()), 2, true).ok());
  CHECK(verify_axioms(make_B(1, RationalFunction(Rational(-2))), 2, true).ok());
  CHECK(verify_axioms(make_gc1(), 2, true).ok());
  CHECK(verify_axioms(make_abelian(), 2, false).ok());
}

TEST_CASE("descriptor parsing") {
  CHECK(parse_algebra("vir").name == "Vir");
  CHECK(parse_algebra("gc1").name == "gc1");
  CHECK(parse_algebra("abelian").name == "abelian");
  auto b1 = parse_algebra("B1:alpha=1/2");
  CHECK(b1.name == "B(1,1/2)");
  CHECK(b1.rule(-1, 0) == g(-1, Polynomial(Rational(1, 2)) - D));
  auto b2 = parse_algebra("B2:alpha=sym");
  CHECK(b2.name == "B(2,a)");
  CHECK(b2.symbolic_alpha);
  CHECK_THROWS(parse_algebra("B3:alpha=1"));
  CHECK_THROWS(parse_algebra("B1:alpha=oops"));
  CHECK_THROWS(parse_algebra(""));
  CHECK_THROWS(parse_algebra("virasoro"));
}

TEST_CASE("index ranges") {
  CHECK(index_range(make_B(1, sym_alpha()), 3) ==
        std::vector<long>{-1, 0, 1, 2, 3});
  CHECK(index_range(make_virasoro(), 6) == std::vector<long>{0});
  CHECK(index_range(make_gc1(), 2) == std::vector<long>{0, 1, 2});
}
