#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conformal/catalog.hpp"
#include "conformal/vir_module.hpp"

using namespace conformal;

namespace {
const Polynomial D = Polynomial::variable(vars::d());
const Polynomial L_ = Polynomial::variable(vars::lambda());
const Polynomial A_ = Polynomial::variable(vars::alpha());
}  // namespace

TEST_CASE("free module action") {
  auto M = VirModuleSpec::free_module(RationalFunction(2L), RationalFunction(Rational(1, 2)));
  CHECK(M.str() == "M(2,1/2)");
  // [L l v] = (1/2 + d + 2l) v
  CHECK(module_action(M, RationalFunction(1L), vars::lambda()) ==
        RationalFunction(Polynomial(Rational(1, 2)) + D + L_ * 2));
  // [L l (d v)] = (l + d)(1/2 + d + 2l) v
  CHECK(module_action(M, RationalFunction(D), vars::lambda()) ==
        RationalFunction((L_ + D) * (Polynomial(Rational(1, 2)) + D + L_ * 2)));
  CHECK(module_d_action(M, RationalFunction(D)) == RationalFunction(D * D));
}

TEST_CASE("one-dimensional module action") {
  auto C = VirModuleSpec::trivial_module(RationalFunction(3L));
  CHECK(C.str() == "C(3)");
  CHECK(module_action(C, RationalFunction(5L), vars::lambda()).is_zero());
  CHECK(module_d_action(C, RationalFunction(5L)) == RationalFunction(15L));
  CHECK_THROWS(module_action(C, RationalFunction(D), vars::lambda()));
}

TEST_CASE("module axioms hold symbolically in delta and offset") {
  Polynomial ds = Polynomial::variable(Variable("Ds"));
  Polynomial bs = Polynomial::variable(Variable("bs"));
  auto M = VirModuleSpec::free_module(RationalFunction(ds), RationalFunction(bs));
  auto rep = check_module_axioms(M, 5);
  CHECK(rep.ok());
  CHECK(rep.checks == 12);
  auto C = VirModuleSpec::trivial_module(RationalFunction(bs));
  CHECK(check_module_axioms(C).ok());
}

TEST_CASE("graded pieces of the second family carry shifted module data") {
  // [G_0 l (q G_j)] acts like the free module with delta = j + 2 and offset
  // = j * a.
  auto B2 = make_B(2, RationalFunction(A_));
  for (long j = -1; j <= 4; ++j) {
    auto M = VirModuleSpec::free_module(RationalFunction(Rational(j + 2)),
                                        RationalFunction(A_ * j));
    for (const Polynomial &q : {Polynomial(1L), D, D * D - D}) {
      Element w = Element::term({'G', j}, RationalFunction(q));
      Element got = bracket(B2, B2.generator(0), w, vars::lambda());
      REQUIRE(got.component_count() == 1);
      CHECK(got.coeff({'G', j}) == module_action(M, RationalFunction(q), vars::lambda()));
    }
  }
}

TEST_CASE("graded pieces of the first family differ only at the bottom") {
  auto B1 = make_B(1, RationalFunction(A_));
  for (long j = 0; j <= 4; ++j) {
    auto M = VirModuleSpec::free_module(RationalFunction(Rational(j + 2)),
                                        RationalFunction(A_ * j));
    Element w = Element::term({'G', j}, RationalFunction(D * 2 + Polynomial(1L)));
    Element got = bracket(B1, B1.generator(0), w, vars::lambda());
    CHECK(got.coeff({'G', j}) ==
          module_action(M, RationalFunction(D * 2 + Polynomial(1L)), vars::lambda()));
  }
  // bottom grade: delta = 0, offset = -a
  auto M = VirModuleSpec::free_module(RationalFunction(0L), RationalFunction(-A_));
  Element w = Element::term({'G', -1}, RationalFunction(D));
  Element got = bracket(B1, B1.generator(0), w, vars::lambda());
  CHECK(got.coeff({'G', -1}) == module_action(M, RationalFunction(D), vars::lambda()));
}

TEST_CASE("delta zero admits an invariant coefficient ideal, delta one does not") {
  // For M(0, c) the coefficient (d + c) generates a stable C[d]-submodule:
  // the action lands back in multiples of (d + c).  For M(1, c) it does not.
  Rational c(3);
  Polynomial gen = D + Polynomial(c);
  auto M0 = VirModuleSpec::free_module(RationalFunction(0L), RationalFunction(Rational(c)));
  RationalFunction img0 = module_action(M0, RationalFunction(gen), vars::lambda());
  auto q0 = Polynomial::divide_exact(img0.expect_polynomial("test"), gen);
  CHECK(q0.has_value());

  auto M1 = VirModuleSpec::free_module(RationalFunction(1L), RationalFunction(Rational(c)));
  RationalFunction img1 = module_action(M1, RationalFunction(gen), vars::lambda());
  auto q1 = Polynomial::divide_exact(img1.expect_polynomial("test"), gen);
  CHECK(!q1.has_value());
}
