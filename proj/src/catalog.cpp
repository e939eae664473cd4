#include "conformal/catalog.hpp"

#include <stdexcept>

namespace conformal {

namespace {
Polynomial pv(Variable v) { return Polynomial::variable(v); }
}  // namespace

ConformalAlgebra make_virasoro() {
  ConformalAlgebra A;
  A.name = "Vir";
  A.family = 'L';
  A.index_min = 0;
  A.graded = true;
  A.valid_index = [](long i) { return i == 0; };
  A.rule = [](long i, long j) -> Element {
    if (i != 0 || j != 0) throw std::out_of_range("Vir has a single generator");
    return Element::term({'L', 0}, RationalFunction(pv(vars::d()) + pv(vars::lambda()) * 2));
  };
  return A;
}

ConformalAlgebra make_B(int s, const RationalFunction &alpha) {
  if (s != 1 && s != 2) throw std::invalid_argument("make_B: s must be 1 or 2");
  ConformalAlgebra A;
  A.name = "B(" + std::to_string(s) + "," + alpha.str() + ")";
  A.family = 'G';
  A.index_min = -1;
  A.graded = true;
  A.symbolic_alpha = alpha.involves(vars::alpha());
  A.valid_index = [](long i) { return i >= -1; };
  const RationalFunction a = alpha;
  const Polynomial d = pv(vars::d()), l = pv(vars::lambda());

  // The generic row shared by both families.
  auto generic = [a, d, l](long i, long j) -> Element {
    RationalFunction c = a * Rational(j - i) +
                         RationalFunction(l * Rational(i + j + 2) + d * Rational(i + 1));
    return Element::term({'G', i + j}, c);
  };

  if (s == 2) {
    A.rule = [generic](long i, long j) -> Element {
      if (i < -1 || j < -1) throw std::out_of_range("B family index below -1");
      if (i == -1 && j == -1) return Element();  // the rule vanishes identically here
      return generic(i, j);
    };
    return A;
  }

  A.rule = [a, d, generic](long i, long j) -> Element {
    if (i < -1 || j < -1) throw std::out_of_range("B family index below -1");
    if (i == -1 && j == -1) return Element();
    if (i == -1) {
      if (j == 0) return Element::term({'G', -1}, a - RationalFunction(d));
      return Element::term({'G', j - 1}, RationalFunction(Rational(j + 1)));
    }
    if (j == -1) {
      // Completed from the i == -1 rows by skew-symmetry; the row is
      // independent of the bracket parameter, so only the sign and the
      // d-shift survive.
      if (i == 0) return Element::term({'G', -1}, RationalFunction(d) - a);
      return Element::term({'G', i - 1}, RationalFunction(Rational(-(i + 1))));
    }
    return generic(i, j);
  };
  return A;
}

ConformalAlgebra make_gc1() {
  ConformalAlgebra A;
  A.name = "gc1";
  A.family = 'J';
  A.index_min = 0;
  A.graded = false;
  A.valid_index = [](long i) { return i >= 0; };
  const Polynomial d = pv(vars::d()), l = pv(vars::lambda());
  A.rule = [d, l](long m, long n) -> Element {
    if (m < 0 || n < 0) throw std::out_of_range("gc1 index below 0");
    Element out;
    const Polynomial ld = l + d, nl = -l;
    for (long s = 0; s <= m; ++s)
      out.add({'J', m + n - s}, RationalFunction(ld.pow(s) * binomial(m, s)));
    for (long s = 0; s <= n; ++s)
      out.add({'J', m + n - s}, RationalFunction(-(nl.pow(s) * binomial(n, s))));
    return out;
  };
  return A;
}

ConformalAlgebra make_abelian() {
  ConformalAlgebra A;
  A.name = "abelian";
  A.family = 'G';
  A.index_min = -1;
  A.graded = true;
  A.valid_index = [](long i) { return i >= -1; };
  A.rule = [](long, long) { return Element(); };
  return A;
}

ConformalAlgebra corrupt_entry(const ConformalAlgebra &A, long i, long j, const Element &e) {
  ConformalAlgebra B = A;
  B.name = A.name + " (corrupted)";
  auto inner = A.rule;
  B.rule = [inner, i, j, e](long x, long y) -> Element {
    if (x == i && y == j) return e;
    return inner(x, y);
  };
  return B;
}

ConformalAlgebra parse_algebra(const std::string &descriptor) {
  static const char *usage =
      "algebra descriptor must be one of: vir | B1:alpha=<p/q|sym> | "
      "B2:alpha=<p/q|sym> | gc1 | abelian";
  if (descriptor == "vir") return make_virasoro();
  if (descriptor == "gc1") return make_gc1();
  if (descriptor == "abelian") return make_abelian();
  if (descriptor.rfind("B1:alpha=", 0) == 0 || descriptor.rfind("B2:alpha=", 0) == 0) {
    int s = descriptor[1] - '0';
    std::string val = descriptor.substr(9);
    if (val == "sym") return make_B(s, RationalFunction(pv(vars::alpha())));
    try {
      return make_B(s, RationalFunction(Rational::parse(val)));
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument(std::string("bad alpha value '") + val + "'; " + usage);
    }
  }
  throw std::invalid_argument(std::string("unknown algebra '") + descriptor + "'; " + usage);
}

}  // namespace conformal
