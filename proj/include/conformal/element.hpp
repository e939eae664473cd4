#pragma once

#include <map>
#include <string>
#include <vector>

#include "conformal/rational_function.hpp"

namespace conformal {

// Basis generator of a conformal algebra (or module): a one-character family
// tag plus an integer index.  'L' is the rank-one Virasoro generator, 'G'
// the graded family generators, 'J' the filtered family, 'v' a module
// generator.  For 'L' and 'v' the index is always 0.
struct GeneratorId {
  char family = 'G';
  long index = 0;

  friend bool operator==(const GeneratorId &a, const GeneratorId &b) {
    return a.family == b.family && a.index == b.index;
  }
  friend bool operator!=(const GeneratorId &a, const GeneratorId &b) { return !(a == b); }
  friend bool operator<(const GeneratorId &a, const GeneratorId &b) {
    if (a.family != b.family) return a.family < b.family;
    return a.index < b.index;
  }

  // "L", "G_2", "G_{-1}", "J^3", "v"
  std::string str() const;
};

// Finite C-combination of generators with RationalFunction coefficients.
// The coefficients may involve the translation variable "d", bracket
// parameters, and any symbolic constants; components with zero coefficient
// are pruned eagerly, so is_zero() is just emptiness.
class Element {
public:
  using ComponentMap = std::map<GeneratorId, RationalFunction>;

  Element() = default;
  static Element generator(GeneratorId g);
  static Element term(GeneratorId g, const RationalFunction &c);

  bool is_zero() const { return comps_.empty(); }
  const ComponentMap &components() const { return comps_; }
  size_t component_count() const { return comps_.size(); }
  // Coefficient of a generator (zero when absent).
  RationalFunction coeff(GeneratorId g) const;

  void add(GeneratorId g, const RationalFunction &c);

  Element operator-() const;
  Element &operator+=(const Element &o);
  Element &operator-=(const Element &o);
  friend Element operator+(Element a, const Element &b) { return a += b; }
  friend Element operator-(Element a, const Element &b) { return a -= b; }
  // Coefficient-wise scalar multiplication.
  Element scaled(const RationalFunction &c) const;

  friend bool operator==(const Element &a, const Element &b) { return a.comps_ == b.comps_; }
  friend bool operator!=(const Element &a, const Element &b) { return !(a == b); }

  // Substitution applied to every coefficient.
  Element substitute(Variable v, const Polynomial &value) const;
  Element substitute(const std::map<Variable, Polynomial> &bindings) const;

  bool involves(Variable v) const;
  // Max degree of v over all coefficients (-1 when the element is zero);
  // requires every coefficient denominator to be free of v.
  long degree_in(Variable v) const;
  // Component-wise coefficient of v^k.
  Element coefficient_of(Variable v, long k) const;
  // All coefficients viewed in powers of v; index = power.
  std::vector<Element> coefficients_in(Variable v) const;

  // "(d + 2*l) L", "(-1) G_{-1} + (a) G_0", "0"; deterministic order.
  std::string str() const;

private:
  ComponentMap comps_;
};

std::ostream &operator<<(std::ostream &os, const Element &e);

// "(c)" unless c's own string is already one parenthesized group.
std::string coeff_str(const RationalFunction &c);

}  // namespace conformal
