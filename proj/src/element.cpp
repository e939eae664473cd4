#include "conformal/element.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace conformal {

std::string GeneratorId::str() const {
  switch (family) {
    case 'L': return "L";
    case 'v': return "v";
    case 'J': return "J^" + std::to_string(index);
    default: {
      if (index < 0) return std::string(1, family) + "_{" + std::to_string(index) + "}";
      return std::string(1, family) + "_" + std::to_string(index);
    }
  }
}

Element Element::generator(GeneratorId g) { return term(g, RationalFunction(1L)); }

Element Element::term(GeneratorId g, const RationalFunction &c) {
  Element e;
  e.add(g, c);
  return e;
}

RationalFunction Element::coeff(GeneratorId g) const {
  auto it = comps_.find(g);
  return it == comps_.end() ? RationalFunction() : it->second;
}

void Element::add(GeneratorId g, const RationalFunction &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = comps_.emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

Element Element::operator-() const {
  Element out;
  for (const auto &[g, c] : comps_) out.comps_.emplace(g, -c);
  return out;
}

Element &Element::operator+=(const Element &o) {
  for (const auto &[g, c] : o.comps_) add(g, c);
  return *this;
}

Element &Element::operator-=(const Element &o) {
  for (const auto &[g, c] : o.comps_) add(g, -c);
  return *this;
}

Element Element::scaled(const RationalFunction &c) const {
  Element out;
  if (c.is_zero()) return out;
  for (const auto &[g, f] : comps_) out.add(g, f * c);
  return out;
}

Element Element::substitute(Variable v, const Polynomial &value) const {
  Element out;
  for (const auto &[g, c] : comps_) out.add(g, c.substitute(v, value));
  return out;
}

Element Element::substitute(const std::map<Variable, Polynomial> &bindings) const {
  Element out;
  for (const auto &[g, c] : comps_) out.add(g, c.substitute(bindings));
  return out;
}

bool Element::involves(Variable v) const {
  for (const auto &[g, c] : comps_)
    if (c.involves(v)) return true;
  return false;
}

long Element::degree_in(Variable v) const {
  long deg = -1;
  for (const auto &[g, c] : comps_) {
    if (c.den().involves(v))
      throw std::domain_error("Element::degree_in: denominator involves " + v.name());
    deg = std::max(deg, c.num().degree_in(v));
  }
  return deg;
}

Element Element::coefficient_of(Variable v, long k) const {
  Element out;
  for (const auto &[g, c] : comps_) {
    if (c.den().involves(v))
      throw std::domain_error("Element::coefficient_of: denominator involves " + v.name());
    out.add(g, RationalFunction(c.num().coefficient_of(v, k), c.den()));
  }
  return out;
}

std::vector<Element> Element::coefficients_in(Variable v) const {
  std::vector<Element> out;
  long deg = degree_in(v);
  for (long k = 0; k <= deg; ++k) out.push_back(coefficient_of(v, k));
  return out;
}

std::string coeff_str(const RationalFunction &c) {
  std::string s = c.str();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    int depth = 0;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (depth == 0) return "(" + s + ")";  // first group closes early
    }
    return s;
  }
  return "(" + s + ")";
}

std::string Element::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[g, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << coeff_str(c) << " " << g.str();
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Element &e) { return os << e.str(); }

}  // namespace conformal
