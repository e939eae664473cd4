#include "conformal/rational_function.hpp"

#include <ostream>
#include <stdexcept>

namespace conformal {

RationalFunction::RationalFunction(const Polynomial &num, const Polynomial &den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    // Common monomial content.
    Monomial g = num_.monomial_content().gcd(den_.monomial_content());
    if (!g.is_one()) {
      Polynomial gm = Polynomial::monomial(g, Rational(1));
      num_ = *Polynomial::divide_exact(num_, gm);
      den_ = *Polynomial::divide_exact(den_, gm);
    }
    // Univariate gcd when both sides live in one shared variable.
    auto vn = num_.variables();
    auto vd = den_.variables();
    if (vd.size() == 1 && vn.size() <= 1 &&
        (vn.empty() || *vn.begin() == *vd.begin())) {
      Variable v = *vd.begin();
      Polynomial g1 = univariate_gcd(num_, den_, v);
      if (g1.total_degree() > 0) {
        num_ = *Polynomial::divide_exact(num_, g1);
        den_ = *Polynomial::divide_exact(den_, g1);
      }
    }
  }
  // Leading coefficient of the denominator becomes 1.
  Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    num_ = num_ / lc;
    den_ = den_ / lc;
  }
}

Rational RationalFunction::constant_value() const {
  return num_.constant_value() / den_.constant_value();
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
  if (den_.is_constant()) return num_ / den_.constant_value();
  return Polynomial::divide_exact(num_, den_);
}

Polynomial RationalFunction::expect_polynomial(const std::string &what) const {
  auto p = as_polynomial();
  if (!p)
    throw std::domain_error(what + ": value is not a polynomial: " + str());
  return *p;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction &a, const RationalFunction &b) {
  if (a.den_ == b.den_) {
    RationalFunction r;
    r.num_ = a.num_ + b.num_;
    r.den_ = a.den_;
    r.normalize();
    return r;
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction &a, const RationalFunction &b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction &a, const RationalFunction &b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction &a, const RationalFunction &b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  if (a.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) throw std::domain_error("RationalFunction: reciprocal of zero");
  return RationalFunction(den_, num_);
}

bool operator==(const RationalFunction &a, const RationalFunction &b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunction RationalFunction::substitute(
    const std::map<Variable, Polynomial> &bindings) const {
  return RationalFunction(num_.substitute(bindings), den_.substitute(bindings));
}

RationalFunction RationalFunction::substitute(Variable v, const Polynomial &value) const {
  return substitute(std::map<Variable, Polynomial>{{v, value}});
}

std::string RationalFunction::str() const {
  if (den_ == Polynomial(Rational(1))) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream &operator<<(std::ostream &os, const RationalFunction &f) {
  return os << f.str();
}

}  // namespace conformal
