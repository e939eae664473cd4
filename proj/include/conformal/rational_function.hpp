#pragma once

#include <optional>
#include <string>

#include "conformal/polynomial.hpp"

namespace conformal {

// Quotient of two polynomials with a lightweight canonical form: the
// denominator is nonzero with leading coefficient 1, zero is 0/1, common
// monomial content is cancelled, and when numerator and denominator are both
// univariate in the same single variable their univariate gcd is divided
// out.  Full multivariate gcd reduction is deliberately not attempted:
// equality is decided by cross-multiplication, which is exact regardless.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Rational &c) : num_(c), den_(Rational(1)) {}
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}
  RationalFunction(const Polynomial &p) : num_(p), den_(Rational(1)) {}
  RationalFunction(const Polynomial &num, const Polynomial &den);

  const Polynomial &num() const { return num_; }
  const Polynomial &den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;

  // The value as a polynomial, if the canonical form has constant
  // denominator or the division happens to be exact.
  std::optional<Polynomial> as_polynomial() const;
  // as_polynomial() that throws std::domain_error instead of returning
  // nullopt; `what` names the caller in the message.
  Polynomial expect_polynomial(const std::string &what) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator-(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator*(const RationalFunction &a, const RationalFunction &b);
  friend RationalFunction operator/(const RationalFunction &a, const RationalFunction &b);
  RationalFunction &operator+=(const RationalFunction &o) { return *this = *this + o; }
  RationalFunction &operator-=(const RationalFunction &o) { return *this = *this - o; }
  RationalFunction &operator*=(const RationalFunction &o) { return *this = *this * o; }
  RationalFunction &operator/=(const RationalFunction &o) { return *this = *this / o; }
  RationalFunction reciprocal() const;

  // Exact equality (cross-multiplication).
  friend bool operator==(const RationalFunction &a, const RationalFunction &b);
  friend bool operator!=(const RationalFunction &a, const RationalFunction &b) {
    return !(a == b);
  }

  // Substitution applied to numerator and denominator; throws
  // std::domain_error if the denominator collapses to zero.
  RationalFunction substitute(const std::map<Variable, Polynomial> &bindings) const;
  RationalFunction substitute(Variable v, const Polynomial &value) const;

  bool involves(Variable v) const { return num_.involves(v) || den_.involves(v); }

  // Canonical text form: numerator when the denominator is 1, otherwise
  // "(num) / (den)".
  std::string str() const;

private:
  void normalize();
  Polynomial num_, den_;
};

std::ostream &operator<<(std::ostream &os, const RationalFunction &f);

}  // namespace conformal
