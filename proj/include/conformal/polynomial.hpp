#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conformal/rational.hpp"
#include "conformal/variable.hpp"

namespace conformal {

// Power product of interned variables.  Factors are kept sorted by the
// canonical variable order with strictly positive exponents; the empty
// product is 1.
class Monomial {
public:
  Monomial() = default;
  static Monomial var(Variable v, long e = 1);

  long total_degree() const { return degree_; }
  long exponent(Variable v) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<Variable, long>> &factors() const { return factors_; }

  Monomial operator*(const Monomial &o) const;
  // Componentwise quotient; nullopt unless o divides *this.
  std::optional<Monomial> divide(const Monomial &o) const;
  // Componentwise minimum.
  Monomial gcd(const Monomial &o) const;
  Monomial pow(long e) const;

  friend bool operator==(const Monomial &a, const Monomial &b) {
    return a.factors_ == b.factors_;
  }

  // Graded lexicographic comparison (total degree first, then the earliest
  // variable in the global order with a differing exponent, larger exponent
  // winning).  Returns -1, 0, +1.
  static int cmp(const Monomial &a, const Monomial &b);

  std::string str() const;  // "d^2*l"; "1" for the empty product

private:
  std::vector<std::pair<Variable, long>> factors_;
  long degree_ = 0;
};

struct MonomialGrlexGreater {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return Monomial::cmp(a, b) > 0;
  }
};

// Sparse multivariate polynomial with Rational coefficients over interned
// variables.  Terms are stored in descending graded-lex order, which fixes
// both the leading term and the canonical text form.  Values are immutable
// in spirit: all operations return fresh polynomials.
class Polynomial {
public:
  using TermMap = std::map<Monomial, Rational, MonomialGrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational &c);
  Polynomial(long c);
  static Polynomial variable(Variable v);
  static Polynomial monomial(const Monomial &m, const Rational &c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero polynomial gives 0); throws if the
  // polynomial has a nonconstant term.
  Rational constant_value() const;
  size_t term_count() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  long total_degree() const;       // -1 for the zero polynomial
  long degree_in(Variable v) const;
  bool involves(Variable v) const;
  std::set<Variable> variables() const;
  // True when every term involves no variable other than v.
  bool is_univariate_in(Variable v) const;

  Rational coefficient(const Monomial &m) const;
  // Polynomial coefficient of v^k (collecting all other variables).
  Polynomial coefficient_of(Variable v, long k) const;
  // All coefficients viewed as a polynomial in v; index = power of v.
  std::vector<Polynomial> coefficients_in(Variable v) const;
  Rational leading_coefficient() const;  // 0 for the zero polynomial
  const Monomial &leading_monomial() const;  // throws on zero
  // Componentwise-min exponent over all terms; 1 for the zero polynomial.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }
  Polynomial operator*(const Rational &c) const;
  Polynomial operator*(long c) const { return *this * Rational(c); }
  Polynomial operator/(const Rational &c) const;
  Polynomial operator/(long c) const { return *this / Rational(c); }
  Polynomial pow(long e) const;  // e >= 0

  friend bool operator==(const Polynomial &a, const Polynomial &b) {
    return a.terms_ == b.terms_;
  }

  // Simultaneous substitution: every occurrence of a bound variable is
  // replaced by its binding; unbound variables are left in place.
  Polynomial substitute(const std::map<Variable, Polynomial> &bindings) const;
  Polynomial substitute(Variable v, const Polynomial &value) const;
  // Full evaluation; throws if a variable is missing from the assignment.
  Rational evaluate(const std::map<Variable, Rational> &assignment) const;

  // Exact multivariate division; nullopt when den does not divide num.
  static std::optional<Polynomial> divide_exact(const Polynomial &num,
                                                const Polynomial &den);

  // Canonical text form: terms in descending graded-lex order joined by
  // " + ", coefficients printed unless 1, negative coefficients
  // parenthesized, e.g. "(-1/2)*d^2*l + 3*a".
  std::string str() const;

private:
  void add_term(const Monomial &m, const Rational &c);
  TermMap terms_;
};

std::ostream &operator<<(std::ostream &os, const Polynomial &p);

// Monic gcd of two polynomials that involve no variable other than v
// (constants allowed); gcd(0, 0) = 0.  Throws if an input involves another
// variable.
Polynomial univariate_gcd(const Polynomial &p, const Polynomial &q, Variable v);

// Division with remainder in v: p = q * g + r with deg_v(r) < deg_v(g).
// Both inputs must involve no variable other than v; g must be nonzero.
std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial &p, const Polynomial &g,
                                                    Variable v);

}  // namespace conformal
