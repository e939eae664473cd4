#include "conformal/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace conformal {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(Variable v, long e) {
  if (e < 0) throw std::invalid_argument("Monomial::var: negative exponent");
  Monomial m;
  if (e > 0) {
    m.factors_.emplace_back(v, e);
    m.degree_ = e;
  }
  return m;
}

long Monomial::exponent(Variable v) const {
  for (const auto &[w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial &o) const {
  Monomial r;
  r.factors_.reserve(factors_.size() + o.factors_.size());
  auto ia = factors_.begin(), ib = o.factors_.begin();
  while (ia != factors_.end() || ib != o.factors_.end()) {
    if (ib == o.factors_.end() || (ia != factors_.end() && ia->first < ib->first)) {
      r.factors_.push_back(*ia++);
    } else if (ia == factors_.end() || ib->first < ia->first) {
      r.factors_.push_back(*ib++);
    } else {
      r.factors_.emplace_back(ia->first, ia->second + ib->second);
      ++ia, ++ib;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial &o) const {
  Monomial r;
  auto ia = factors_.begin(), ib = o.factors_.begin();
  while (ib != o.factors_.end()) {
    if (ia == factors_.end() || ib->first < ia->first) return std::nullopt;
    if (ia->first < ib->first) {
      r.factors_.push_back(*ia++);
      continue;
    }
    if (ia->second < ib->second) return std::nullopt;
    if (ia->second > ib->second) r.factors_.emplace_back(ia->first, ia->second - ib->second);
    ++ia, ++ib;
  }
  r.factors_.insert(r.factors_.end(), ia, factors_.end());
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::gcd(const Monomial &o) const {
  Monomial r;
  auto ia = factors_.begin(), ib = o.factors_.begin();
  while (ia != factors_.end() && ib != o.factors_.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      long e = std::min(ia->second, ib->second);
      r.factors_.emplace_back(ia->first, e);
      r.degree_ += e;
      ++ia, ++ib;
    }
  }
  return r;
}

Monomial Monomial::pow(long e) const {
  if (e < 0) throw std::invalid_argument("Monomial::pow: negative exponent");
  Monomial r;
  if (e == 0) return r;
  r.factors_ = factors_;
  for (auto &[v, k] : r.factors_) k *= e;
  r.degree_ = degree_ * e;
  return r;
}

int Monomial::cmp(const Monomial &a, const Monomial &b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_ ? -1 : 1;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    // The side whose next factor has the earlier variable holds a positive
    // exponent where the other side has zero.
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      return 1;
    if (ia == a.factors_.end() || ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia, ++ib;
  }
  return 0;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto &[v, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << v.name();
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational &c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(long c) : Polynomial(Rational(c)) {}

Polynomial Polynomial::variable(Variable v) {
  return monomial(Monomial::var(v), Rational(1));
}

Polynomial Polynomial::monomial(const Monomial &m, const Rational &c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::domain_error("Polynomial::constant_value: not constant: " + str());
  return terms_.begin()->second;
}

long Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.total_degree();  // descending order: first is max
}

long Polynomial::degree_in(Variable v) const {
  long deg = terms_.empty() ? -1 : 0;
  for (const auto &[m, c] : terms_) deg = std::max(deg, m.exponent(v));
  return deg;
}

bool Polynomial::involves(Variable v) const {
  for (const auto &[m, c] : terms_)
    if (m.exponent(v) > 0) return true;
  return false;
}

std::set<Variable> Polynomial::variables() const {
  std::set<Variable> out;
  for (const auto &[m, c] : terms_)
    for (const auto &[v, e] : m.factors()) out.insert(v);
  return out;
}

bool Polynomial::is_univariate_in(Variable v) const {
  for (const auto &[m, c] : terms_)
    for (const auto &[w, e] : m.factors())
      if (!(w == v)) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::coefficient_of(Variable v, long k) const {
  Polynomial out;
  for (const auto &[m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    auto rest = m.divide(Monomial::var(v, k));
    out.add_term(*rest, c);
  }
  return out;
}

std::vector<Polynomial> Polynomial::coefficients_in(Variable v) const {
  std::vector<Polynomial> out(static_cast<size_t>(std::max<long>(degree_in(v), 0)) + 1);
  for (const auto &[m, c] : terms_) {
    long k = m.exponent(v);
    auto rest = m.divide(Monomial::var(v, k));
    out[static_cast<size_t>(k)].add_term(*rest, c);
  }
  return out;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

const Monomial &Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw std::domain_error("Polynomial::leading_monomial: zero polynomial");
  return terms_.begin()->first;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial();
  Monomial g = terms_.begin()->first;
  for (const auto &[m, c] : terms_) {
    g = g.gcd(m);
    if (g.is_one()) break;
  }
  return g;
}

void Polynomial::add_term(const Monomial &m, const Rational &c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto &[m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  for (const auto &[m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  Polynomial r;
  for (const auto &[ma, ca] : a.terms_)
    for (const auto &[mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::operator*(const Rational &c) const {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto &[m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::operator/(const Rational &c) const {
  if (c.is_zero()) throw std::domain_error("Polynomial: division by zero scalar");
  return *this * c.reciprocal();
}

Polynomial Polynomial::pow(long e) const {
  if (e < 0) throw std::invalid_argument("Polynomial::pow: negative exponent");
  Polynomial acc(Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::map<Variable, Polynomial> &bindings) const {
  // Per-call cache of binding powers keyed by (variable id, exponent).
  std::map<std::pair<uint32_t, long>, Polynomial> powers;
  auto power = [&](Variable v, long e) -> const Polynomial & {
    auto key = std::make_pair(v.id(), e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, bindings.at(v).pow(e)).first;
    return it->second;
  };

  Polynomial out;
  for (const auto &[m, c] : terms_) {
    Polynomial term(c);
    Monomial untouched;
    for (const auto &[v, e] : m.factors()) {
      if (bindings.count(v)) {
        term = term * power(v, e);
      } else {
        untouched = untouched * Monomial::var(v, e);
      }
    }
    if (!untouched.is_one()) term = term * Polynomial::monomial(untouched, Rational(1));
    out += term;
  }
  return out;
}

Polynomial Polynomial::substitute(Variable v, const Polynomial &value) const {
  return substitute(std::map<Variable, Polynomial>{{v, value}});
}

Rational Polynomial::evaluate(const std::map<Variable, Rational> &assignment) const {
  Rational out(0);
  for (const auto &[m, c] : terms_) {
    Rational term = c;
    for (const auto &[v, e] : m.factors()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("Polynomial::evaluate: unbound variable " + v.name());
      term *= it->second.pow(e);
    }
    out += term;
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial &num,
                                                   const Polynomial &den) {
  if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  Polynomial quotient;
  Polynomial rem = num;
  const Monomial &dlm = den.leading_monomial();
  const Rational dlc = den.leading_coefficient();
  while (!rem.is_zero()) {
    auto q = rem.leading_monomial().divide(dlm);
    if (!q) return std::nullopt;
    Polynomial t = Polynomial::monomial(*q, rem.leading_coefficient() / dlc);
    quotient += t;
    rem -= t * den;
  }
  return quotient;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (c.sign() < 0) cs = "(" + cs + ")";
    if (m.is_one()) {
      os << cs;
    } else if (c.is_one()) {
      os << m.str();
    } else {
      os << cs << "*" << m.str();
    }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const Polynomial &p) {
  return os << p.str();
}

Polynomial univariate_gcd(const Polynomial &p, const Polynomial &q, Variable v) {
  if (!p.is_univariate_in(v) || !q.is_univariate_in(v))
    throw std::invalid_argument("univariate_gcd: input involves a second variable");
  auto dense = [&](const Polynomial &f) {
    std::vector<Rational> c(static_cast<size_t>(std::max<long>(f.degree_in(v), 0)) + 1);
    for (const auto &[m, k] : f.terms()) c[static_cast<size_t>(m.exponent(v))] = k;
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
  };
  auto is_zero = [](const std::vector<Rational> &c) {
    return c.size() == 1 && c[0].is_zero();
  };
  auto reduce = [&](std::vector<Rational> a, const std::vector<Rational> &b) {
    // a mod b, b nonzero.
    while (!is_zero(a) && a.size() >= b.size()) {
      Rational f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      while (a.size() > 1 && a.back().is_zero()) a.pop_back();
      if (a.size() < b.size()) break;
      if (a.back().is_zero()) break;  // defensive; trimming above handles it
    }
    return a;
  };

  std::vector<Rational> a = dense(p.is_zero() ? Polynomial() : p);
  std::vector<Rational> b = dense(q.is_zero() ? Polynomial() : q);
  if (is_zero(a) && is_zero(b)) return Polynomial();
  if (is_zero(a)) std::swap(a, b);
  while (!is_zero(b)) {
    auto r = reduce(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // Monic normalization.
  Polynomial g;
  Rational lead = a.back();
  for (size_t i = 0; i < a.size(); ++i)
    g += Polynomial::monomial(Monomial::var(v, static_cast<long>(i)), a[i] / lead);
  return g;
}


std::pair<Polynomial, Polynomial> univariate_divmod(const Polynomial &p, const Polynomial &g,
                                                    Variable v) {
  if (!p.is_univariate_in(v) || !g.is_univariate_in(v))
    throw std::invalid_argument("univariate_divmod: input involves a second variable");
  if (g.is_zero()) throw std::invalid_argument("univariate_divmod: zero divisor");
  Polynomial q, r = p;
  const long dg = g.degree_in(v);
  const Rational glead = g.coefficient_of(v, dg).constant_value();
  while (!r.is_zero() && r.degree_in(v) >= dg) {
    long dr = r.degree_in(v);
    Rational f = r.coefficient_of(v, dr).constant_value() / glead;
    Polynomial t = Polynomial::monomial(Monomial::var(v, dr - dg), f);
    q += t;
    r -= t * g;
  }
  return {q, r};
}
}  // namespace conformal
