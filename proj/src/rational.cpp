#include "conformal/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace conformal {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
  v_.canonicalize();
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string &s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational::parse: malformed rational '" + s + "'");
  if (v.get_den() == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(v);
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e < 0 ? reciprocal() : *this;
  long n = e < 0 ? -e : e;
  Rational acc(1);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  return v_.get_str();
}

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

Rational factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class acc;
  mpz_fac_ui(acc.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(acc));
}

Rational binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return Rational(0);
  mpz_class acc;
  mpz_bin_uiui(acc.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational(mpq_class(acc));
}

Rational falling_factorial(long n, long k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  Rational acc(1);
  for (long t = 0; t < k; ++t) acc *= Rational(n - t);
  return acc;
}

}  // namespace conformal
