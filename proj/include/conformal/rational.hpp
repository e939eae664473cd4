#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace conformal {

// Arbitrary-precision rational number.  Thin wrapper over GMP's mpq_class
// that keeps the value canonical at all times: fully reduced, denominator
// positive, zero stored as 0/1.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den);
  explicit Rational(const mpq_class &v) : v_(v) { v_.canonicalize(); }

  // Parses "p" or "p/q" with optional sign; throws std::invalid_argument on
  // malformed input or zero denominator.
  static Rational parse(const std::string &s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational &a, const Rational &b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational &a, const Rational &b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational &a, const Rational &b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational &a, const Rational &b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational &a, const Rational &b) { return a.v_ >= b.v_; }

  Rational reciprocal() const;
  Rational pow(long e) const;  // integer exponent, e < 0 requires nonzero base
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  // Canonical text form: "p" when the denominator is 1, else "p/q".
  std::string str() const;

  const mpq_class &raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// n! as a Rational (n >= 0).
Rational factorial(long n);

// Binomial coefficient C(n, k) for integer n >= 0; zero when k < 0 or k > n.
Rational binomial(long n, long k);

// Falling factorial n(n-1)...(n-k+1); 1 when k == 0.
Rational falling_factorial(long n, long k);

}  // namespace conformal
