#pragma once

#include <gmpxx.h>

#include <string>

namespace supersplit {

/// Exact rational scalar, always in lowest terms with a positive denominator.
/// Thin value wrapper over GMP's mpq_class.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // implicit: rationals embed integers
  Rational(long num, long den);
  explicit Rational(const mpq_class& v);

  /// Parses "p" or "p/q" with optional sign. Throws Error::Schema on junk.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }
  bool denominator_is_one() const { return v_.get_den() == 1; }

  /// "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;

private:
  mpq_class v_;
};

Rational rational_binomial(int n, int k);
Rational rational_factorial(int n);

}  // namespace supersplit
