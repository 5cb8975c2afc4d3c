#include "supersplit/rational.hpp"

#include <cctype>

#include "supersplit/error.hpp"

namespace supersplit {

Rational::Rational(long num, long den) {
  if (den == 0) fail(Error::Kind::Schema, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  if (sgn(v_.get_den()) == 0) fail(Error::Kind::Schema, "rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) fail(Error::Kind::Schema, "empty rational literal");
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) fail(Error::Kind::Schema, "empty rational literal");
  auto check_int = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      if (!check_int(t, true)) fail(Error::Kind::Schema, "bad rational literal: " + text);
      return Rational(mpq_class(mpz_class(t)));
    }
    std::string num = t.substr(0, slash);
    std::string den = t.substr(slash + 1);
    if (!check_int(num, true) || !check_int(den, false) || den.find('/') != std::string::npos)
      fail(Error::Kind::Schema, "bad rational literal: " + text);
    mpz_class d(den);
    if (sgn(d) == 0) fail(Error::Kind::Schema, "zero denominator in: " + text);
    return Rational(mpq_class(mpz_class(num), d));
  } catch (const std::invalid_argument&) {
    fail(Error::Kind::Schema, "bad rational literal: " + text);
  }
}

Rational Rational::abs() const {
  Rational r = *this;
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(Error::Kind::Schema, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  if (denominator_is_one()) return numerator_str();
  return numerator_str() + "/" + denominator_str();
}

Rational rational_binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

Rational rational_factorial(int n) {
  if (n < 0) fail(Error::Kind::Schema, "factorial of negative integer");
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(r));
}

}  // namespace supersplit
