#include "detcount/rational.hpp"

#include <limits>

namespace detcount {

namespace {

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr i128 kMin64 = std::numeric_limits<i64>::min();
constexpr i128 kMax64 = std::numeric_limits<i64>::max();

}  // namespace

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Rational::Rational(i64 num, i64 den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  Rational r = make_reduced(num, den);
  num_ = r.num_;
  den_ = r.den_;
}

Rational Rational::make_reduced(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num < kMin64 || num > kMax64 || den > kMax64) {
    throw std::overflow_error("Rational: value out of 64-bit range");
  }
  Rational r;
  r.num_ = static_cast<i64>(num);
  r.den_ = static_cast<i64>(den);
  return r;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(text));
    }
    i64 n = std::stoll(text.substr(0, slash));
    i64 d = std::stoll(text.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::domain_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("Rational::parse: bad fraction '" + text + "'");
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::make_reduced(
      static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
      static_cast<i128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make_reduced(static_cast<i128>(a.num_) * b.num_,
                                static_cast<i128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return Rational::make_reduced(static_cast<i128>(a.num_) * b.den_,
                                static_cast<i128>(a.den_) * b.num_);
}

}  // namespace detcount
