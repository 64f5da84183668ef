#pragma once

#include <string>

#include "detcount/common.hpp"

namespace detcount {

/// Exact fraction with reduced 64-bit representation; denominator > 0.
/// Intermediate arithmetic runs in 128 bits and throws std::overflow_error
/// if a reduced result no longer fits.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(i64 value) : num_(value), den_(1) {}  // NOLINT(implicit)
  Rational(i64 num, i64 den);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  i64 floor() const { return floor_div(num_, den_); }
  i64 ceil() const { return ceil_div(num_, den_); }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q" with q > 0, e.g. "-3/2"; integers keep the "/1".
  std::string str() const;
  /// Inverse of str(); also accepts a bare integer.
  static Rational parse(const std::string& text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

 private:
  static Rational make_reduced(i128 num, i128 den);

  i64 num_ = 0;
  i64 den_ = 1;
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace detcount
