#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace detcount {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i128 = __int128;

/// Input exceeds a configured size cap (sieve limit, counter cap, ...).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// mod_inverse called with gcd(a, m) != 1.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A fit was requested with fewer usable points than the minimum.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floor/ceil division with the sign convention of mathematical floor,
// valid for any signs of a with b != 0.
template <typename T>
constexpr T floor_div(T a, T b) {
  T q = a / b;
  T r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

template <typename T>
constexpr T ceil_div(T a, T b) {
  return -floor_div<T>(-a, b);
}

struct ExtGcd {
  i64 g;  // gcd, nonnegative
  i64 x;
  i64 y;  // a*x + b*y == g
};

/// Extended Euclid for any signed pair (not both zero).
ExtGcd ext_gcd(i64 a, i64 b);

/// Kahan-compensated accumulator; keeps grid sums reproducible across
/// evaluation orders that we fix lexicographically anyway.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

}  // namespace detcount
