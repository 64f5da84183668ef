#pragma once

#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "detcount/common.hpp"

namespace detcount::counting {

/// Size caps for the exact counters; defaults fit desk-scale RAM/time.
struct CounterCaps {
  i64 naive = 15;        // (2N+1)^4 enumeration
  i64 hyperbola = 4096;  // N^2 * 4 bytes of profile memory
  i64 linear = 20000;    // (2N+1)^2 segment evaluations
};

enum class Method { naive, hyperbola, linear, t_tilde };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct CountResult {
  i64 h = 0;
  i64 N = 0;
  Method method = Method::naive;
  i64 count = 0;
  i64 elapsed_ns = 0;
};

/// R(m) = #{(a,d) in [-N,N]^2 : a*d = m}, positive side stored once,
/// R(-m) = R(m) by sign symmetry and R(0) = 4N + 1.
class HyperbolaProfile {
 public:
  i64 n() const { return n_; }
  i64 r_zero() const { return 4 * n_ + 1; }
  i64 limit() const { return n_ * n_; }

  i64 r(i64 m) const {
    if (m == 0) return r_zero();
    if (m < 0) m = -m;
    if (m > limit()) return 0;
    return r_pos_[static_cast<size_t>(m)];
  }

 private:
  friend HyperbolaProfile build_hyperbola_profile(i64 N, i64 cap);

  i64 n_ = 0;
  std::vector<u32> r_pos_;
};

HyperbolaProfile build_hyperbola_profile(i64 N, i64 cap = CounterCaps{}.hyperbola);

/// Exhaustive quadruple enumeration; the base oracle. N above caps.naive
/// raises CapacityError.
CountResult count_naive(i64 h, i64 N, const CounterCaps& caps = {});

/// Shifted autocorrelation of the hyperbola profile, O(N^2) per h.
CountResult count_hyperbola(i64 h, i64 N, const HyperbolaProfile& profile);

/// #{(c,d) in [-N,N]^2 : a*d - b*c = h} in O(log max(|a|,|b|)) via extended
/// gcd and exact interval intersection on the integer parameter.
i64 segment_solution_count(i64 a, i64 b, i64 h, i64 N);

/// Sums segment counts over all coefficient pairs; O(N^2 log N).
CountResult count_linear(i64 h, i64 N, const CounterCaps& caps = {});

/// Singular-matrix count T(0,N) = sum of R(n)^2.
CountResult count_zero_det(i64 N, const CounterCaps& caps = {});
CountResult count_zero_det(const HyperbolaProfile& profile);

/// sum_{j=1}^{h-1} R(j) R(h-j): the all-positive-products part of the
/// correlation, used by the positive-quadrant identity checks.
i64 positive_product_correlation(i64 h, const HyperbolaProfile& profile);

/// Dispatcher picking the fastest in-cap exact method, caching a few
/// hyperbola profiles. Thread-safe; profiles are immutable once built.
class AutoCounter {
 public:
  explicit AutoCounter(CounterCaps caps = {}) : caps_(caps) {}

  const CounterCaps& caps() const { return caps_; }

  CountResult count(i64 h, i64 N, std::optional<Method> forced = std::nullopt);

  std::shared_ptr<const HyperbolaProfile> profile(i64 N);

 private:
  static constexpr size_t kMaxCachedProfiles = 4;

  CounterCaps caps_;
  std::mutex mu_;
  std::list<std::pair<i64, std::shared_ptr<const HyperbolaProfile>>> cache_;
};

}  // namespace detcount::counting
