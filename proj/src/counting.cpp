#include "detcount/counting.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdlib>
#include <numeric>

namespace detcount::counting {

namespace {

using Clock = std::chrono::steady_clock;

i64 elapsed_ns(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

void require_positive_n(i64 N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::naive: return "naive";
    case Method::hyperbola: return "hyperbola";
    case Method::linear: return "linear";
    case Method::t_tilde: return "t_tilde";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "naive") return Method::naive;
  if (name == "hyperbola") return Method::hyperbola;
  if (name == "linear") return Method::linear;
  if (name == "t_tilde") return Method::t_tilde;
  return std::nullopt;
}

HyperbolaProfile build_hyperbola_profile(i64 N, i64 cap) {
  require_positive_n(N);
  if (N > cap) {
    throw CapacityError("build_hyperbola_profile: N " + std::to_string(N) +
                        " above cap " + std::to_string(cap));
  }
  HyperbolaProfile p;
  p.n_ = N;
  p.r_pos_.assign(static_cast<size_t>(N * N) + 1, 0);
  for (i64 d = 1; d <= N; ++d) {
    for (i64 e = 1; e <= N; ++e) ++p.r_pos_[static_cast<size_t>(d * e)];
  }
  for (auto& v : p.r_pos_) v *= 2;  // signs: (a,d) and (-a,-d)
  // Checksum: every pair (a,d) lands somewhere (negative products mirror).
  i64 total = p.r_zero();
  for (i64 m = 1; m <= p.limit(); ++m) total += 2 * p.r_pos_[static_cast<size_t>(m)];
  if (total != (2 * N + 1) * (2 * N + 1)) {
    throw std::logic_error("hyperbola profile checksum failed");
  }
  return p;
}

CountResult count_naive(i64 h, i64 N, const CounterCaps& caps) {
  require_positive_n(N);
  if (N > caps.naive) {
    throw CapacityError("count_naive: N " + std::to_string(N) + " above cap " +
                        std::to_string(caps.naive));
  }
  auto start = Clock::now();
  i64 count = 0;
  for (i64 a = -N; a <= N; ++a)
    for (i64 b = -N; b <= N; ++b)
      for (i64 c = -N; c <= N; ++c)
        for (i64 d = -N; d <= N; ++d)
          if (a * d - b * c == h) ++count;
  return {h, N, Method::naive, count, elapsed_ns(start)};
}

CountResult count_hyperbola(i64 h, i64 N, const HyperbolaProfile& profile) {
  require_positive_n(N);
  if (profile.n() != N) {
    throw std::invalid_argument("count_hyperbola: profile built for different N");
  }
  auto start = Clock::now();
  i64 ha = h >= 0 ? h : -h;  // T(h,N) = T(-h,N) via b <-> -b
  i64 L = profile.limit();
  i64 count = 0;
  if (ha == 0) {
    count = profile.r_zero() * profile.r_zero();
    for (i64 m = 1; m <= L; ++m) count += 2 * profile.r(m) * profile.r(m);
  } else if (ha <= 2 * N * N) {
    // Split bc = n, ad = n + h over n in [-N^2, N^2 - h]; same-sign pairs
    // mirror, opposite signs meet in the middle, zero products added once each.
    for (i64 n = 1; n + ha <= L; ++n) count += 2 * profile.r(n) * profile.r(n + ha);
    i64 lo = std::max<i64>(1, ha - L), hi = std::min<i64>(ha - 1, L);
    for (i64 j = lo; j <= hi; ++j) count += profile.r(j) * profile.r(ha - j);
    if (ha <= L) count += 2 * profile.r_zero() * profile.r(ha);
  }
  return {h, N, Method::hyperbola, count, elapsed_ns(start)};
}

i64 segment_solution_count(i64 a, i64 b, i64 h, i64 N) {
  require_positive_n(N);
  if (a == 0 && b == 0) {
    throw std::invalid_argument("segment_solution_count: (a, b) must not be (0, 0)");
  }
  if (a == 0) {  // -b*c = h, d free
    if (h % b != 0) return 0;
    i64 c = -(h / b);
    return std::abs(c) <= N ? 2 * N + 1 : 0;
  }
  if (b == 0) {  // a*d = h, c free
    if (h % a != 0) return 0;
    i64 d = h / a;
    return std::abs(d) <= N ? 2 * N + 1 : 0;
  }
  // a*d + (-b)*c = h; particular solution via extended gcd, then intersect
  // the two interval constraints on the step parameter t.
  ExtGcd e = ext_gcd(a, -b);
  if (h % e.g != 0) return 0;
  i64 k = h / e.g;
  i128 d0 = static_cast<i128>(e.x) * k;
  i128 c0 = static_cast<i128>(e.y) * k;
  i128 step_d = -b / e.g;  // d = d0 + step_d * t
  i128 step_c = -(a / e.g);  // c = c0 + step_c * t
  auto bounds = [N](i128 base, i128 step, i128& lo, i128& hi) {
    if (step > 0) {
      lo = ceil_div<i128>(-N - base, step);
      hi = floor_div<i128>(N - base, step);
    } else {
      lo = ceil_div<i128>(N - base, step);
      hi = floor_div<i128>(-N - base, step);
    }
  };
  i128 lo1, hi1, lo2, hi2;
  bounds(d0, step_d, lo1, hi1);
  bounds(c0, step_c, lo2, hi2);
  i128 lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
  if (hi < lo) return 0;
  return static_cast<i64>(hi - lo + 1);
}

CountResult count_linear(i64 h, i64 N, const CounterCaps& caps) {
  require_positive_n(N);
  if (N > caps.linear) {
    throw CapacityError("count_linear: N " + std::to_string(N) + " above cap " +
                        std::to_string(caps.linear));
  }
  auto start = Clock::now();
  i64 count = h == 0 ? (2 * N + 1) * (2 * N + 1) : 0;  // the (a,b) = (0,0) block
  for (i64 a = -N; a <= N; ++a) {
    for (i64 b = -N; b <= N; ++b) {
      if (a == 0 && b == 0) continue;
      count += segment_solution_count(a, b, h, N);
    }
  }
  return {h, N, Method::linear, count, elapsed_ns(start)};
}

CountResult count_zero_det(const HyperbolaProfile& profile) {
  auto start = Clock::now();
  i64 count = profile.r_zero() * profile.r_zero();
  for (i64 m = 1; m <= profile.limit(); ++m) count += 2 * profile.r(m) * profile.r(m);
  return {0, profile.n(), Method::hyperbola, count, elapsed_ns(start)};
}

CountResult count_zero_det(i64 N, const CounterCaps& caps) {
  HyperbolaProfile p = build_hyperbola_profile(N, caps.hyperbola);
  return count_zero_det(p);
}

i64 positive_product_correlation(i64 h, const HyperbolaProfile& profile) {
  if (h < 2) return 0;
  i64 L = profile.limit();
  i64 lo = std::max<i64>(1, h - L), hi = std::min<i64>(h - 1, L);
  i64 sum = 0;
  for (i64 j = lo; j <= hi; ++j) sum += profile.r(j) * profile.r(h - j);
  return sum;
}

std::shared_ptr<const HyperbolaProfile> AutoCounter::profile(i64 N) {
  std::lock_guard<std::mutex> lock(mu_);
  for (auto it = cache_.begin(); it != cache_.end(); ++it) {
    if (it->first == N) {
      cache_.splice(cache_.begin(), cache_, it);
      return cache_.front().second;
    }
  }
  auto p = std::make_shared<const HyperbolaProfile>(build_hyperbola_profile(N, caps_.hyperbola));
  cache_.emplace_front(N, p);
  if (cache_.size() > kMaxCachedProfiles) cache_.pop_back();
  return p;
}

CountResult AutoCounter::count(i64 h, i64 N, std::optional<Method> forced) {
  Method m;
  if (forced) {
    m = *forced;
  } else if (N <= caps_.hyperbola) {
    m = Method::hyperbola;
  } else if (N <= caps_.linear) {
    m = Method::linear;
  } else {
    throw CapacityError("AutoCounter: N " + std::to_string(N) + " above every cap");
  }
  switch (m) {
    case Method::naive:
      return count_naive(h, N, caps_);
    case Method::hyperbola:
      return count_hyperbola(h, N, *profile(N));
    case Method::linear:
      return count_linear(h, N, caps_);
    case Method::t_tilde:
      throw std::invalid_argument("AutoCounter: t_tilde is not an exact counter");
  }
  std::abort();
}

}  // namespace detcount::counting
