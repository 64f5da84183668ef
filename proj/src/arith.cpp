#include "detcount/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace detcount::arith {

DivisorTables build_tables(i64 limit, i64 max_limit) {
  if (limit < 1 || limit > max_limit) {
    throw CapacityError("build_tables: limit " + std::to_string(limit) +
                        " outside [1, " + std::to_string(max_limit) + "]");
  }
  DivisorTables t;
  t.limit_ = limit;
  size_t n = static_cast<size_t>(limit) + 1;
  t.spf_.assign(n, 0);
  t.phi_.assign(n, 0);
  t.mu_.assign(n, 0);
  t.tau_prime_.assign(n, 0);
  t.phi_[1] = 1;
  t.mu_[1] = 1;
  t.tau_prime_[1] = 1;
  for (i64 i = 2; i <= limit; ++i) {
    if (t.spf_[i] == 0) {
      t.spf_[i] = static_cast<u32>(i);
      t.phi_[i] = static_cast<u32>(i - 1);
      t.mu_[i] = -1;
      t.tau_prime_[i] = 2;
      t.primes_.push_back(static_cast<u32>(i));
    }
    for (u32 p : t.primes_) {
      if (p > t.spf_[i] || static_cast<i64>(p) * i > limit) break;
      i64 ip = static_cast<i64>(p) * i;
      t.spf_[ip] = p;
      if (p == t.spf_[i]) {
        t.phi_[ip] = t.phi_[i] * p;
        t.mu_[ip] = 0;
        t.tau_prime_[ip] = t.tau_prime_[i];
        break;
      }
      t.phi_[ip] = t.phi_[i] * (p - 1);
      t.mu_[ip] = static_cast<signed char>(-t.mu_[i]);
      t.tau_prime_[ip] = 2 * t.tau_prime_[i];
    }
  }
  return t;
}

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  std::vector<PrimePower> out;
  auto strip = [&](i64 p) {
    if (n % p != 0) return;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (i64 p = 5; p * p <= n; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<PrimePower> factorize(i64 n, const DivisorTables& tables) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  std::vector<PrimePower> out;
  while (n > 1 && n <= tables.limit()) {
    i64 p = tables.spf(n);
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    // Above the sieve: trial-divide by sieved primes, continue on the wheel
    // if the prime list runs out before sqrt(n).
    i64 last = 1;
    for (u32 p32 : tables.primes()) {
      i64 p = p32;
      if (p * p > n) break;
      last = p;
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    i64 p = std::max<i64>(last + 1, 2);
    for (; p * p <= n; ++p) {
      if (n % p != 0) continue;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    std::sort(out.begin(), out.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  }
  return out;
}

namespace {

std::vector<i64> divisors_from(const std::vector<PrimePower>& fac) {
  std::vector<i64> out{1};
  for (const auto& [p, e] : fac) {
    size_t base = out.size();
    i64 pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<i64> divisors(i64 n) {
  if (n < 1) throw std::domain_error("divisors: n must be positive");
  return divisors_from(factorize(n));
}

std::vector<i64> divisors(i64 n, const DivisorTables& tables) {
  if (n < 1) throw std::domain_error("divisors: n must be positive");
  return divisors_from(factorize(n, tables));
}

i64 sigma1(i64 n) {
  i64 s = 1;
  for (const auto& [p, e] : factorize(n)) {
    i64 term = 1, pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      term += pk;
    }
    s *= term;
  }
  return s;
}

Rational sigma_inv(i64 h) {
  if (h < 1) throw std::domain_error("sigma_inv: h must be positive");
  return Rational(sigma1(h), h);
}

i64 mod_inverse(i64 a, i64 m) {
  if (m < 1) throw std::domain_error("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  i64 ar = a % m;
  if (ar < 0) ar += m;
  ExtGcd e = ext_gcd(ar, m);
  if (e.g != 1) {
    throw NotInvertibleError("mod_inverse: gcd(" + std::to_string(a) + ", " +
                             std::to_string(m) + ") = " + std::to_string(e.g));
  }
  i64 t = e.x % m;
  if (t < 0) t += m;
  return t;
}

i64 ramanujan_sum(i64 y, i64 n) {
  if (y < 1) throw std::domain_error("ramanujan_sum: y must be positive");
  u64 na = n >= 0 ? static_cast<u64>(n) : static_cast<u64>(-(n + 1)) + 1;
  i64 g = static_cast<i64>(std::gcd(static_cast<u64>(y), na));
  if (g == 0) g = y;  // n == 0
  auto yfac = factorize(y);
  i64 total = 0;
  for (i64 d : divisors(g)) {
    // mu(y/d): square-free iff every prime of y has exponent <= v_p(d) + 1.
    int sign = 1;
    bool squarefree = true;
    for (const auto& [p, e] : yfac) {
      int vd = 0;
      i64 dd = d;
      while (dd % p == 0) {
        dd /= p;
        ++vd;
      }
      int rem = e - vd;
      if (rem >= 2) {
        squarefree = false;
        break;
      }
      if (rem == 1) sign = -sign;
    }
    if (squarefree) total += sign * d;
  }
  return total;
}

double sawtooth(double x) { return x - std::floor(x) - 0.5; }

double sawtooth(const Rational& x) {
  i64 r = x.num() % x.den();
  if (r < 0) r += x.den();
  return static_cast<double>(r) / static_cast<double>(x.den()) - 0.5;
}

FourierApprox sawtooth_fourier(double theta, double Q) {
  if (Q < 1.0) throw std::domain_error("sawtooth_fourier: Q must be >= 1");
  i64 K = static_cast<i64>(std::floor(Q));
  KahanSum sum;
  for (i64 k = 1; k <= K; ++k) {
    double kk = static_cast<double>(k);
    sum.add(-std::sin(2.0 * M_PI * kk * theta) / (M_PI * kk));
  }
  double dist = std::abs(theta - std::nearbyint(theta));
  double bound = dist == 0.0 ? 1.0 : std::min(1.0, 1.0 / (Q * dist));
  return {sum.value(), bound};
}

i64 coprime_residue_count(i64 u, i64 q, i64 r) {
  if (u < 1 || q < 1 || u % q != 0) {
    throw std::invalid_argument("coprime_residue_count: need 1 <= q | u");
  }
  i64 rq = r % q;
  if (rq < 0) rq += q;
  if (std::gcd(rq, q) != 1) {
    throw std::invalid_argument("coprime_residue_count: gcd(r, q) != 1");
  }
  // v runs over [1, u]; for u >= 2 this matches [1, u) since gcd(u, u) > 1,
  // and it keeps the phi(u)/phi(q) identity exact at u == 1.
  i64 count = 0;
  for (i64 v = rq == 0 ? q : rq; v <= u; v += q) {
    if (std::gcd(v, u) == 1) ++count;
  }
  return count;
}

i64 coprime_range_count(i64 Y, i64 X, i64 q) {
  if (Y < 1 || X < 1 || q < 1) {
    throw std::invalid_argument("coprime_range_count: arguments must be positive");
  }
  // Count n in [Y, Y + X - 1] with gcd(n, q) == 1.
  i64 lo = Y - 1, hi = Y + X - 1;
  auto fac = factorize(q);
  std::vector<i64> ps;
  ps.reserve(fac.size());
  for (const auto& [p, e] : fac) ps.push_back(p);
  i64 count = 0;
  size_t subsets = static_cast<size_t>(1) << ps.size();
  for (size_t mask = 0; mask < subsets; ++mask) {
    i64 d = 1;
    int sign = 1;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (mask & (static_cast<size_t>(1) << i)) {
        d *= ps[i];
        sign = -sign;
      }
    }
    count += sign * (hi / d - lo / d);
  }
  return count;
}

i64 gcd_sum(i64 m, i64 M) {
  if (m < 1 || M < 1) throw std::invalid_argument("gcd_sum: arguments must be positive");
  i64 s = 0;
  for (i64 y = 1; y <= M; ++y) s += std::gcd(y, m);
  return s;
}

}  // namespace detcount::arith
