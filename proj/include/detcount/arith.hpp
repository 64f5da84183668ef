#pragma once

#include <vector>

#include "detcount/common.hpp"
#include "detcount/rational.hpp"

namespace detcount::arith {

inline constexpr i64 kDefaultTableCap = 100'000'000;

/// Sieve-built tables of multiplicative functions up to a fixed limit.
/// Immutable after construction, safe to share across threads.
class DivisorTables {
 public:
  i64 limit() const { return limit_; }

  /// Smallest prime factor, n in [2, limit].
  i64 spf(i64 n) const { return spf_[static_cast<size_t>(n)]; }
  /// Euler totient, n in [1, limit].
  i64 phi(i64 n) const { return phi_[static_cast<size_t>(n)]; }
  /// Moebius function, n in [1, limit].
  int mu(i64 n) const { return mu_[static_cast<size_t>(n)]; }
  /// Number of square-free divisors, n in [1, limit].
  i64 tau_prime(i64 n) const { return tau_prime_[static_cast<size_t>(n)]; }

  const std::vector<u32>& primes() const { return primes_; }

 private:
  friend DivisorTables build_tables(i64 limit, i64 max_limit);

  i64 limit_ = 0;
  std::vector<u32> spf_;
  std::vector<u32> phi_;
  std::vector<signed char> mu_;
  std::vector<u32> tau_prime_;
  std::vector<u32> primes_;
};

/// One linear sieve pass. Throws CapacityError for limit == 0 or above cap.
DivisorTables build_tables(i64 limit, i64 max_limit = kDefaultTableCap);

struct PrimePower {
  i64 prime;
  int exp;
};

/// Deterministic factorization by 2/3 + 6k+-1 wheel trial division.
std::vector<PrimePower> factorize(i64 n);
/// Uses tables.spf below the sieve limit, trial division above it.
std::vector<PrimePower> factorize(i64 n, const DivisorTables& tables);

/// All divisors of n, ascending. n == 0 is a domain error.
std::vector<i64> divisors(i64 n);
std::vector<i64> divisors(i64 n, const DivisorTables& tables);

/// Sum of divisors of n.
i64 sigma1(i64 n);

/// Exact sum of reciprocals of the divisors of h, i.e. sigma1(h)/h reduced.
Rational sigma_inv(i64 h);

/// t in [0, m) with a*t == 1 (mod m); m == 1 yields 0.
/// Throws NotInvertibleError when gcd(a, m) != 1.
i64 mod_inverse(i64 a, i64 m);

/// Ramanujan sum c_y(n) via the divisor identity sum_{d | gcd(n,y)} d * mu(y/d).
i64 ramanujan_sum(i64 y, i64 n);

/// psi(x) = x - floor(x) - 1/2, values in [-1/2, 1/2).
double sawtooth(double x);
/// Same, evaluated exactly on a rational before the single float division.
double sawtooth(const Rational& x);

struct FourierApprox {
  double approx;  // truncated Fourier sum, real by conjugate pairing
  double bound;   // min{1, 1/(Q*||theta||)}, 1 when ||theta|| == 0
};

/// Truncated Fourier expansion of the saw-tooth function up to frequency Q.
/// Throws std::domain_error for Q < 1.
FourierApprox sawtooth_fourier(double theta, double Q);

/// #{v in [1,u], gcd(v,u) = 1, v == r (mod q)} by direct count.
/// Requires q | u and gcd(r, q) = 1; equals phi(u)/phi(q).
i64 coprime_residue_count(i64 u, i64 q, i64 r);

/// #{n in [Y, Y+X) : gcd(n, q) = 1} by Moebius inclusion-exclusion over the
/// square-free divisors of q (no loop over the interval).
i64 coprime_range_count(i64 Y, i64 X, i64 q);

/// sum_{1 <= y <= M} gcd(y, m).
i64 gcd_sum(i64 m, i64 M);

}  // namespace detcount::arith
