#pragma once

#include "detcount/common.hpp"
#include "detcount/rational.hpp"

namespace detcount::decomposition {

/// One (d, u, v) cell of the progression decomposition of T(h, N):
/// exact_count = #{(x,y) in [-N,N]^2 : ux - vy = n} and relaxed_count keeps
/// only the residue condition on y.
struct ProgressionCell {
  i64 d = 0;  // divisor of h, d <= N
  i64 u = 0;
  i64 v = 0;  // coprime, 1 <= v < u <= N/d
  i64 n = 0;  // h / d
  i64 exact_count = 0;
  i64 relaxed_count = 0;
};

/// #{(x,y) in [-N,N]^2 : ux - vy = n}. Requires gcd(u, v) = 1.
i64 line_count(i64 u, i64 v, i64 n, i64 N);

/// #{y in [-N,N] : y == -n v^{-1} (mod u)}. Requires gcd(u, v) = 1.
i64 progression_count(i64 u, i64 v, i64 n, i64 N);

/// #{y in ((Nu - n)/v, N] : y == -n v^{-1} (mod u)}: the y lost when the
/// x-range constraint is dropped. Equals relaxed - exact whenever
/// n <= N(u + v).
i64 progression_tail(i64 u, i64 v, i64 n, i64 N);

ProgressionCell make_progression_cell(i64 h, i64 d, i64 u, i64 v, i64 N);

/// The uniformized approximant: 8 * sum over d | h, d <= N and coprime
/// 1 <= v < u <= N/d of the relaxed progression count at n = h/d.
/// Requires 1 <= h <= 2N^2.
i64 t_tilde(i64 h, i64 N);

/// Base solution and admissible-parameter interval of b x + d y = m over
/// b, d in [1, N], for coprime x, y. b = b0 + k y, d = d0 - k x with
/// k in [lower, upper].
struct SolutionLine {
  i64 x = 0;
  i64 y = 0;
  i64 m = 0;
  i64 n_bound = 0;  // N
  i64 b0 = 0;       // in [1, y]
  i64 d0 = 0;
  Rational lower;   // max{(1-b0)/y, (d0-N)/x}
  Rational upper;   // min{(N-b0)/y, (d0-1)/x}
};

SolutionLine solution_line(i64 x, i64 y, i64 m, i64 N);

/// #([lower, upper] ∩ Z) by the floor formula, cross-checked against a
/// direct scan that also re-verifies each k lands in [1,N]^2.
i64 admissible_count(const SolutionLine& line);

/// #{(b,d) in [1,N]^2 : b x + d y = m} through the solution line.
i64 positive_solution_count(i64 x, i64 y, i64 m, i64 N);

/// sum over 1 <= x, y <= X with x + y > X of (x + y - X)/(x y),
/// by the O(X) harmonic rearrangement. X < 1 is a domain error.
double triangle_sum(double X);
/// Same value by the O(X^2) double loop; the independent route.
double triangle_sum_direct(double X);

/// Exact evaluation of the main-term double sum:
/// sum over divisors r | h, r <= N and coprime x, y <= N/r with
/// x + y > N/r of N(x + y - N/r)/(x y). Requires 1 <= h <= 2N^2.
double coprime_main_sum(i64 h, i64 N);

/// Boundary sums over coprime x, y <= M = N/r with x + y > M, one
/// solution line per pair. Accumulation order is lexicographic in (x, y)
/// with compensated summation.
struct SawtoothSums {
  i64 h = 0;
  i64 N = 0;
  i64 r = 0;  // divisor of h, r <= N
  i64 m = 0;  // h / r
  Rational M;           // N / r
  double sum_psi_upper = 0.0;   // sum of psi(V)
  double sum_psi_lower = 0.0;   // sum of psi(U)
  i64 integer_lower_count = 0;  // sum of 1_Z(U)
  i64 pair_count = 0;
};

SawtoothSums sawtooth_sums(i64 h, i64 N, i64 r);

}  // namespace detcount::decomposition
