#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detcount/asymptotics.hpp"
#include "detcount/common.hpp"
#include "detcount/counting.hpp"
#include "detcount/decomposition.hpp"

namespace detcount::harness::suites {

struct SuiteCheck {
  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::string first_violation;
  std::vector<std::pair<std::string, double>> metrics;

  bool ok() const { return failed == 0; }
};

// ---- exact lemma identities and bounds -----------------------------------

/// Residues coprime to u in a fixed class mod q: direct count vs phi(u)/phi(q).
SuiteCheck coprime_residue_identity(i64 max_u = 2000, int r_per_cell = 20, u64 seed = 0);

/// #{t in units(y) : t m == z (mod y)} <= gcd(y, m).
SuiteCheck unit_congruence_bound(i64 max_y = 1000, int samples_per_y = 20, u64 seed = 0);

/// Divisor identity vs direct exponential sum, plus the divisor-sum bound.
SuiteCheck ramanujan_identity(i64 max_y = 500, i64 max_abs_n = 500);

/// |coprime_range_count - phi(q) X / q| <= tau'(q), exact integer compare.
SuiteCheck coprime_range_error(int tuples = 10000, i64 max_Y = 1'000'000,
                               i64 max_X = 10'000, i64 max_q = 1'000'000, u64 seed = 0);

/// Monitored: fitted C with sum_{y<=M} gcd(y,m) <= C M m^eps.
SuiteCheck gcd_sum_growth(int samples = 200, i64 max_m = 1'000'000, i64 max_M = 10'000,
                          double eps = 0.1, u64 seed = 0);

/// |psi - truncated Fourier sum| <= constant * bound on a random sample.
SuiteCheck sawtooth_fourier_bound(int samples = 100000, double max_Q = 512.0,
                                  double constant = 2.0, u64 seed = 0);

/// |triangle_sum(X) - (2 - zeta(2)) X| <= constant for every integer X.
SuiteCheck triangle_linear_bound(i64 max_X = 10000, double constant = 2.0);

// ---- structural identities -------------------------------------------------

SuiteCheck counters_agree_exhaustive(i64 max_N = 6);
SuiteCheck counters_agree_random(int cells = 50, i64 min_N = 10, i64 max_N = 300,
                                 u64 seed = 0);

/// Three-regime invariants of the progression relaxation, exhaustive plus
/// random cells; the middle regime re-counts the tail exactly.
SuiteCheck progression_regimes(i64 max_h = 50, i64 max_N = 10, int random_cells = 10000,
                               u64 seed = 0);

/// nullopt when the line satisfies all its structural invariants, else a
/// description of the first violation.
std::optional<std::string> validate_solution_line(const decomposition::SolutionLine& line);

/// Floor-formula count == direct (b, d) count on every coprime pair with
/// x + y > m/N, with line invariants and the upper-endpoint observation.
SuiteCheck interval_count_identity(i64 max_m = 400, i64 max_N = 20);

/// O(X) and O(X^2) triangle-sum routes agree to 1e-9 relative.
SuiteCheck triangle_routes_agree(i64 exhaustive_X = 1000, int sampled = 8,
                                 i64 max_X = 10000, u64 seed = 0);

/// 4 * sum of line counts over divisor-scaled coprime pairs equals the
/// positive part of the profile correlation.
SuiteCheck positive_quadrant_identity(i64 max_h = 60, i64 max_N = 12,
                                      int random_cells = 25, u64 seed = 0);

SuiteCheck closed_form_cells(i64 max_N = 50);
SuiteCheck symmetry_and_monotonicity(u64 seed = 0);
SuiteCheck error_difference_identity();

// ---- monitored asymptotic constants ---------------------------------------

/// max |t_tilde - T| / (N^0.1 (h + N)) over a grid of cells.
SuiteCheck progression_approx_ratio(std::span<const asymptotics::GridCell> cells,
                                    counting::AutoCounter& counter);

/// Fit of |coprime_main_sum - (2/zeta(2) - 1) N^2 sigma_inv(h)| against N.
SuiteCheck main_sum_error_fit(std::span<const asymptotics::GridCell> cells,
                              double exponent_cap = 1.2);

/// Fitted constants of the boundary saw-tooth and integer-endpoint sums
/// at h = N^2, r = 1.
SuiteCheck boundary_sum_constants(std::span<const i64> Ns);

std::vector<SuiteCheck> run_lemma_suites(u64 seed = 0);
std::vector<SuiteCheck> run_identity_suites(u64 seed = 0);

}  // namespace detcount::harness::suites
