#include "detcount/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "detcount/arith.hpp"
#include "detcount/counting.hpp"

namespace detcount::decomposition {

namespace {

void require_coprime(i64 u, i64 v) {
  if (u < 1 || v < 1 || std::gcd(u, v) != 1) {
    throw std::invalid_argument("u, v must be coprime positive integers");
  }
}

// Residue of -n v^{-1} mod u, in [0, u).
i64 target_residue(i64 u, i64 v, i64 n) {
  if (u == 1) return 0;
  i64 vin = arith::mod_inverse(v % u, u);
  i64 nm = n % u;
  if (nm < 0) nm += u;
  i64 rho = static_cast<i64>((static_cast<i128>(u - nm) * vin) % u);
  return rho % u;
}

// #{y in [lo, hi] : y == rho (mod u)}.
i64 residues_in_range(i64 lo, i64 hi, i64 rho, i64 u) {
  if (hi < lo) return 0;
  return floor_div(hi - rho, u) - floor_div(lo - 1 - rho, u);
}

}  // namespace

i64 line_count(i64 u, i64 v, i64 n, i64 N) {
  require_coprime(u, v);
  return counting::segment_solution_count(u, v, n, N);
}

i64 progression_count(i64 u, i64 v, i64 n, i64 N) {
  require_coprime(u, v);
  i64 rho = target_residue(u, v, n);
  return residues_in_range(-N, N, rho, u);
}

i64 progression_tail(i64 u, i64 v, i64 n, i64 N) {
  require_coprime(u, v);
  i64 rho = target_residue(u, v, n);
  i64 lo = floor_div(N * u - n, v) + 1;  // y > (Nu - n)/v
  return residues_in_range(std::max(lo, -N), N, rho, u);
}

ProgressionCell make_progression_cell(i64 h, i64 d, i64 u, i64 v, i64 N) {
  if (h < 1 || d < 1 || h % d != 0 || d > N) {
    throw std::invalid_argument("make_progression_cell: need d | h and d <= N");
  }
  if (!(1 <= v && v < u && u * d <= N)) {
    throw std::invalid_argument("make_progression_cell: need 1 <= v < u <= N/d");
  }
  require_coprime(u, v);
  i64 n = h / d;
  return {d, u, v, n, line_count(u, v, n, N), progression_count(u, v, n, N)};
}

i64 t_tilde(i64 h, i64 N) {
  if (N < 1) throw std::invalid_argument("t_tilde: N must be positive");
  if (h < 1 || h > 2 * N * N) {
    throw std::domain_error("t_tilde: need 1 <= h <= 2N^2");
  }
  i64 sum = 0;
  for (i64 d : arith::divisors(h)) {
    if (d > N) break;
    i64 n = h / d;
    i64 umax = N / d;
    for (i64 u = 2; u <= umax; ++u) {
      i64 nm = n % u;
      for (i64 v = 1; v < u; ++v) {
        if (std::gcd(u, v) != 1) continue;
        i64 vin = arith::mod_inverse(v, u);
        i64 rho = static_cast<i64>((static_cast<i128>(u - nm) * vin) % u) % u;
        sum += residues_in_range(-N, N, rho, u);
      }
    }
  }
  return 8 * sum;
}

SolutionLine solution_line(i64 x, i64 y, i64 m, i64 N) {
  if (x < 1 || y < 1 || m < 1 || N < 1) {
    throw std::invalid_argument("solution_line: arguments must be positive");
  }
  if (std::gcd(x, y) != 1) {
    throw std::invalid_argument("solution_line: x, y must be coprime");
  }
  SolutionLine line;
  line.x = x;
  line.y = y;
  line.m = m;
  line.n_bound = N;
  if (y == 1) {
    line.b0 = 1;
    line.d0 = m - x;
  } else {
    i64 xin = arith::mod_inverse(x % y, y);
    i64 b0 = static_cast<i64>((static_cast<i128>(m % y) * xin) % y);
    if (b0 == 0) b0 = y;  // b0 lives in [1, y], not [0, y)
    line.b0 = b0;
    i64 rem = m - b0 * x;
    if (rem % y != 0) throw std::logic_error("solution_line: base solution not integral");
    line.d0 = rem / y;
  }
  line.lower = max(Rational(1 - line.b0, y), Rational(line.d0 - N, x));
  line.upper = min(Rational(N - line.b0, y), Rational(line.d0 - 1, x));
  return line;
}

i64 admissible_count(const SolutionLine& line) {
  if (line.upper < line.lower) return 0;
  i64 by_floor = line.upper.floor() - line.lower.floor() + (line.lower.is_integer() ? 1 : 0);
  // Independent route: scan from the ceiling.
  i64 by_scan = 0;
  for (i64 k = line.lower.ceil(); k <= line.upper.floor(); ++k) ++by_scan;
  if (by_floor != by_scan) {
    throw std::logic_error("admissible_count: floor formula disagrees with scan");
  }
  return by_floor;
}

i64 positive_solution_count(i64 x, i64 y, i64 m, i64 N) {
  return admissible_count(solution_line(x, y, m, N));
}

double triangle_sum(double X) {
  if (X < 1.0) throw std::domain_error("triangle_sum: X must be >= 1");
  i64 H = static_cast<i64>(std::floor(X));
  KahanSum basel;
  for (i64 n = 1; n <= H; ++n) {
    double nn = static_cast<double>(n);
    basel.add(1.0 / (nn * nn));
  }
  return 2.0 * static_cast<double>(H) - X * basel.value();
}

double triangle_sum_direct(double X) {
  if (X < 1.0) throw std::domain_error("triangle_sum_direct: X must be >= 1");
  i64 H = static_cast<i64>(std::floor(X));
  KahanSum sum;
  for (i64 x = 1; x <= H; ++x) {
    for (i64 y = std::max<i64>(1, H - x + 1); y <= H; ++y) {
      sum.add((static_cast<double>(x + y) - X) /
              (static_cast<double>(x) * static_cast<double>(y)));
    }
  }
  return sum.value();
}

double coprime_main_sum(i64 h, i64 N) {
  if (N < 1) throw std::invalid_argument("coprime_main_sum: N must be positive");
  if (h < 1 || h > 2 * N * N) {
    throw std::domain_error("coprime_main_sum: need 1 <= h <= 2N^2");
  }
  KahanSum total;
  for (i64 r : arith::divisors(h)) {
    if (r > N) break;
    i64 mfloor = N / r;
    double dn = static_cast<double>(N);
    for (i64 x = 1; x <= mfloor; ++x) {
      // y > N/r - x, exactly: y >= floor(N/r) - x + 1 (strict even when r | N).
      for (i64 y = std::max<i64>(1, mfloor - x + 1); y <= mfloor; ++y) {
        if (std::gcd(x, y) != 1) continue;
        i64 num = r * (x + y) - N;  // N(x + y - N/r) = N * num / r, positive here
        total.add(dn * static_cast<double>(num) /
                  (static_cast<double>(r) * static_cast<double>(x) * static_cast<double>(y)));
      }
    }
  }
  return total.value();
}

SawtoothSums sawtooth_sums(i64 h, i64 N, i64 r) {
  if (h < 1 || N < 1 || r < 1 || h % r != 0 || r > N) {
    throw std::invalid_argument("sawtooth_sums: need r | h and r <= N");
  }
  SawtoothSums out;
  out.h = h;
  out.N = N;
  out.r = r;
  out.m = h / r;
  out.M = Rational(N, r);
  i64 mfloor = N / r;
  KahanSum psi_upper, psi_lower;
  for (i64 x = 1; x <= mfloor; ++x) {
    for (i64 y = std::max<i64>(1, mfloor - x + 1); y <= mfloor; ++y) {
      if (std::gcd(x, y) != 1) continue;
      SolutionLine line = solution_line(x, y, out.m, N);
      psi_upper.add(arith::sawtooth(line.upper));
      psi_lower.add(arith::sawtooth(line.lower));
      if (line.lower.is_integer()) ++out.integer_lower_count;
      ++out.pair_count;
    }
  }
  out.sum_psi_upper = psi_upper.value();
  out.sum_psi_lower = psi_lower.value();
  return out;
}

}  // namespace detcount::decomposition
