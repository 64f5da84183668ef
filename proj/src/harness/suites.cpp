#include "detcount/harness/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "detcount/arith.hpp"

namespace detcount::harness::suites {

namespace {

template <typename... Args>
std::string tuple_str(Args&&... args) {
  std::ostringstream os;
  ((os << args << ' '), ...);
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

void fail(SuiteCheck& check, const std::string& violation) {
  if (check.failed == 0) check.first_violation = violation;
  ++check.failed;
}

SuiteCheck make_check(std::string name) {
  SuiteCheck check;
  check.name = std::move(name);
  return check;
}

}  // namespace

SuiteCheck coprime_residue_identity(i64 max_u, int r_per_cell, u64 seed) {
  SuiteCheck check = make_check("coprime_residue_identity");
  auto tables = arith::build_tables(max_u);
  std::mt19937_64 rng(seed);
  for (i64 u = 1; u <= max_u; ++u) {
    for (i64 q : arith::divisors(u, tables)) {
      int draws = q == 1 ? 1 : r_per_cell;  // q = 1 forces r = 1
      for (int i = 0; i < draws; ++i) {
        i64 r = 1;
        while (true) {
          r = static_cast<i64>(rng() % static_cast<u64>(q)) + 1;
          if (std::gcd(r, q) == 1) break;
        }
        ++check.checked;
        i64 direct = arith::coprime_residue_count(u, q, r);
        i64 expected = tables.phi(u) / tables.phi(q);
        if (direct != expected || tables.phi(u) % tables.phi(q) != 0) {
          fail(check, tuple_str("u", u, "q", q, "r", r, "direct", direct, "phi-ratio",
                                expected));
        }
      }
    }
  }
  return check;
}

SuiteCheck unit_congruence_bound(i64 max_y, int samples_per_y, u64 seed) {
  SuiteCheck check = make_check("unit_congruence_bound");
  std::mt19937_64 rng(seed);
  std::vector<char> unit;
  for (i64 y = 1; y <= max_y; ++y) {
    unit.assign(static_cast<size_t>(y) + 1, 0);
    for (i64 t = 1; t <= y; ++t) unit[static_cast<size_t>(t)] = std::gcd(t, y) == 1;
    for (int i = 0; i < samples_per_y; ++i) {
      i64 m = static_cast<i64>(rng() % 10000) + 1;
      i64 z = static_cast<i64>(rng() % static_cast<u64>(y)) + 1;
      i64 count = 0;
      for (i64 t = 1; t <= y; ++t) {
        if (unit[static_cast<size_t>(t)] && (t * m - z) % y == 0) ++count;
      }
      ++check.checked;
      if (count > std::gcd(y, m)) {
        fail(check, tuple_str("y", y, "m", m, "z", z, "count", count, "gcd",
                              std::gcd(y, m)));
      }
    }
  }
  return check;
}

SuiteCheck ramanujan_identity(i64 max_y, i64 max_abs_n) {
  SuiteCheck check = make_check("ramanujan_identity");
  double max_residual = 0.0;
  std::vector<double> cos_t, sin_t;
  std::vector<i64> units;
  for (i64 y = 1; y <= max_y; ++y) {
    cos_t.resize(static_cast<size_t>(y));
    sin_t.resize(static_cast<size_t>(y));
    for (i64 k = 0; k < y; ++k) {
      double ang = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(y);
      cos_t[static_cast<size_t>(k)] = std::cos(ang);
      sin_t[static_cast<size_t>(k)] = std::sin(ang);
    }
    units.clear();
    for (i64 t = 1; t <= y; ++t) {
      if (std::gcd(t, y) == 1) units.push_back(t % y);
    }
    for (i64 n = -max_abs_n; n <= max_abs_n; ++n) {
      i64 idx = ((n % y) + y) % y;
      KahanSum re, im;
      for (i64 t : units) {
        i64 k = (idx * t) % y;
        re.add(cos_t[static_cast<size_t>(k)]);
        im.add(sin_t[static_cast<size_t>(k)]);
      }
      i64 identity = arith::ramanujan_sum(y, n);
      double residual = std::hypot(re.value() - static_cast<double>(identity), im.value());
      max_residual = std::max(max_residual, residual);
      i64 rounded = static_cast<i64>(std::llround(re.value()));
      i64 g = n == 0 ? y : std::gcd(y, std::abs(n));
      i64 bound = arith::sigma1(g);
      ++check.checked;
      if (rounded != identity || residual > 1e-6 || std::abs(identity) > bound) {
        fail(check, tuple_str("y", y, "n", n, "identity", identity, "direct", re.value(),
                              "residual", residual));
      }
    }
  }
  check.metrics.emplace_back("max_residual", max_residual);
  return check;
}

SuiteCheck coprime_range_error(int tuples, i64 max_Y, i64 max_X, i64 max_q, u64 seed) {
  SuiteCheck check = make_check("coprime_range_error");
  auto tables = arith::build_tables(max_q);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < tuples; ++i) {
    i64 Y = static_cast<i64>(rng() % static_cast<u64>(max_Y)) + 1;
    i64 X = static_cast<i64>(rng() % static_cast<u64>(max_X)) + 1;
    i64 q = static_cast<i64>(rng() % static_cast<u64>(max_q)) + 1;
    i64 count = arith::coprime_range_count(Y, X, q);
    // |count - phi(q) X / q| <= tau'(q), cleared of the division.
    i128 lhs = static_cast<i128>(count) * q - static_cast<i128>(tables.phi(q)) * X;
    if (lhs < 0) lhs = -lhs;
    i128 rhs = static_cast<i128>(tables.tau_prime(q)) * q;
    ++check.checked;
    if (lhs > rhs) fail(check, tuple_str("Y", Y, "X", X, "q", q, "count", count));
  }
  return check;
}

SuiteCheck gcd_sum_growth(int samples, i64 max_m, i64 max_M, double eps, u64 seed) {
  SuiteCheck check = make_check("gcd_sum_growth");
  std::mt19937_64 rng(seed);
  double cmax = 0.0;
  for (int i = 0; i < samples; ++i) {
    i64 m = static_cast<i64>(rng() % static_cast<u64>(max_m)) + 1;
    i64 M = static_cast<i64>(rng() % static_cast<u64>(max_M)) + 1;
    double ratio = static_cast<double>(arith::gcd_sum(m, M)) /
                   (static_cast<double>(M) * std::pow(static_cast<double>(m), eps));
    cmax = std::max(cmax, ratio);
    ++check.checked;
  }
  check.metrics.emplace_back("fitted_C", cmax);
  check.metrics.emplace_back("eps", eps);
  return check;
}

SuiteCheck sawtooth_fourier_bound(int samples, double max_Q, double constant, u64 seed) {
  SuiteCheck check = make_check("sawtooth_fourier_bound");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> theta_dist(-2.0, 3.0);
  std::uniform_real_distribution<double> logq_dist(0.0, std::log(max_Q));
  double max_ratio = 0.0;
  for (int i = 0; i < samples; ++i) {
    double theta = theta_dist(rng);
    double Q = std::exp(logq_dist(rng));
    auto [approx, bound] = arith::sawtooth_fourier(theta, Q);
    double err = std::abs(arith::sawtooth(theta) - approx);
    max_ratio = std::max(max_ratio, err / bound);
    ++check.checked;
    if (err > constant * bound) {
      fail(check, tuple_str("theta", theta, "Q", Q, "err", err, "bound", bound));
    }
  }
  check.metrics.emplace_back("max_ratio", max_ratio);
  check.metrics.emplace_back("constant", constant);
  return check;
}

SuiteCheck triangle_linear_bound(i64 max_X, double constant) {
  SuiteCheck check = make_check("triangle_linear_bound");
  double slope = 2.0 - asymptotics::zeta2();
  KahanSum basel;
  double max_dev = 0.0;
  for (i64 X = 1; X <= max_X; ++X) {
    double x = static_cast<double>(X);
    basel.add(1.0 / (x * x));
    double s = 2.0 * x - x * basel.value();  // triangle_sum at integer X
    double dev = std::abs(s - slope * x);
    max_dev = std::max(max_dev, dev);
    ++check.checked;
    if (dev > constant) fail(check, tuple_str("X", X, "deviation", dev));
  }
  check.metrics.emplace_back("max_deviation", max_dev);
  return check;
}

SuiteCheck counters_agree_exhaustive(i64 max_N) {
  SuiteCheck check = make_check("counters_agree_exhaustive");
  counting::CounterCaps caps;
  caps.naive = std::max(caps.naive, max_N);
  for (i64 N = 1; N <= max_N; ++N) {
    auto profile = counting::build_hyperbola_profile(N);
    for (i64 h = 1; h <= 2 * N * N; ++h) {
      i64 a = counting::count_naive(h, N, caps).count;
      i64 b = counting::count_hyperbola(h, N, profile).count;
      i64 c = counting::count_linear(h, N).count;
      ++check.checked;
      if (a != b || a != c) {
        fail(check, tuple_str("h", h, "N", N, "naive", a, "hyperbola", b, "linear", c));
      }
    }
  }
  return check;
}

SuiteCheck counters_agree_random(int cells, i64 min_N, i64 max_N, u64 seed) {
  SuiteCheck check = make_check("counters_agree_random");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cells; ++i) {
    i64 N = min_N + static_cast<i64>(rng() % static_cast<u64>(max_N - min_N + 1));
    i64 h = 1 + static_cast<i64>(rng() % static_cast<u64>(2 * N * N));
    auto profile = counting::build_hyperbola_profile(N);
    i64 a = counting::count_hyperbola(h, N, profile).count;
    i64 b = counting::count_linear(h, N).count;
    ++check.checked;
    if (a != b) fail(check, tuple_str("h", h, "N", N, "hyperbola", a, "linear", b));
  }
  return check;
}

namespace {

bool progression_cell_ok(i64 u, i64 v, i64 n, i64 N, std::string* why) {
  i64 exact = decomposition::line_count(u, v, n, N);
  i64 relaxed = decomposition::progression_count(u, v, n, N);
  if (relaxed < exact) {
    *why = tuple_str("relaxed<exact", "u", u, "v", v, "n", n, "N", N);
    return false;
  }
  if (n < N * (u - v) && relaxed != exact) {
    *why = tuple_str("low-regime inequality", "u", u, "v", v, "n", n, "N", N);
    return false;
  }
  if (n > N * (u + v)) {
    if (exact != 0 || std::abs(relaxed * u - 2 * N) > 5 * u) {
      *why = tuple_str("high-regime", "u", u, "v", v, "n", n, "N", N, "exact", exact,
                       "relaxed", relaxed);
      return false;
    }
  } else if (n >= N * (u - v)) {
    i64 tail = decomposition::progression_tail(u, v, n, N);
    if (relaxed - exact != tail) {
      *why = tuple_str("middle-regime tail", "u", u, "v", v, "n", n, "N", N, "diff",
                       relaxed - exact, "tail", tail);
      return false;
    }
  }
  return true;
}

}  // namespace

SuiteCheck progression_regimes(i64 max_h, i64 max_N, int random_cells, u64 seed) {
  SuiteCheck check = make_check("progression_regimes");
  std::string why;
  for (i64 h = 1; h <= max_h; ++h) {
    for (i64 N = 1; N <= max_N; ++N) {
      for (i64 d : arith::divisors(h)) {
        if (d > N) break;
        for (i64 u = 2; u * d <= N; ++u) {
          for (i64 v = 1; v < u; ++v) {
            if (std::gcd(u, v) != 1) continue;
            auto cell = decomposition::make_progression_cell(h, d, u, v, N);
            ++check.checked;
            if (!progression_cell_ok(cell.u, cell.v, cell.n, N, &why)) fail(check, why);
          }
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cells; ++i) {
    i64 N = 20 + static_cast<i64>(rng() % 1981);
    i64 u = 2 + static_cast<i64>(rng() % static_cast<u64>(std::min<i64>(N, 400) - 1));
    i64 v = 1;
    do {
      v = 1 + static_cast<i64>(rng() % static_cast<u64>(u - 1));
    } while (std::gcd(u, v) != 1);
    i64 n = 1 + static_cast<i64>(rng() % static_cast<u64>(2 * N * (u + v)));
    ++check.checked;
    if (!progression_cell_ok(u, v, n, N, &why)) fail(check, why);
  }
  return check;
}

std::optional<std::string> validate_solution_line(const decomposition::SolutionLine& line) {
  if (line.b0 < 1 || line.b0 > line.y) {
    return tuple_str("b0 outside [1, y]:", "x", line.x, "y", line.y, "m", line.m, "b0",
                     line.b0);
  }
  if ((line.b0 * line.x - line.m) % line.y != 0) {
    return tuple_str("b0 x != m (mod y):", "x", line.x, "y", line.y, "m", line.m, "b0",
                     line.b0);
  }
  if (line.b0 * line.x + line.d0 * line.y != line.m) {
    return tuple_str("base point off the line:", "x", line.x, "y", line.y, "m", line.m);
  }
  i64 N = line.n_bound;
  Rational lower = max(Rational(1 - line.b0, line.y), Rational(line.d0 - N, line.x));
  Rational upper = min(Rational(N - line.b0, line.y), Rational(line.d0 - 1, line.x));
  if (lower != line.lower || upper != line.upper) {
    return tuple_str("interval endpoints off formula:", "x", line.x, "y", line.y, "m",
                     line.m);
  }
  return std::nullopt;
}

SuiteCheck interval_count_identity(i64 max_m, i64 max_N) {
  SuiteCheck check = make_check("interval_count_identity");
  for (i64 m = 1; m <= max_m; ++m) {
    for (i64 N = 1; N <= max_N; ++N) {
      for (i64 x = 1; x <= N; ++x) {
        for (i64 y = 1; y <= N; ++y) {
          if (std::gcd(x, y) != 1) continue;
          if (N * (x + y) <= m) continue;  // needs x + y > m/N
          auto line = decomposition::solution_line(x, y, m, N);
          ++check.checked;
          if (auto why = validate_solution_line(line)) {
            fail(check, *why);
            continue;
          }
          i64 formula = decomposition::admissible_count(line);
          i64 direct = 0;
          for (i64 b = 1; b <= N; ++b) {
            i64 rem = m - b * x;
            if (rem >= y && rem % y == 0 && rem / y <= N) ++direct;
          }
          if (formula < 0 || formula != direct) {
            fail(check, tuple_str("x", x, "y", y, "m", m, "N", N, "formula", formula,
                                  "direct", direct));
          }
          // Upper endpoint comes from b whenever N x + N <= m.
          if (N * x + N <= m && line.upper != Rational(N - line.b0, y)) {
            fail(check, tuple_str("upper-endpoint observation", "x", x, "y", y, "m", m,
                                  "N", N));
          }
        }
      }
    }
  }
  return check;
}

SuiteCheck triangle_routes_agree(i64 exhaustive_X, int sampled, i64 max_X, u64 seed) {
  SuiteCheck check = make_check("triangle_routes_agree");
  auto agree = [&](double X) {
    double a = decomposition::triangle_sum(X);
    double b = decomposition::triangle_sum_direct(X);
    ++check.checked;
    if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(b))) {
      fail(check, tuple_str("X", X, "harmonic", a, "direct", b));
    }
  };
  for (i64 X = 1; X <= exhaustive_X; ++X) agree(static_cast<double>(X));
  agree(1.5);
  agree(2.75);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < sampled; ++i) {
    agree(static_cast<double>(exhaustive_X) +
          static_cast<double>(rng() % static_cast<u64>(max_X - exhaustive_X)) + 0.25);
  }
  return check;
}

SuiteCheck positive_quadrant_identity(i64 max_h, i64 max_N, int random_cells, u64 seed) {
  SuiteCheck check = make_check("positive_quadrant_identity");
  auto run_cell = [&](i64 h, i64 N) {
    auto profile = counting::build_hyperbola_profile(N);
    i64 lhs = 0;
    for (i64 r : arith::divisors(h)) {
      if (r > N) break;
      i64 mfloor = N / r;
      i64 m = h / r;
      for (i64 x = 1; x <= mfloor; ++x) {
        for (i64 y = 1; y <= mfloor; ++y) {
          if (std::gcd(x, y) != 1) continue;
          lhs += decomposition::positive_solution_count(x, y, m, N);
        }
      }
    }
    i64 rhs = counting::positive_product_correlation(h, profile);
    ++check.checked;
    if (4 * lhs != rhs) {
      fail(check, tuple_str("h", h, "N", N, "4*lines", 4 * lhs, "correlation", rhs));
    }
  };
  for (i64 h = 2; h <= max_h; h += 7) {
    for (i64 N = 1; N <= max_N; N += 3) run_cell(h, N);
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_cells; ++i) {
    i64 N = 20 + static_cast<i64>(rng() % 101);
    i64 h = 2 + static_cast<i64>(rng() % static_cast<u64>(2 * N * N - 1));
    run_cell(h, N);
  }
  return check;
}

SuiteCheck closed_form_cells(i64 max_N) {
  SuiteCheck check = make_check("closed_form_cells");
  for (i64 N = 1; N <= max_N; ++N) {
    auto profile = counting::build_hyperbola_profile(N);
    i64 top = counting::count_hyperbola(2 * N * N, N, profile).count;
    i64 next = counting::count_hyperbola(2 * N * N - 1, N, profile).count;
    ++check.checked;
    if (top != 4) fail(check, tuple_str("N", N, "T(2N^2,N)", top));
    ++check.checked;
    // At N = 1 the cell 2N^2 - 1 collapses onto h = 1, where the count is 20.
    i64 expected = N == 1 ? 20 : 0;
    if (next != expected) fail(check, tuple_str("N", N, "T(2N^2-1,N)", next));
  }
  ++check.checked;
  if (counting::count_naive(1, 1).count != 20) fail(check, "T(1,1) != 20");
  return check;
}

SuiteCheck symmetry_and_monotonicity(u64 seed) {
  SuiteCheck check = make_check("symmetry_and_monotonicity");
  for (i64 N = 1; N <= 4; ++N) {
    for (i64 h = 0; h <= 2 * N * N; ++h) {
      ++check.checked;
      if (counting::count_naive(h, N).count != counting::count_naive(-h, N).count) {
        fail(check, tuple_str("sign symmetry (naive)", "h", h, "N", N));
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 20; ++i) {
    i64 N = 20 + static_cast<i64>(rng() % 81);
    i64 h = 1 + static_cast<i64>(rng() % static_cast<u64>(2 * N * N));
    ++check.checked;
    if (counting::count_linear(h, N).count != counting::count_linear(-h, N).count) {
      fail(check, tuple_str("sign symmetry (linear)", "h", h, "N", N));
    }
  }
  for (i64 N = 1; N <= 5; ++N) {
    auto pa = counting::build_hyperbola_profile(N);
    auto pb = counting::build_hyperbola_profile(N + 1);
    for (i64 h = 0; h <= 2 * N * N; ++h) {
      ++check.checked;
      if (counting::count_hyperbola(h, N, pa).count >
          counting::count_hyperbola(h, N + 1, pb).count) {
        fail(check, tuple_str("monotonicity", "h", h, "N", N));
      }
    }
  }
  for (int i = 0; i < 10; ++i) {
    i64 N = 50 + static_cast<i64>(rng() % 151);
    i64 h = 1 + static_cast<i64>(rng() % static_cast<u64>(2 * N * N));
    auto pa = counting::build_hyperbola_profile(N);
    auto pb = counting::build_hyperbola_profile(N + 1);
    ++check.checked;
    if (counting::count_hyperbola(h, N, pa).count >
        counting::count_hyperbola(h, N + 1, pb).count) {
      fail(check, tuple_str("monotonicity", "h", h, "N", N));
    }
  }
  return check;
}

SuiteCheck error_difference_identity() {
  SuiteCheck check = make_check("error_difference_identity");
  counting::AutoCounter counter;
  for (i64 N : {i64{50}, i64{143}, i64{300}}) {
    for (i64 h : {i64{1}, i64{12}, N, N * N}) {
      auto p = asymptotics::make_point(h, N, counter.count(h, N).count);
      double lhs = p.e1 - p.e2;
      double rhs = p.mt2 - p.mt1;
      ++check.checked;
      if (std::abs(lhs - rhs) > 1e-9 * (std::abs(p.mt1) + std::abs(p.mt2) + 1.0)) {
        fail(check, tuple_str("h", h, "N", N, "e1-e2", lhs, "mt2-mt1", rhs));
      }
    }
  }
  return check;
}

SuiteCheck progression_approx_ratio(std::span<const asymptotics::GridCell> cells,
                                    counting::AutoCounter& counter) {
  SuiteCheck check = make_check("progression_approx_ratio");
  double cmax = 0.0;
  for (const auto& cell : cells) {
    i64 exact = counter.count(cell.h, cell.N).count;
    i64 approx = decomposition::t_tilde(cell.h, cell.N);
    double scale = std::pow(static_cast<double>(cell.N), 0.1) *
                   static_cast<double>(cell.h + cell.N);
    double ratio = std::abs(static_cast<double>(approx - exact)) / scale;
    cmax = std::max(cmax, ratio);
    ++check.checked;
    if (!std::isfinite(ratio)) fail(check, tuple_str("h", cell.h, "N", cell.N));
  }
  check.metrics.emplace_back("fitted_C", cmax);
  return check;
}

SuiteCheck main_sum_error_fit(std::span<const asymptotics::GridCell> cells,
                              double exponent_cap) {
  SuiteCheck check = make_check("main_sum_error_fit");
  double constant = 2.0 / asymptotics::zeta2() - 1.0;
  std::vector<std::pair<double, double>> pts;
  for (const auto& cell : cells) {
    double lhs = decomposition::coprime_main_sum(cell.h, cell.N);
    double nn = static_cast<double>(cell.N);
    double rhs = constant * nn * nn * arith::sigma_inv(cell.h).to_double();
    pts.emplace_back(nn, std::abs(lhs - rhs));
    ++check.checked;
  }
  auto fit = asymptotics::fit_exponent(pts);
  check.metrics.emplace_back("alpha", fit.alpha);
  check.metrics.emplace_back("fitted_C", fit.C);
  if (fit.alpha > exponent_cap) {
    fail(check, tuple_str("fitted exponent", fit.alpha, "cap", exponent_cap));
  }
  return check;
}

SuiteCheck boundary_sum_constants(std::span<const i64> Ns) {
  SuiteCheck check = make_check("boundary_sum_constants");
  double c_upper = 0.0, c_lower = 0.0, c_integer = 0.0;
  for (i64 N : Ns) {
    i64 h = N * N;
    auto sums = decomposition::sawtooth_sums(h, N, 1);
    double m_scale = static_cast<double>(N);  // M = N at r = 1
    double n_eps = std::pow(static_cast<double>(N), 0.1);
    double m_eps = std::pow(static_cast<double>(h), 0.1);
    double sigma_over_r = std::abs(sums.h - N * N) / static_cast<double>(N);
    double denom = m_scale * (n_eps + sigma_over_r);
    c_upper = std::max(c_upper, std::abs(sums.sum_psi_upper) / denom);
    c_lower = std::max(c_lower, std::abs(sums.sum_psi_lower) / denom);
    c_integer = std::max(
        c_integer, static_cast<double>(sums.integer_lower_count) / (m_scale * m_eps));
    ++check.checked;
  }
  check.metrics.emplace_back("fitted_C_psi_upper", c_upper);
  check.metrics.emplace_back("fitted_C_psi_lower", c_lower);
  check.metrics.emplace_back("fitted_C_integer", c_integer);
  if (!std::isfinite(c_upper) || !std::isfinite(c_lower) || !std::isfinite(c_integer)) {
    fail(check, "non-finite fitted constant");
  }
  return check;
}

std::vector<SuiteCheck> run_lemma_suites(u64 seed) {
  return {
      coprime_residue_identity(2000, 20, seed),
      unit_congruence_bound(1000, 20, seed + 1),
      ramanujan_identity(500, 500),
      coprime_range_error(10000, 1'000'000, 10'000, 1'000'000, seed + 2),
      gcd_sum_growth(200, 1'000'000, 10'000, 0.1, seed + 3),
      sawtooth_fourier_bound(100000, 512.0, 2.0, seed + 4),
      triangle_linear_bound(10000, 2.0),
  };
}

std::vector<SuiteCheck> run_identity_suites(u64 seed) {
  return {
      counters_agree_exhaustive(6),
      counters_agree_random(50, 10, 300, seed),
      progression_regimes(50, 10, 10000, seed + 1),
      interval_count_identity(400, 20),
      triangle_routes_agree(1000, 8, 10000, seed + 2),
      positive_quadrant_identity(60, 12, 25, seed + 3),
      closed_form_cells(50),
      symmetry_and_monotonicity(seed + 4),
      error_difference_identity(),
  };
}

}  // namespace detcount::harness::suites
