#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "detcount/asymptotics.hpp"

using namespace detcount;
using namespace detcount::asymptotics;

TEST_CASE("constants") {
  CHECK(zeta2() > 1.6449340668);
  CHECK(zeta2() < 1.6449340669);
  double c1 = 16.0 / zeta2();
  CHECK(c1 > 9.7268336);
  CHECK(c1 < 9.7268337);
  double c2 = 8.0 / zeta2() - 4.0;
  CHECK(c2 > 0.8634168);
  CHECK(c2 < 0.8634169);
}

TEST_CASE("main terms") {
  CHECK(main_term1(1, 1000) == doctest::Approx(9.7268336e6).epsilon(1e-7));
  CHECK(main_term1(6, 10) == doctest::Approx(1945.36673).epsilon(1e-7));
  CHECK_THROWS_AS(main_term1(0, 10), std::domain_error);
  CHECK_THROWS_AS(main_term2(-3, 10), std::domain_error);
  // constant ratio across cells
  double ratio = (8.0 / zeta2() - 4.0) / (16.0 / zeta2());
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    i64 h = 1 + static_cast<i64>(rng() % 100000);
    i64 N = 1 + static_cast<i64>(rng() % 5000);
    REQUIRE(main_term2(h, N) / main_term1(h, N) == doctest::Approx(ratio).epsilon(1e-12));
  }
}

TEST_CASE("asymptotic point") {
  auto p = make_point(7, 2, 0);
  CHECK(p.count == 0);
  CHECK(p.e1 == doctest::Approx(-p.mt1));
  CHECK(p.sigma == Rational(3, 2));  // (7 - 4)/2
  CHECK(p.sigma * Rational(2) == Rational(7 - 4));
}

TEST_CASE("fit exponent") {
  std::vector<std::pair<double, double>> pts;
  for (double s : {10.0, 20.0, 40.0, 80.0, 160.0}) pts.emplace_back(s, 3.0 * s * s);
  auto fit = fit_exponent(pts);
  CHECK(fit.alpha == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(fit.C == doctest::Approx(3.0).epsilon(1e-9));

  pts.clear();
  for (double s : {1.0, 2.0, 4.0, 8.0}) pts.emplace_back(s, 5.5);
  fit = fit_exponent(pts);
  CHECK(fit.alpha == doctest::Approx(0.0));
  CHECK(fit.C == doctest::Approx(5.5));

  // multiplicative noise, fixed seed
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> noise(0.9, 1.1);
  pts.clear();
  for (double s = 16.0; s <= 4096.0; s *= 2.0) {
    pts.emplace_back(s, 7.0 * std::pow(s, 1.5) * noise(rng));
  }
  fit = fit_exponent(pts);
  CHECK(std::abs(fit.alpha - 1.5) <= 0.1);

  // scale equivariance: value *= c leaves alpha, scales C
  std::vector<std::pair<double, double>> scaled;
  for (auto [s, v] : pts) scaled.emplace_back(s, 10.0 * v);
  auto fit2 = fit_exponent(scaled);
  CHECK(fit2.alpha == doctest::Approx(fit.alpha).epsilon(1e-12));
  CHECK(fit2.C == doctest::Approx(10.0 * fit.C).epsilon(1e-9));

  // zero values dropped, insufficient data raises
  pts = {{10.0, 1.0}, {20.0, 0.0}, {40.0, 2.0}, {80.0, 3.0}};
  CHECK_THROWS_AS(fit_exponent(pts), InsufficientDataError);
  pts.emplace_back(160.0, 4.0);
  fit = fit_exponent(pts);
  CHECK(fit.used == 4);
  CHECK(fit.dropped == 1);
}

TEST_CASE("verify campaigns on reduced grids") {
  counting::AutoCounter counter;

  std::vector<GridCell> cells;
  for (i64 N : {64, 128, 256, 512}) cells.push_back({1, N});
  auto r1 = verify_main_term1(cells, counter);
  CHECK(r1.points.size() == 4);
  CHECK(r1.samples.size() + static_cast<size_t>(r1.dropped_zero) == 4);
  CHECK(r1.name == "mt1");

  std::vector<GridCell> cells2;
  for (i64 N : {64, 128, 256, 512}) cells2.push_back({N * N, N});
  auto r2 = verify_main_term2(cells2, counter);
  CHECK(r2.points.size() == 4);
  // near h = N^2 the raw error grows well below the main term's N^2
  std::vector<std::pair<double, double>> raw;
  for (const auto& p : r2.points) {
    raw.emplace_back(static_cast<double>(p.N), std::abs(p.e2));
  }
  CHECK(fit_exponent(raw).alpha < 1.7);

  std::vector<i64> Ns{50, 100, 200, 400};
  auto r3 = verify_lower_bound(0.5, Ns, counter);
  CHECK(r3.points.size() == 4);
  CHECK(r3.min_ratio > 0.0);
  CHECK_THROWS_AS(verify_lower_bound(0.0, Ns, counter), std::domain_error);

  auto r4 = verify_singular(std::vector<i64>{1, 50, 100, 200, 400}, counter);
  CHECK(r4.points.size() == 5);
  // N = 1 reported but excluded from the bound and the fit
  CHECK(r4.samples.size() == 4);
  bool noted = false;
  for (const auto& note : r4.notes) noted = noted || note.find("N=1") != std::string::npos;
  CHECK(noted);

  // one-point grid: not enough data to fit
  std::vector<GridCell> one{{1, 64}};
  CHECK_THROWS_AS(verify_main_term1(one, counter), InsufficientDataError);

  // empty size list
  CHECK_THROWS_AS(verify_lower_bound(0.5, std::vector<i64>{}, counter),
                  InsufficientDataError);

  // out-of-cap cells are skipped with a note, and too many skips starve the fit
  counting::CounterCaps tight{.naive = 3, .hyperbola = 16, .linear = 24};
  counting::AutoCounter small(tight);
  std::vector<GridCell> mixed{{1, 8}, {1, 12}, {1, 16}, {1, 20}, {1, 9000}};
  auto rm = verify_main_term1(mixed, small);
  CHECK(rm.points.size() == 4);
  REQUIRE(rm.notes.size() == 1);
  CHECK(rm.notes[0].find("9000") != std::string::npos);
  std::vector<GridCell> starved{{1, 8}, {1, 12}, {1, 9000}, {1, 9001}};
  CHECK_THROWS_AS(verify_main_term1(starved, small), InsufficientDataError);
}
