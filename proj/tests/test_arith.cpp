#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <complex>
#include <numeric>
#include <random>

#include "detcount/arith.hpp"
#include "detcount/rational.hpp"

using namespace detcount;
using namespace detcount::arith;

TEST_CASE("rational normalization and arithmetic") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(7, 7) == Rational(1));
  CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(5, 1).is_integer());
  CHECK_FALSE(Rational(5, 2).is_integer());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::parse("-9999/100") == Rational(-9999, 100));
  CHECK(Rational::parse(Rational(22, -7).str()) == Rational(-22, 7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  i64 big = std::numeric_limits<i64>::max();
  CHECK_THROWS_AS(Rational(big, 1) + Rational(big, 1), std::overflow_error);
  CHECK((Rational(big, 2) + Rational(big, 2)) == Rational(big));  // reduces back in range
}

TEST_CASE("table base cases and small values") {
  auto t1 = build_tables(1);
  CHECK(t1.phi(1) == 1);
  CHECK(t1.mu(1) == 1);
  CHECK(t1.tau_prime(1) == 1);

  auto t = build_tables(100);
  CHECK(t.phi(12) == 4);
  CHECK(t.mu(12) == 0);
  CHECK(t.tau_prime(12) == 4);  // square-free divisors {1,2,3,6}
  CHECK(t.phi(13) == 12);
  CHECK(t.mu(13) == -1);
  CHECK(t.tau_prime(13) == 2);

  CHECK_THROWS_AS(build_tables(0), CapacityError);
  CHECK_THROWS_AS(build_tables(100, 10), CapacityError);
}

TEST_CASE("table invariants up to 5000") {
  const i64 L = 5000;
  auto t = build_tables(L);
  for (i64 n = 1; n <= L; ++n) {
    i64 phi_sum = 0, mu_sum = 0;
    for (i64 d : divisors(n, t)) {
      phi_sum += t.phi(d);
      mu_sum += t.mu(d);
    }
    REQUIRE(phi_sum == n);
    REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    if (n >= 2) {
      i64 p = t.spf(n);
      REQUIRE((t.mu(n) == 0) == (n % (p * p) == 0 || [&] {
                // squarefull somewhere above the smallest prime
                i64 m = n;
                while (m > 1) {
                  i64 q = t.spf(m);
                  int e = 0;
                  while (m % q == 0) {
                    m /= q;
                    ++e;
                  }
                  if (e >= 2) return true;
                }
                return false;
              }()));
    }
    // tau' = 2^(number of distinct primes)
    i64 omega = 0, m = n;
    while (m > 1) {
      i64 q = t.spf(m);
      while (m % q == 0) m /= q;
      ++omega;
    }
    REQUIRE(t.tau_prime(n) == (i64{1} << omega));
  }
  // primes from the sieve
  CHECK(t.phi(2) == 1);
  for (u32 p : t.primes()) {
    REQUIRE(t.phi(p) == static_cast<i64>(p) - 1);
    REQUIRE(t.mu(p) == -1);
    REQUIRE(t.tau_prime(p) == 2);
  }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<i64>{1});
  CHECK(divisors(12) == std::vector<i64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(13) == std::vector<i64>{1, 13});
  CHECK_THROWS_AS(divisors(0), std::domain_error);

  auto t = build_tables(50);
  // above the sieve limit, incl. a semiprime with both factors beyond it
  CHECK(divisors(2 * 61 * 61, t) == divisors(2 * 61 * 61));
  CHECK(divisors(101 * 103, t) == std::vector<i64>{1, 101, 103, 101 * 103});
  i64 big = 2LL * 4096 * 4096;  // 2 N^2 at the hyperbola cap
  CHECK(divisors(big, t).size() == divisors(big).size());
}

TEST_CASE("sigma_inv") {
  CHECK(sigma_inv(1) == Rational(1));
  CHECK(sigma_inv(6) == Rational(2));
  CHECK(sigma_inv(4) == Rational(7, 4));
  CHECK_THROWS_AS(sigma_inv(0), std::domain_error);
  // sigma_inv(h) == sum over divisors, exact, random sample
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    i64 h = 1 + static_cast<i64>(rng() % 100000);
    Rational direct(0);
    for (i64 d : divisors(h)) direct = direct + Rational(1, d);
    REQUIRE(sigma_inv(h) == direct);
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(1, 5) == 1);
  CHECK(mod_inverse(123, 1) == 0);
  CHECK(mod_inverse(3, 5) == 2);
  CHECK(mod_inverse(-2, 5) == 2);  // -2 == 3 (mod 5)
  CHECK_THROWS_AS(mod_inverse(2, 4), NotInvertibleError);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    i64 m = 2 + static_cast<i64>(rng() % 100000);
    i64 a = 1 + static_cast<i64>(rng() % (m - 1));
    if (std::gcd(a, m) != 1) continue;
    i64 t = mod_inverse(a, m);
    REQUIRE(0 <= t);
    REQUIRE(t < m);
    REQUIRE((static_cast<i128>(a) * t) % m == 1);
  }
}

TEST_CASE("ramanujan sums") {
  for (i64 n = -5; n <= 5; ++n) CHECK(ramanujan_sum(1, n) == 1);
  CHECK(ramanujan_sum(6, 0) == 2);  // phi(6)
  CHECK(ramanujan_sum(4, 2) == -2);
  CHECK_THROWS_AS(ramanujan_sum(0, 3), std::domain_error);
  // direct exponential sum oracle at unit-test scale
  for (i64 y = 1; y <= 60; ++y) {
    for (i64 n = -60; n <= 60; ++n) {
      std::complex<double> s{0.0, 0.0};
      for (i64 t = 1; t <= y; ++t) {
        if (std::gcd(t, y) != 1) continue;
        double ang = 2.0 * M_PI * static_cast<double>(n) * static_cast<double>(t) /
                     static_cast<double>(y);
        s += std::complex<double>(std::cos(ang), std::sin(ang));
      }
      i64 c = ramanujan_sum(y, n);
      REQUIRE(std::abs(s.real() - static_cast<double>(c)) < 1e-7);
      REQUIRE(std::abs(s.imag()) < 1e-7);
      i64 g = n == 0 ? y : std::gcd(y, std::abs(n));
      REQUIRE(std::abs(c) <= sigma1(g));
    }
  }
}

TEST_CASE("sawtooth") {
  CHECK(sawtooth(0.0) == doctest::Approx(-0.5));
  CHECK(sawtooth(0.5) == doctest::Approx(0.0));
  CHECK(sawtooth(7.0 / 3.0) == doctest::Approx(-1.0 / 6.0));
  CHECK(sawtooth(Rational(7, 3)) == doctest::Approx(-1.0 / 6.0));
  CHECK(sawtooth(Rational(-1, 2)) == doctest::Approx(0.0));
  CHECK(sawtooth(Rational(0)) == doctest::Approx(-0.5));
  // 1-periodic
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    double x = dist(rng);
    double v = sawtooth(x);
    REQUIRE(v >= -0.5);
    REQUIRE(v < 0.5);
    REQUIRE(sawtooth(x + 1.0) == doctest::Approx(v).epsilon(1e-9));
  }
}

TEST_CASE("sawtooth fourier truncation") {
  CHECK_THROWS_AS(sawtooth_fourier(0.3, 0.5), std::domain_error);

  auto half = sawtooth_fourier(0.5, 10.0);
  CHECK(half.approx == doctest::Approx(0.0).epsilon(1e-12));

  auto zero = sawtooth_fourier(0.0, 25.0);
  CHECK(zero.approx == doctest::Approx(0.0));
  CHECK(zero.bound == 1.0);
  CHECK(std::abs(sawtooth(0.0) - zero.approx) <= 1.0);

  auto p = sawtooth_fourier(0.3, 1000.0);
  CHECK(std::abs(p.approx - sawtooth(0.3)) <= 2.0 * p.bound);
  CHECK(p.bound == doctest::Approx(1.0 / 300.0));

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> theta_dist(-1.0, 2.0);
  std::uniform_real_distribution<double> q_dist(1.0, 200.0);
  for (int i = 0; i < 2000; ++i) {
    double theta = theta_dist(rng);
    double Q = q_dist(rng);
    auto [approx, bound] = sawtooth_fourier(theta, Q);
    REQUIRE(std::abs(sawtooth(theta) - approx) <= 2.0 * bound);
  }
}

TEST_CASE("coprime residue count") {
  CHECK(coprime_residue_count(12, 3, 1) == 2);  // units {1, 7}
  CHECK(coprime_residue_count(12, 12, 5) == 1);
  CHECK(coprime_residue_count(1, 1, 1) == 1);
  auto t = build_tables(300);
  for (i64 u = 1; u <= 300; ++u) {
    CHECK(coprime_residue_count(u, 1, 0) == t.phi(u));
  }
  CHECK_THROWS_AS(coprime_residue_count(12, 5, 1), std::invalid_argument);  // 5 does not divide 12
  CHECK_THROWS_AS(coprime_residue_count(12, 6, 2), std::invalid_argument);  // gcd(2,6) > 1
  // the identity on a small exhaustive grid
  for (i64 u = 1; u <= 120; ++u) {
    for (i64 q : divisors(u, t)) {
      for (i64 r = 1; r <= q; ++r) {
        if (std::gcd(r, q) != 1) continue;
        REQUIRE(coprime_residue_count(u, q, r) == t.phi(u) / t.phi(q));
      }
    }
  }
}

TEST_CASE("coprime range count") {
  CHECK(coprime_range_count(7, 13, 1) == 13);
  CHECK(coprime_range_count(1, 10, 2) == 5);
  CHECK_THROWS_AS(coprime_range_count(0, 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(coprime_range_count(1, 0, 2), std::invalid_argument);
  auto t = build_tables(5000);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    i64 Y = 1 + static_cast<i64>(rng() % 100000);
    i64 X = 1 + static_cast<i64>(rng() % 3000);
    i64 q = 1 + static_cast<i64>(rng() % 5000);
    i64 fast = coprime_range_count(Y, X, q);
    i64 slow = 0;
    for (i64 n = Y; n < Y + X; ++n) slow += std::gcd(n, q) == 1;
    REQUIRE(fast == slow);
    // |count - phi(q) X / q| <= tau'(q)
    REQUIRE(std::abs(fast * q - t.phi(q) * X) <= t.tau_prime(q) * q);
  }
}

TEST_CASE("gcd sum") {
  CHECK(gcd_sum(1, 10) == 10);
  CHECK(gcd_sum(6, 6) == 1 + 2 + 3 + 2 + 1 + 6);
}
