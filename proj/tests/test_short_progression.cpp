#include <doctest.h>

#include <cmath>

#include "mdlab/oracles.hpp"
#include "mdlab/short_progression.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

TEST_CASE("moment bound formula") {
  CHECK(moment_bound(100, 1) == doctest::Approx(3316.4).epsilon(1e-4));
  CHECK(moment_bound(100, 6) == doctest::Approx(3 * 3316.4).epsilon(1e-4));
  CHECK_THROWS_AS(moment_bound(2, 1), std::invalid_argument);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(210) == 48);
}

TEST_CASE("sliding window equals brute force") {
  const std::uint64_t N = 100'000;
  const auto mu = mobius_sieve(1, N + 50 * 12 + 1);
  for (std::uint64_t h : {1u, 2u, 5u, 10u, 33u, 50u})
    for (std::uint64_t k = 1; k <= 12; ++k) REQUIRE(sliding_sum_squares(mu, N, h, k) == oracle::second_moment_brute(mu, N, h, k));
}

TEST_CASE("second moment report") {
  const auto r = second_moment(100'000, 10, 1);
  CHECK(r.S == static_cast<double>(r.sum_squares) / 1e5);
  CHECK(r.S <= 100.0);
  CHECK(*r.ratio == doctest::Approx(r.S / *r.bound));
  const auto two = second_moment(1000, 2, 3);
  CHECK(!two.bound);
  CHECK(!two.ratio);
  CHECK_THROWS_AS(second_moment(1000, 1, 1), std::invalid_argument);
  const auto mu = mobius_sieve(1, 100);
  CHECK_THROWS_AS(second_moment(1000, 10, 1, mu), std::invalid_argument);
}

TEST_CASE("chowla scale at 1e7") {
  const auto r = second_moment(10'000'000, 100, 1);
  CHECK(r.chowla_ratio >= 0.3);
  CHECK(r.chowla_ratio <= 1.2);
}

TEST_CASE("averaged shift norm") {
  const auto mu = mobius_sieve(1, 200'000);
  const auto r = second_moment(100'000, 20, 3, mu);
  CHECK(std::abs(averaged_shift_norm(mu, 20, 3, 100'000) * 400.0 - r.S) <= 1e-9 * r.S);
  const auto one = SeqWindow::from_small(1, std::vector<std::int8_t>(2000, 1));
  CHECK(averaged_shift_norm(one, 10, 2, 1000) == 1.0);
  double previous = 2.0;
  const std::uint64_t N = 10'000'000;
  const auto big = mobius_sieve(1, N + 10'001);
  for (std::uint64_t h : {10u, 100u, 1000u, 10000u}) {
    const double v = averaged_shift_norm(big, h, 1, N);
    CHECK(v < previous);
    previous = v;
  }
}

TEST_CASE("admissible pairs") {
  const auto a = admissible_pair(64, 100, 0.1);
  CHECK(a.lhs == 0.5);
  CHECK(a.prime_sum == doctest::Approx(oracle::prime_reciprocal_sum(100)));
  CHECK(a.prime_sum == doctest::Approx(1.802817).epsilon(1e-6));
  CHECK(a.admissible);
  CHECK(admissible_pair(1, 2, 0.5).admissible);
  CHECK(!admissible_pair(2 * 3 * 5 * 7 * 11 * 13, 3, 0.1).admissible);
  CHECK_THROWS_AS(admissible_pair(1, 10, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(admissible_pair(1, 10, 1.0), std::invalid_argument);
}

TEST_CASE("divisor decomposition matches its literal definition") {
  for (std::uint64_t k : {1u, 2u, 6u, 12u}) {
    const auto d = divisor_decomposition(1000, 2, k);
    CHECK(d.rhs == doctest::Approx(oracle::divisor_decomposition_rhs(1000, 2, k)).epsilon(1e-12));
    std::int64_t lhs = 0;
    for (std::uint64_t n = 1000; n <= 2000; ++n) {
      std::int64_t s = 0;
      for (std::uint64_t l = 1; l <= 2; ++l) s += oracle::trial_mobius(n + k * l);
      lhs += s * s;
    }
    CHECK(d.lhs == static_cast<double>(lhs));
  }
  const auto k1 = divisor_decomposition(100'000, 10, 1);
  CHECK(k1.residual <= 10.0 * 10 * 100'000);
  const auto a = divisor_decomposition(100'000, 10, 6), b = divisor_decomposition(200'000, 10, 6),
             c = divisor_decomposition(400'000, 10, 6);
  CHECK(b.residual_over_x() <= 2.0 * a.residual_over_x());
  CHECK(c.residual_over_x() <= 2.0 * b.residual_over_x());
}
