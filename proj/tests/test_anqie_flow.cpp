#include <doctest.h>

#include <cmath>

#include "mdlab/anqie_flow.hpp"
#include "mdlab/correlation.hpp"
#include "mdlab/oracles.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

TEST_CASE("census basics") {
  const auto ones = SeqWindow::from_small(1, std::vector<std::int8_t>(100, 1));
  for (unsigned L : {1u, 5u, 32u}) CHECK(window_census(ones, L, 100).distinct_count == 1);
  const auto mu2 = power_free_sieve(1, 10, 2);
  const auto c = window_census(mu2, 2, 10);
  CHECK(c.distinct_count == 4);
  CHECK(c.total() == 9);
  CHECK_THROWS_AS(window_census(ones, 33, 100), std::invalid_argument);
  CHECK_THROWS_AS(window_census(mobius_sieve(1, 100), 3, 100), std::invalid_argument);
}

TEST_CASE("census matches a string-set oracle") {
  const std::uint64_t N = 200'000;
  const auto mu2 = power_free_sieve(1, N, 2);
  for (unsigned L : {3u, 16u, 24u}) {
    const auto c = window_census(mu2, L, N);
    const auto s = oracle::string_set_census(mu2, L, N);
    REQUIRE(c.distinct_count == s.size());
    CHECK(c.total() == N - L + 1);
    for (const auto& [w, n] : c.counts) {
      std::string bits;
      for (int i = static_cast<int>(L) - 1; i >= 0; --i) bits.push_back((w >> i) & 1 ? '1' : '0');
      REQUIRE(s.count(bits) == 1);
    }
  }
}

TEST_CASE("census at 1e7, L = 16") {
  const std::uint64_t N = 10'000'000;
  const auto mu2 = power_free_sieve(1, N, 2);
  CHECK(window_census(mu2, 16, N).distinct_count == oracle::string_set_census(mu2, 16, N).size());
}

TEST_CASE("census properties") {
  const auto mu2 = power_free_sieve(1, 1'000'000, 2);
  std::uint64_t previous = 0;
  for (std::uint64_t N : {1000u, 10'000u, 100'000u, 1'000'000u}) {
    const auto c = window_census(mu2, 12, N).distinct_count;
    CHECK(c >= previous);
    previous = c;
  }
  const auto c4 = window_census(mu2, 4, 1'000'000).distinct_count, c8 = window_census(mu2, 8, 1'000'000).distinct_count,
             c12 = window_census(mu2, 12, 1'000'000).distinct_count;
  CHECK(c12 <= c4 * c8);
  CHECK(c8 <= c4 * c4);
  for (unsigned L : {4u, 9u, 20u})
    for (const auto& [w, n] : window_census(mu2, L, 1'000'000).counts) REQUIRE(mu2_admissible(w, L));
}

TEST_CASE("admissibility checker") {
  // 1111 1 has no zero in any class mod 4
  CHECK(!mu2_admissible(0b11111, 5));
  CHECK(mu2_admissible(0b111, 3));
  CHECK(mu2_admissible(0b1110111, 7));
  CHECK(!mu2_admissible(0b1111, 4));
  CHECK(mu2_admissible(0b1101, 4));
  // zeros at multiples of 4 leave a free class mod 4, but the ones meet every class mod 9
  std::uint64_t w = 0;
  for (int i = 0; i < 18; ++i) w = (w << 1) | (i % 4 != 0);
  CHECK(!mu2_admissible(w, 18));
  CHECK(mu2_admissible(w, 18, {2}));
}

TEST_CASE("entropy profile") {
  std::vector<std::int8_t> periodic(10'000);
  for (std::size_t i = 0; i < periodic.size(); ++i) periodic[i] = i % 3 == 0;
  const auto p = entropy_profile(SeqWindow::from_small(1, periodic), 1, 20, 10'000);
  for (const auto& e : p.points) CHECK(e.distinct_count <= 3);
  CHECK(p.points.back().bits_per_symbol < 0.1);
  CHECK(p.log_counts_monotone);
  const auto w = product_of_shifts({0, 1}, 1, 1'000'000);
  CHECK(entropy_profile(w, 12, 12, 1'000'000).points.front().bits_per_symbol > 0.2);
}

TEST_CASE("projection rigidity") {
  const std::uint64_t N = 10'000'000;
  const auto mu2 = power_free_sieve(1, N + 100 * 900 + 10, 2);
  CHECK(projection_rigidity(0, 0, 3, N, mu2).empirical == 0.0);
  const auto r = projection_rigidity(0, 1, 3, N, mu2);
  CHECK(std::abs(r.empirical - r.closed_form) <= 0.005);
  CHECK(r.empirical >= 0.0);
  CHECK(r.empirical <= 4.0);
  CHECK(averaged_rigidity(0, 3, 1, N, mu2).empirical == 0.0);
  const auto a = averaged_rigidity(0, 3, 100, N, mu2);
  CHECK(a.empirical <= a.closed_form + 0.01);
  CHECK(averaged_rigidity(0, 4, 20, 100'000).closed_form < averaged_rigidity(0, 3, 20, 100'000).closed_form);
}

TEST_CASE("rigidity floor") {
  const auto f = rigidity_floor(3, 0.5);
  CHECK(f.h == 30);
  CHECK(f.floor == doctest::Approx(1.0 / (std::sqrt(30.0) * std::log(30.0))));
  CHECK(f.min_closed_form >= f.floor);
}
