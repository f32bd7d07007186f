#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mdlab/dirichlet.hpp"
#include "mdlab/oracles.hpp"
#include "mdlab/pretentious.hpp"

using namespace mdlab;

namespace {

PrimeRule constant(double v) {
  return [v](std::uint64_t) { return std::complex<double>(v, 0.0); };
}

} // namespace

TEST_CASE("distance_sq basics") {
  CHECK(distance_sq(constant(-1), constant(-1), 1000) == 0.0);
  CHECK(distance_sq(constant(-1), constant(1), 100) == doctest::Approx(3.605634).epsilon(1e-6));
  CHECK(distance_sq(constant(-1), constant(1), 100) == doctest::Approx(2.0 * oracle::prime_reciprocal_sum(100)));
  auto archimedean0 = [](std::uint64_t p) { return std::polar(1.0, 0.0 * std::log(static_cast<double>(p))); };
  CHECK(distance_sq(constant(1), archimedean0, 1000) == 0.0);
  try {
    distance_sq([](std::uint64_t p) { return std::complex<double>(p == 7 ? 1.5 : 1.0, 0.0); }, constant(1), 100);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("distance properties") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  auto random_rule = [&](std::uint64_t seed) {
    return [seed](std::uint64_t p) {
      std::mt19937_64 g(seed * 1'000'003 + p);
      return std::polar(1.0, std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(g));
    };
  };
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_rule(3 * trial), g = random_rule(3 * trial + 1), h = random_rule(3 * trial + 2);
    const double fg = std::sqrt(distance_sq(f, g, 10'000)), gh = std::sqrt(distance_sq(g, h, 10'000)),
                 fh = std::sqrt(distance_sq(f, h, 10'000));
    CHECK(fh <= fg + gh + 1e-12);
    double previous = 0.0;
    for (std::uint64_t x : {10u, 100u, 1000u, 10000u}) {
      const double d = distance_sq(f, g, x);
      CHECK(d >= previous);
      previous = d;
    }
    CHECK(distance_sq(f, g, 10'000, 30) <= distance_sq(f, g, 10'000, 1));
  }
  (void)u;
  (void)rng;
}

TEST_CASE("m_of_f recovers an exact pretender") {
  const auto r = m_of_f(MultiplicativeSpec::archimedean(0.3), 100'000, 10.0);
  CHECK(r.min_value <= 1e-6);
  CHECK(std::abs(r.argmin_t - 0.3) <= 1e-4);
  for (double v : r.values) CHECK(r.min_value <= v);
  CHECK(r.t_grid.front() == -10.0);
  CHECK(r.t_grid.back() == 10.0);
  CHECK(r.t_grid[1] - r.t_grid[0] <= max_t_spacing(100'000));
  const auto one = m_of_f(MultiplicativeSpec::one(), 100'000, 5.0);
  CHECK(one.min_value <= 1e-10);
  CHECK(std::abs(one.argmin_t) <= 1e-4);
  CHECK_THROWS_AS(m_of_f(MultiplicativeSpec::one(), 1000, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(m_of_f(MultiplicativeSpec::one(), 1000, 1.0, 1, 8), std::invalid_argument);
}

TEST_CASE("mobius floor") {
  const auto r = m_of_f(MultiplicativeSpec::mobius(), 1'000'000, 10.0);
  CHECK(r.min_value >= 0.5);
  for (double v : r.values) CHECK(v >= 0.0);
  CHECK(std::abs(r.argmin_t) <= 10.0);
}

TEST_CASE("m_over_characters") {
  const auto k1 = m_over_characters(MultiplicativeSpec::mobius(), 1, 10'000, 5.0);
  const auto direct = m_of_f(MultiplicativeSpec::mobius(), 10'000, 5.0);
  CHECK(k1.min_value == doctest::Approx(direct.min_value));
  // f = chi0 * n^{0.2i} for a non-principal chi0 mod 5: the conjugate twist wins.
  const auto chars = characters_mod(5);
  const auto& chi0 = chars[1];
  const auto f = twist(MultiplicativeSpec::archimedean(0.2), chi0);
  const auto r = m_over_characters(f, 5, 100'000, 5.0);
  CHECK(r.min_value <= 1e-6);
  CHECK(std::abs(r.argmin_t - 0.2) <= 1e-4);
  CHECK(*r.character == chi0.conj().label());
  const auto six = m_over_characters(MultiplicativeSpec::mobius().coprime(6), 6, 1'000'000, 10.0);
  CHECK(six.min_value >= 0.5);
}

TEST_CASE("halasz pair") {
  const auto one = halasz_bound_pair(MultiplicativeSpec::one(), 1'000'000, 6, 10.0);
  CHECK(one.lhs == doctest::Approx(static_cast<double>(oracle::coprime_count(1'000'000, 6)) / 1e6));
  CHECK(one.M <= 1e-9);
  CHECK(one.rhs_shape >= 1.0 / 3.0);
  CHECK(one.ratio <= 3.0);
  const auto mu = halasz_bound_pair(MultiplicativeSpec::mobius(), 1'000'000, 1, 10.0);
  CHECK(mu.lhs <= 1e-2);
  CHECK(mu.rhs_shape >= std::pow(std::log(1e6), -5.0 / 64.0));
  const auto pre = halasz_bound_pair(MultiplicativeSpec::archimedean(0.5), 100'000, 1, 2.0);
  CHECK(pre.M <= 1e-6);
  CHECK(pre.ratio >= 0.1);
  CHECK(pre.ratio <= 10.0);
  CHECK_THROWS_AS(halasz_bound_pair(MultiplicativeSpec::one(), 100, 1, 0.5), std::invalid_argument);
}

TEST_CASE("character distance floor") {
  const auto r = character_distance_floor(5, 1'000'000, {0.0});
  // only non-principal characters at t = 0
  CHECK(r.samples.size() == 3);
  for (const auto& s : r.samples) CHECK(s.value > 0.0);
  // t = 0 value equals the direct prime sum
  const auto chars = characters_mod(5);
  const double direct = distance_sq([&](std::uint64_t p) { return chars[1](p); }, [](std::uint64_t) { return std::complex<double>(1.0); },
                                    1'000'000, 5);
  bool found = false;
  for (const auto& s : r.samples)
    if (s.character == chars[1].label()) {
      CHECK(s.value == doctest::Approx(direct).epsilon(1e-12));
      found = true;
    }
  CHECK(found);
  double previous = 0.0;
  for (std::uint64_t X : {10'000u, 100'000u, 1'000'000u}) {
    const auto m = character_distance_floor(5, X, {0.0, 1.0, 2.0, 5.0}).minimum.value;
    CHECK(m >= previous);
    previous = m;
  }
  CHECK_THROWS_AS(character_distance_floor(20, 1000, {0.0}), std::invalid_argument);
}
