#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mdlab/correlation.hpp"
#include "mdlab/mean_state.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

namespace {

// prod_{p <= P} (1 - 2/p^r) by plain multiplication over trial-division primes.
double naive_product(unsigned r, std::uint64_t P) {
  double v = 1.0;
  for (std::uint64_t n = 2; n <= P; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    if (prime) v *= 1.0 - 2.0 / std::pow(static_cast<double>(n), r);
  }
  return v;
}

} // namespace

TEST_CASE("mirsky oracle structure") {
  const auto m1 = mirsky_oracle(2, 1);
  CHECK(m1.tail_bound < 1e-4);
  CHECK(m1.finite_factor == 1.0);
  CHECK(std::abs(mirsky_oracle(2, 4).partial_value / m1.partial_value - 1.5) < 1e-12);
  CHECK(std::abs(mirsky_oracle(3, 8).partial_value / mirsky_oracle(3, 1).partial_value - 7.0 / 6.0) < 1e-12);
  CHECK(mirsky_adjustment(2, 1) == 1.0);
  CHECK(mirsky_adjustment(2, 6) == 1.0);
  CHECK(mirsky_adjustment(2, 36) > 1.0);
  CHECK_THROWS_AS(mirsky_oracle(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(mirsky_oracle(2, 1, 10), std::invalid_argument);
}

TEST_CASE("mirsky oracle against a naive product") {
  const auto o = mirsky_oracle(2, 1, 20'000);
  const double naive = naive_product(2, 20'000);
  CHECK(std::abs(o.partial_value - naive) < 1e-12);
  // the certified interval contains the much longer truncation
  const auto longer = mirsky_oracle(2, 1, 1'000'000);
  CHECK(longer.partial_value >= o.lower());
  CHECK(longer.partial_value <= o.upper());
}

TEST_CASE("power-free density") {
  const auto d = power_free_density(2);
  CHECK(std::abs(d.partial_value - 6.0 / (std::numbers::pi * std::numbers::pi)) <= d.tail_bound * d.partial_value * 1.01 + 1e-12);
  CHECK(d.tail_bound < 1e-5);
}

TEST_CASE("shift correlation") {
  const auto one = SeqWindow::from_small(1, std::vector<std::int8_t>(100, 1));
  CHECK(shift_correlation(one, one, 7, 50) == std::complex<double>(1.0, 0.0));
  const std::uint64_t N = 10'000'000;
  const auto mu2 = power_free_sieve(1, N + 10, 2);
  CHECK(std::abs(shift_correlation(mu2, mu2, 0, N).real() - 6.0 / (std::numbers::pi * std::numbers::pi)) <= 0.002);
  CHECK(std::abs(shift_correlation(mu2, mu2, 1, N).real() - mirsky_oracle(2, 1).partial_value) <= 0.003);
  CHECK(shift_correlation(mu2, mu2, 0, 1000).real() == doctest::Approx(cesaro_norm_sq(mu2, 1000)));
  CHECK_THROWS_AS(shift_correlation(mu2, mu2, 20, N), std::invalid_argument);
}

TEST_CASE("rigidity sequence") {
  CHECK(rigidity_sequence(2, 2) == 36);
  CHECK(rigidity_sequence(2, 3) == 900);
  CHECK(rigidity_sequence(3, 2) == 216);
  CHECK_THROWS_AS(rigidity_sequence(2, 20), std::overflow_error);
}

TEST_CASE("rigidity norm") {
  const std::uint64_t N = 10'000'000;
  const auto mu2 = power_free_sieve(1, N + 1000, 2);
  const auto r = rigidity_norm(2, 3, 1, N, 1'000'000, mu2);
  CHECK(r.lag == 900);
  CHECK(std::abs(r.empirical - r.closed_form) <= 0.005);
  const auto zero = rigidity_norm(2, 3, 0, N, 1'000'000, mu2);
  CHECK(zero.empirical == 0.0);
  CHECK(zero.closed_form == 0.0);
  double previous = 1.0;
  for (unsigned j = 1; j <= 6; ++j) {
    const double c = rigidity_closed_form(2, rigidity_sequence(2, j));
    CHECK(c < previous);
    previous = c;
  }
  const double base = rigidity_closed_form(2, 900);
  for (std::uint64_t l = 1; l <= 40; ++l) CHECK(rigidity_closed_form(2, 900 * l) <= 2.0 * base + 1e-15);
}

TEST_CASE("product of shifts") {
  const auto p = product_of_shifts({0, 1}, 1, 6);
  const int expect[] = {1, 1, 0, 0, 1, 1};
  for (int i = 0; i < 6; ++i) CHECK(p[i].real() == expect[i]);
  CHECK(product_of_shifts({0}, 1, 100) == power_free_sieve(1, 100, 2));
  const std::uint64_t N = 10'000'000;
  const auto w = product_of_shifts({0, 1}, 1, N);
  std::uint64_t c = 0;
  for (auto v : w.small()) c += v;
  CHECK(std::abs(static_cast<double>(c) / N - mirsky_oracle(2, 1).partial_value) <= 0.003);
}
