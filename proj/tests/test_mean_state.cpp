#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mdlab/mean_state.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

namespace {

SeqWindow ones(std::uint64_t n) { return SeqWindow::from_small(1, std::vector<std::int8_t>(n, 1)); }

SeqWindow random_unimodular(std::uint64_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 2.0 * std::numbers::pi);
  std::vector<std::complex<double>> v(n);
  for (auto& x : v) x = std::polar(1.0, u(rng));
  return SeqWindow::from_complex(1, std::move(v));
}

} // namespace

TEST_CASE("cutoff validation") {
  CHECK_THROWS_AS(CesaroMean({}), std::invalid_argument);
  CHECK_THROWS_AS(CesaroMean({10, 10}), std::invalid_argument);
  CHECK_THROWS_AS(CesaroMean({0, 10}), std::invalid_argument);
  CHECK(CesaroMean::defaults().cutoffs() == std::vector<std::uint64_t>{10'000, 100'000, 1'000'000, 10'000'000});
}

TEST_CASE("constant inner product") {
  const auto f = ones(1000);
  const auto t = cesaro_inner(f, f, CesaroMean({10, 100, 1000}));
  for (auto v : t.partial_values) CHECK(v == std::complex<double>(1.0, 0.0));
  CHECK(t.max_successive_difference() == 0.0);
  CHECK_THROWS_AS(cesaro_inner(f, f, CesaroMean({10, 2000})), std::invalid_argument);
}

TEST_CASE("squarefree mean at 1e7") {
  const auto mu2 = power_free_sieve(1, 10'000'000, 2);
  const auto t = cesaro_inner(mu2, ones(10'000'000), CesaroMean::defaults());
  CHECK(std::abs(t.last().real() - 6.0 / (std::numbers::pi * std::numbers::pi)) <= 0.002);
}

TEST_CASE("linear phase average is small") {
  const long double theta = std::sqrt(2.0L) - 1.0L;
  const auto f = sampler({PhaseKind::exp_linear, theta}, 1, 1'000'000);
  CHECK(std::abs(cesaro_inner(f, ones(1'000'000), 1'000'000)) <= 1e-4);
}

TEST_CASE("linear phase at theta = 1/2") {
  const auto f = sampler({PhaseKind::exp_linear, 0.5L}, 1, 4);
  const double expect[] = {-1, 1, -1, 1};
  for (int i = 0; i < 4; ++i) CHECK(std::abs(f[i] - std::complex<double>(expect[i], 0.0)) < 1e-15);
}

TEST_CASE("quadratic phase reduction is exact for large n") {
  // theta = 3/8 + 2^-20 is dyadic, so n^2 theta mod 1 can be computed with integers.
  const long double theta = 0.375L + std::ldexp(1.0L, -20);
  for (std::uint64_t n : {1ull, 7ull, 100'000'000ull, 99'999'989ull, 4'000'000'007ull}) {
    const unsigned __int128 sq = static_cast<unsigned __int128>(n) * n;
    const std::uint64_t num = static_cast<std::uint64_t>((sq * ((3u << 17) + 1)) % (1u << 20));
    CHECK(std::abs(quadratic_phase(n, theta) - std::ldexp(static_cast<double>(num), -20)) < 1e-15);
  }
  CHECK(std::abs(linear_phase(10, 0.25L) - 0.5) < 1e-15);
}

TEST_CASE("shift semantics") {
  const auto mu = mobius_sieve(1, 9);
  const auto s = shift(mu, 1);
  CHECK(s.size() == 8);
  for (std::uint64_t i = 0; i < 8; ++i) CHECK(s[i] == mu[i + 1]);
  CHECK(shift(mu, 0) == mu);
  CHECK(shift(shift(mu, 2), 3) == shift(mu, 5));
}

TEST_CASE("eperiod defect") {
  CHECK(eperiod_defect(ones(100), 3, 90) == 0.0);
  CHECK_THROWS_AS(eperiod_defect(ones(100), 3, 98), std::invalid_argument);
  const auto f = sampler({PhaseKind::exp_quadratic, std::sqrt(2.0L)}, 1, 1'000'001);
  CHECK(std::abs(eperiod_defect(f, 1, 1'000'000) - 2.0) <= 1e-3);
  const auto g = sampler({PhaseKind::exp_sqrt, 0.0L}, 1, 1'000'001);
  CHECK(eperiod_defect(g, 1, 1'000'000) <= 1e-3);
}

TEST_CASE("block e-periodic sequences") {
  auto one = [](std::uint64_t) { return std::uint64_t{1}; };
  const auto b = block_eperiodic(2, one, one, 8);
  const int expect[] = {0, 1, 1, 0, 0, 1, 1, 0};
  for (int i = 0; i < 8; ++i) CHECK(b[i].real() == expect[i]);
  auto id = [](std::uint64_t j) { return j; };
  const auto k1 = block_eperiodic(1, id, id, 6);  // 0 1 00 11 ...
  const int e1[] = {0, 1, 0, 0, 1, 1};
  for (int i = 0; i < 6; ++i) CHECK(k1[i].real() == e1[i]);
  const auto f = block_eperiodic(3, id, id, 1'000'000);
  CHECK(eperiod_defect(f, 3, 999'000) <= 0.01);
  CHECK(eperiod_defect(f, 1, 999'000) >= 0.1);
  CHECK(eperiod_defect(f, 2, 999'000) >= 0.1);
}

TEST_CASE("inner product properties on random windows") {
  const std::uint64_t n = 20'000;
  const auto f = random_unimodular(n + 1, 1), g = random_unimodular(n + 1, 2);
  for (std::uint64_t N : {10ull, 1000ull, 20'000ull}) {
    const auto fg = cesaro_inner(f, g, N);
    const double nf = cesaro_norm_sq(f, N), ng = cesaro_norm_sq(g, N);
    CHECK(std::abs(fg) <= std::sqrt(nf * ng) + 1e-12);
    const auto shifted = cesaro_inner(shift(f, 1), shift(g, 1), N);
    CHECK(std::abs(shifted - fg) <= 2.0 * f.bound() * g.bound() / N + 1e-12);
    // parallelogram law
    std::vector<std::complex<double>> sum(N), diff(N);
    for (std::uint64_t i = 0; i < N; ++i) {
      sum[i] = f[i] + g[i];
      diff[i] = f[i] - g[i];
    }
    const double lhs = cesaro_norm_sq(SeqWindow::from_complex(1, sum), N) + cesaro_norm_sq(SeqWindow::from_complex(1, diff), N);
    CHECK(std::abs(lhs - 2.0 * (nf + ng)) < 1e-10);
  }
}

TEST_CASE("eperiod defect is the norm of f - A^k f") {
  const auto f = random_unimodular(5000, 3);
  std::vector<std::complex<double>> d(4000);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = f[i] - f[i + 3];
  CHECK(std::abs(eperiod_defect(f, 3, 4000) - cesaro_norm_sq(SeqWindow::from_complex(1, d), 4000)) < 1e-12);
}
