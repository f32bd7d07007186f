#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "mdlab/oracles.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

namespace {

std::vector<int> ints(const SeqWindow& w) {
  std::vector<int> out;
  for (auto v : w.small()) out.push_back(v);
  return out;
}

} // namespace

TEST_CASE("mobius_sieve small values") {
  CHECK(ints(mobius_sieve(1, 8)) == std::vector<int>{1, -1, -1, 0, -1, 1, -1, 0});
  CHECK(ints(mobius_sieve(4, 1)) == std::vector<int>{0});
}

TEST_CASE("power_free_sieve small values") {
  CHECK(ints(power_free_sieve(1, 8, 2)) == std::vector<int>{1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(ints(power_free_sieve(4, 2, 3)) == std::vector<int>{1, 1});
  CHECK_THROWS_AS(power_free_sieve(1, 8, 1), std::invalid_argument);
}

TEST_CASE("evaluate_spec small values") {
  CHECK(evaluate_spec(MultiplicativeSpec::mobius(), 1, 8) == mobius_sieve(1, 8));
  CHECK(ints(evaluate_spec(MultiplicativeSpec::mobius().coprime(2), 1, 6)) == std::vector<int>{1, 0, -1, 0, -1, 0});
  CHECK(ints(evaluate_spec(MultiplicativeSpec::liouville(), 1, 6)) == std::vector<int>{1, -1, -1, 1, -1, 1});
}

TEST_CASE("range errors") {
  CHECK_THROWS_AS(mobius_sieve(0, 8), std::invalid_argument);
  CHECK_THROWS_AS(mobius_sieve(1, 0), std::invalid_argument);
  CHECK_THROWS(mobius_sieve(std::uint64_t{1} << 62, 10));
}

TEST_CASE("sieves against trial division far from the origin") {
  const std::uint64_t start = 1'000'000, len = 1000;
  const auto mu = mobius_sieve(start, len), sf = power_free_sieve(start, len, 2), cf = power_free_sieve(100'000, len, 3),
             la = liouville_sieve(start, len);
  for (std::uint64_t i = 0; i < len; ++i) {
    const auto t = oracle::trial_values(start + i);
    CHECK(mu.small()[i] == t.mobius);
    CHECK(sf.small()[i] == t.squarefree);
    CHECK(la.small()[i] == t.liouville);
    CHECK(cf.small()[i] == oracle::trial_values(100'000 + i).cubefree);
  }
}

TEST_CASE("sieves against the factorization table up to 2e5") {
  const std::uint64_t n = 200'000;
  FactorizationOracle table(n);
  const auto mu = mobius_sieve(1, n), sf = power_free_sieve(1, n, 2), la = liouville_sieve(1, n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    REQUIRE(mu.small()[i - 1] == table.mobius(i));
    REQUIRE(la.small()[i - 1] == table.liouville(i));
    REQUIRE(sf.small()[i - 1] == mu.small()[i - 1] * mu.small()[i - 1]);
  }
}

TEST_CASE("segmentation invariance") {
  SieveOptions small_blocks;
  small_blocks.block_size = 1000;
  const auto whole = mobius_sieve(5000, 30'000);
  const SeqWindow parts[] = {mobius_sieve(5000, 12'345), mobius_sieve(17'345, 17'655)};
  CHECK(concatenate(parts) == whole);
  CHECK(mobius_sieve(5000, 30'000, small_blocks) == whole);
  CHECK(power_free_sieve(5000, 30'000, 3, small_blocks) == power_free_sieve(5000, 30'000, 3));
  CHECK(liouville_sieve(5000, 30'000, small_blocks) == liouville_sieve(5000, 30'000));
}

TEST_CASE("multiplicativity on random coprime pairs") {
  const std::uint64_t limit = 1'000'000;
  FactorizationOracle table(limit);
  std::mt19937_64 rng(7);
  const MultiplicativeSpec specs[] = {MultiplicativeSpec::mobius(), MultiplicativeSpec::liouville(),
                                      MultiplicativeSpec::power_free(2), MultiplicativeSpec::power_free(3),
                                      MultiplicativeSpec::archimedean(0.7), MultiplicativeSpec::mobius().coprime(6)};
  std::vector<SeqWindow> windows;
  for (const auto& s : specs) windows.push_back(evaluate_spec(s, 1, limit));
  int pairs = 0;
  while (pairs < 10'000) {
    const std::uint64_t a = 1 + rng() % 1000, b = 1 + rng() % 1000;
    if (std::gcd(a, b) != 1) continue;
    ++pairs;
    for (const auto& w : windows) {
      const auto lhs = w[a * b - 1], rhs = w[a - 1] * w[b - 1];
      REQUIRE(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("custom spec and the factorization oracle agree") {
  auto spec = MultiplicativeSpec::custom("half", [](std::uint64_t p, unsigned e) {
    return std::complex<double>(p == 2 ? 0.5 : -1.0, 0.0) * static_cast<double>(e == 1);
  });
  const auto w = evaluate_spec(spec, 1, 5000);
  FactorizationOracle table(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) REQUIRE(std::abs(w[n - 1] - table.evaluate(spec, n)) < 1e-12);
  CHECK(!w.is_small());
}

TEST_CASE("spec rejects values above 1") {
  auto spec = MultiplicativeSpec::custom("big", [](std::uint64_t, unsigned) { return std::complex<double>(2.0, 0.0); });
  CHECK_THROWS_AS(evaluate_spec(spec, 1, 10), std::invalid_argument);
}

TEST_CASE("factorization oracle") {
  FactorizationOracle table(1000);
  CHECK(table.smallest_prime_factor(91) == 7);
  CHECK(table.factor(360) == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK_THROWS(FactorizationOracle(20'000'000));
  CHECK_THROWS(table.factor(1001));
}

TEST_CASE("primes and roots") {
  CHECK(primes_up_to(30) == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(isqrt(99) == 9);
  CHECK(isqrt(100) == 10);
  CHECK(iroot(26, 3) == 2);
  CHECK(iroot(27, 3) == 3);
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295u);
}

TEST_CASE("squarefree density at 1e7") {
  const auto w = power_free_sieve(1, 10'000'000, 2);
  std::uint64_t c = 0;
  for (auto v : w.small()) c += v;
  CHECK(std::abs(static_cast<double>(c) / 1e7 - 0.6079) <= 0.002);
}
