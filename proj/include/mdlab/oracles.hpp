#pragma once

#include <complex>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "mdlab/seq_window.hpp"

/// Slow, independent reference computations used by the tests and the
/// acceptance suite. None of these share code with the engines they check.
namespace mdlab::oracle {

struct TrialValues {
  int mobius = 0;
  int liouville = 0;
  int squarefree = 0;  // mu_2
  int cubefree = 0;    // mu_3
};

/// Factorizes n by trial division.
TrialValues trial_values(std::uint64_t n);
int trial_mobius(std::uint64_t n);

/// sum_{n=1}^{N} (sum_{l=1}^{h} mu(n + kl))^2 by direct double loop; mu must
/// start at 1.
std::int64_t second_moment_brute(const SeqWindow& mu, std::uint64_t N, std::uint64_t h, std::uint64_t k);

/// Set of length-L substrings of f(1..N) as '0'/'1' strings.
std::set<std::string> string_set_census(const SeqWindow& f, unsigned L, std::uint64_t N);

/// int_a^b |sum_m c_m e^{i w_m t}|^2 dt via the closed form of each pair.
double exact_trig_integral(const std::vector<std::complex<double>>& c, const std::vector<double>& w, double a,
                           double b);

/// #{n <= x : gcd(n, k) = 1} by inclusion-exclusion over the primes of k.
std::uint64_t coprime_count(std::uint64_t x, std::uint64_t k);

/// sum_{p <= x} 1/p with primality by trial division.
double prime_reciprocal_sum(std::uint64_t x);

/// Right side of the divisor decomposition evaluated literally from its
/// definition using trial-division mu.
double divisor_decomposition_rhs(std::uint64_t X, std::uint64_t h, std::uint64_t k);

} // namespace mdlab::oracle
