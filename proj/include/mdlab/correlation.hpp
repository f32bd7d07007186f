#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// prod_{p <= cutoff} local_factor(p), evaluated in log space, times an
/// exact finite correction, with a certified bound on |log(true / partial)|.
struct EulerProductTruncation {
  std::string label;
  std::uint64_t cutoff_prime = 0;
  std::function<double(std::uint64_t)> local_factor;
  double log_partial = 0.0;
  double finite_factor = 1.0;
  double partial_value = 1.0;
  double tail_bound = 0.0;

  double lower() const;
  double upper() const;
};

/// Generic truncated product; tail_bound is supplied by the caller.
EulerProductTruncation euler_product(std::string label, std::uint64_t cutoff,
                                     std::function<double(std::uint64_t)> local_factor,
                                     double tail_bound);

/// prod_p (1 - 1/p^r) = 1/zeta(r): density of r-th power-free integers.
EulerProductTruncation power_free_density(unsigned r, std::uint64_t cutoff = 1'000'000);

/// prod_{p^r | m} (1 + 1/(p^r - 2)); exact, >= 1, equal to 1 iff no p^r | m.
double mirsky_adjustment(unsigned r, std::uint64_t m);

/// Limit of (1/N) sum mu_r(n) mu_r(n+m):
///   prod_p (1 - 2/p^r) * prod_{p^r | m} (1 + 1/(p^r - 2)).
/// The first product is truncated at cutoff; the second is exact and stored
/// in finite_factor.
EulerProductTruncation mirsky_oracle(unsigned r, std::uint64_t m, std::uint64_t cutoff = 1'000'000);

/// (1/N) sum_{n=1}^{N} f(n) conj(g(n+m)). Windows start at n = 1.
std::complex<double> shift_correlation(const SeqWindow& f, const SeqWindow& g, std::uint64_t m,
                                       std::uint64_t n);

/// (p_1 p_2 ... p_j)^r; throws std::overflow_error past 64 bits.
std::uint64_t rigidity_sequence(unsigned r, unsigned j);

struct RigidityNorm {
  std::uint64_t lag = 0;  // l * n_j
  double empirical = 0.0;
  double closed_form = 0.0;
  double oracle_tail_bound = 0.0;
};

/// empirical = (1/N) sum_{n<=N} |mu_r(n) - mu_r(n + l n_j)|^2,
/// closed_form = 2 (prod_p(1 - 1/p^r) - mirsky(r, l n_j)).
/// mu_r may be supplied (starting at 1 and covering N + l n_j); otherwise it
/// is sieved.
RigidityNorm rigidity_norm(unsigned r, unsigned j, std::uint64_t l, std::uint64_t n,
                           std::uint64_t oracle_cutoff = 1'000'000,
                           const std::optional<SeqWindow>& mu_r = std::nullopt);

/// Closed form of rigidity_norm alone (no sieving).
double rigidity_closed_form(unsigned r, std::uint64_t lag, std::uint64_t oracle_cutoff = 1'000'000);

/// prod_i mu^2(n + m_i) on [start, start + length).
SeqWindow product_of_shifts(const std::vector<std::uint64_t>& m_list, std::uint64_t start,
                            std::uint64_t length);

} // namespace mdlab
