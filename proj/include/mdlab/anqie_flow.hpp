#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// Length-L factors of a {0,1} sequence, packed with the first symbol in the
/// most significant of the L low bits.
struct WindowCensus {
  unsigned L = 0;
  std::uint64_t N = 0;
  std::uint64_t distinct_count = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (window, occurrences), ascending window

  std::uint64_t total() const;
};

/// Exact census of the windows (f(n), ..., f(n+L-1)) for 1 <= n <= N-L+1.
/// f must start at 1, cover N, and take values in {0,1}; 1 <= L <= 32.
WindowCensus window_census(const SeqWindow& f, unsigned L, std::uint64_t N);

struct EntropyPoint {
  unsigned L = 0;
  std::uint64_t distinct_count = 0;
  double bits_per_symbol = 0.0;  // log2(distinct_count) / L
};

struct EntropyProfile {
  std::uint64_t N = 0;
  std::vector<EntropyPoint> points;
  bool log_counts_monotone = true;  // distinct_count non-decreasing in L
};

EntropyProfile entropy_profile(const SeqWindow& f, unsigned L_lo, unsigned L_hi, std::uint64_t N);

/// True when, for each p in primes, some residue class of positions mod p^2
/// inside the window holds only zeros (necessary for a window of mu^2).
bool mu2_admissible(std::uint64_t window, unsigned L, const std::vector<std::uint64_t>& primes = {2, 3});

struct ProjectionRigidity {
  std::uint64_t i = 0, l = 0;
  unsigned j = 0;
  std::uint64_t lag = 0;  // l * n_j
  double empirical = 0.0;
  double closed_form = 0.0;
};

/// empirical = (1/N) sum_{n=1}^{N} |mu^2(i + l n_j + n) - mu^2(i + n)|^2 with
/// n_j = (p_1 ... p_j)^2. mu2, if supplied, must start at 1 and cover
/// i + l n_j + N.
ProjectionRigidity projection_rigidity(std::uint64_t i, std::uint64_t l, unsigned j, std::uint64_t N,
                                       const std::optional<SeqWindow>& mu2 = std::nullopt,
                                       std::uint64_t oracle_cutoff = 1'000'000);

struct AveragedRigidity {
  std::uint64_t i = 0, h = 0;
  unsigned j = 0;
  double empirical = 0.0;    // (1/h) sum_{l<h} projection_rigidity(...).empirical
  double closed_form = 0.0;  // same average of the closed form
};

AveragedRigidity averaged_rigidity(std::uint64_t i, unsigned j, std::uint64_t h, std::uint64_t N,
                                   const std::optional<SeqWindow>& mu2 = std::nullopt,
                                   std::uint64_t oracle_cutoff = 1'000'000);

struct RigidityFloor {
  unsigned j = 0;
  double delta = 0.0;
  std::uint64_t h = 0;            // floor(n_j^delta)
  double min_closed_form = 0.0;   // min over 1 <= l <= h
  std::uint64_t argmin_l = 0;
  double floor = 0.0;             // 1 / (sqrt(h) log h)
};

RigidityFloor rigidity_floor(unsigned j, double delta, std::uint64_t oracle_cutoff = 1'000'000);

} // namespace mdlab
