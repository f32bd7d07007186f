#pragma once

#include <cstdint>
#include <optional>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// Second moment of Mobius sums over short progressions n + k, ..., n + hk.
struct MomentReport {
  std::uint64_t N = 0, h = 0, k = 0;
  /// sum_{n=1}^{N} (sum_{l=1}^{h} mu(n + kl))^2, exact.
  std::int64_t sum_squares = 0;
  double S = 0.0;  // sum_squares / N
  /// h^2 (k/phi(k)) loglog h / log h; absent for h < 3 where loglog h <= 0.
  std::optional<double> bound;
  std::optional<double> ratio;  // S / bound
  double chowla_ratio = 0.0;    // S / h
};

std::uint64_t euler_phi(std::uint64_t k);

/// h^2 (k/phi(k)) log log h / log h (natural logs); h >= 3.
double moment_bound(std::uint64_t h, std::uint64_t k);

/// Exact second moment by sliding window: k running sums, one per residue
/// class, each updated in O(1) per step. mu must start at 1 and cover N + hk;
/// it is sieved when not supplied.
MomentReport second_moment(std::uint64_t N, std::uint64_t h, std::uint64_t k,
                           const std::optional<SeqWindow>& mu = std::nullopt);
/// Just the integer sum_{n=1}^{N} (sum_{l=1}^{h} f(n+kl))^2 for a small window.
std::int64_t sliding_sum_squares(const SeqWindow& f, std::uint64_t N, std::uint64_t h,
                                 std::uint64_t k);

/// ||(1/h) sum_{l=1}^{h} A^{kl} f||_N^2.
double averaged_shift_norm(const SeqWindow& f, std::uint64_t h, std::uint64_t k, std::uint64_t N);

struct AdmissibleDecision {
  std::uint64_t k = 0, h = 0;
  double epsilon = 0.0;
  double lhs = 0.0;        // sum_{p | k} 1/p
  double prime_sum = 0.0;  // sum_{p <= h} 1/p
  double rhs = 0.0;        // (1 - epsilon) * prime_sum
  bool admissible = false;
};

AdmissibleDecision admissible_pair(std::uint64_t k, std::uint64_t h, double epsilon);

struct DivisorDecomposition {
  std::uint64_t X = 0, h = 0, k = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double residual_over_x() const { return residual / static_cast<double>(X); }
};

/// lhs = sum_{n=X}^{2X} |sum_{l=1}^{h} mu(n+kl)|^2 against
/// rhs = (1/k) sum_{d|k} d sum_{a<=k/d, (a,k/d)=1} sum_{X/d<=x<=2X/d}
///       |sum_{x<=n<=x+hk/d, n=a mod k/d} mu(n) 1_{(n,k)=1}|^2.
/// mu, if supplied, must start at 1 and cover 2X + hk + k.
DivisorDecomposition divisor_decomposition(std::uint64_t X, std::uint64_t h, std::uint64_t k,
                                           const std::optional<SeqWindow>& mu = std::nullopt);

} // namespace mdlab
