#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// Explicit averaging lengths N_1 < N_2 < ... standing in for a mean state.
class CesaroMean {
 public:
  explicit CesaroMean(std::vector<std::uint64_t> cutoffs);
  /// 10^4, 10^5, 10^6, 10^7.
  static CesaroMean defaults();
  static CesaroMean single(std::uint64_t n) { return CesaroMean({n}); }

  const std::vector<std::uint64_t>& cutoffs() const { return cutoffs_; }
  std::uint64_t max_cutoff() const { return cutoffs_.back(); }

 private:
  std::vector<std::uint64_t> cutoffs_;
};

/// partial_values[j] = (1/N_j) sum_{n=1}^{N_j} f(n) conj(g(n)).
struct InnerProductTrace {
  std::vector<std::uint64_t> cutoffs;
  std::vector<std::complex<double>> partial_values;

  /// Largest |partial_values[j+1] - partial_values[j]|; 0 for one cutoff.
  double max_successive_difference() const;
  std::complex<double> last() const { return partial_values.back(); }
};

InnerProductTrace cesaro_inner(const SeqWindow& f, const SeqWindow& g, const CesaroMean& mean);
std::complex<double> cesaro_inner(const SeqWindow& f, const SeqWindow& g, std::uint64_t n);
/// ||f||_N^2.
double cesaro_norm_sq(const SeqWindow& f, std::uint64_t n);

/// A^m f, i.e. n -> f(n + m); the window shrinks by m.
SeqWindow shift(const SeqWindow& f, std::uint64_t m);

/// (1/N) sum_{n=1}^{N} |f(n+k) - f(n)|^2 over the first N entries of f.
double eperiod_defect(const SeqWindow& f, std::uint64_t k, std::uint64_t n);

/// Positive index sequence j -> a_j, j = 1, 2, ...
using IndexRule = std::function<std::uint64_t(std::uint64_t)>;

/// alpha^{m_1} beta^{n_1} alpha^{m_2} beta^{n_2} ... truncated to length, with
/// alpha = (0,1,...,1) and beta = (1,0,...,0), both of length k.
SeqWindow block_eperiodic(std::uint64_t k, const IndexRule& m_seq, const IndexRule& n_seq,
                          std::uint64_t length);

enum class PhaseKind { exp_sqrt, exp_linear, exp_quadratic };

struct PhaseFunction {
  PhaseKind kind = PhaseKind::exp_sqrt;
  long double theta = 0.0L;  // ignored for exp_sqrt
};

/// exp(2 pi i g(n)) for g(n) = sqrt(n), n theta or n^2 theta. The linear and
/// quadratic phases are reduced mod 1 exactly in 128-bit fixed point.
SeqWindow sampler(const PhaseFunction& phase, std::uint64_t start, std::uint64_t length);

/// Fractional part of n^2 theta (or n theta) as a double in [0, 1).
double quadratic_phase(std::uint64_t n, long double theta);
double linear_phase(std::uint64_t n, long double theta);

} // namespace mdlab
