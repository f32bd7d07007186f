#include "mdlab/mean_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mdlab/parallel.hpp"
#include "mdlab/summation.hpp"

namespace mdlab {

namespace {

using u128 = unsigned __int128;

/// sum_{i in [begin, end)} f[i] conj(g[i]); exact for two small windows.
std::complex<double> dot_range(const SeqWindow& f, const SeqWindow& g, std::size_t begin,
                               std::size_t end) {
  const std::size_t count = end - begin;
  if (f.is_small() && g.is_small()) {
    auto a = f.small(), b = g.small();
    std::vector<std::int64_t> partial(thread_count(), 0);
    parallel_chunks(count, [&](std::size_t lo, std::size_t hi, std::size_t c) {
      std::int64_t s = 0;
      for (std::size_t i = begin + lo; i < begin + hi; ++i) s += a[i] * b[i];
      partial[c] = s;
    });
    std::int64_t total = 0;
    for (auto s : partial) total += s;
    return static_cast<double>(total);
  }
  std::vector<CompensatedComplexSum> partial(thread_count());
  parallel_chunks(count, [&](std::size_t lo, std::size_t hi, std::size_t c) {
    CompensatedComplexSum s;
    for (std::size_t i = begin + lo; i < begin + hi; ++i) s.add(f[i] * std::conj(g[i]));
    partial[c] = s;
  });
  CompensatedComplexSum total;
  for (const auto& s : partial) total.merge(s);
  return total.value();
}

} // namespace

CesaroMean::CesaroMean(std::vector<std::uint64_t> cutoffs) : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty()) throw std::invalid_argument("CesaroMean: cutoffs must be nonempty");
  for (std::size_t i = 0; i < cutoffs_.size(); ++i) {
    if (cutoffs_[i] < 1) throw std::invalid_argument("CesaroMean: cutoffs must be >= 1");
    if (i > 0 && cutoffs_[i] <= cutoffs_[i - 1])
      throw std::invalid_argument("CesaroMean: cutoffs must be strictly increasing");
  }
}

CesaroMean CesaroMean::defaults() { return CesaroMean({10'000, 100'000, 1'000'000, 10'000'000}); }

double InnerProductTrace::max_successive_difference() const {
  double d = 0.0;
  for (std::size_t j = 1; j < partial_values.size(); ++j)
    d = std::max(d, std::abs(partial_values[j] - partial_values[j - 1]));
  return d;
}

InnerProductTrace cesaro_inner(const SeqWindow& f, const SeqWindow& g, const CesaroMean& mean) {
  if (f.start() != 1 || g.start() != 1)
    throw std::invalid_argument("cesaro_inner: windows must start at n=1");
  for (auto n : mean.cutoffs()) {
    if (f.size() < n || g.size() < n)
      throw std::invalid_argument("cesaro_inner: window too short for cutoff " + std::to_string(n) +
                                  " (lengths " + std::to_string(f.size()) + ", " +
                                  std::to_string(g.size()) + ")");
  }
  InnerProductTrace trace;
  trace.cutoffs = mean.cutoffs();
  std::complex<double> running = 0.0;
  std::size_t done = 0;
  for (auto n : mean.cutoffs()) {
    running += dot_range(f, g, done, n);
    done = n;
    trace.partial_values.push_back(running / static_cast<double>(n));
  }
  return trace;
}

std::complex<double> cesaro_inner(const SeqWindow& f, const SeqWindow& g, std::uint64_t n) {
  return cesaro_inner(f, g, CesaroMean::single(n)).last();
}

double cesaro_norm_sq(const SeqWindow& f, std::uint64_t n) {
  if (f.size() < n)
    throw std::invalid_argument("cesaro_norm_sq: window too short for cutoff " + std::to_string(n));
  return dot_range(f, f, 0, n).real() / static_cast<double>(n);
}

SeqWindow shift(const SeqWindow& f, std::uint64_t m) {
  if (m == 0) return f;
  return f.drop_front(m);
}

double eperiod_defect(const SeqWindow& f, std::uint64_t k, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("eperiod_defect: N must be >= 1");
  if (f.size() < n + k)
    throw std::invalid_argument("eperiod_defect: window of length " + std::to_string(f.size()) +
                                " does not cover N+k=" + std::to_string(n + k));
  if (f.is_small()) {
    auto v = f.small();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int d = v[i + k] - v[i];
      s += d * d;
    }
    return static_cast<double>(s) / static_cast<double>(n);
  }
  CompensatedSum s;
  for (std::size_t i = 0; i < n; ++i) s.add(std::norm(f[i + k] - f[i]));
  return s.value() / static_cast<double>(n);
}

SeqWindow block_eperiodic(std::uint64_t k, const IndexRule& m_seq, const IndexRule& n_seq,
                          std::uint64_t length) {
  if (k < 1) throw std::invalid_argument("block_eperiodic: k must be >= 1");
  if (length < 1) throw std::invalid_argument("block_eperiodic: length must be >= 1");
  std::vector<std::int8_t> alpha(k, 1), beta(k, 0);
  alpha[0] = 0;
  beta[0] = 1;
  std::vector<std::int8_t> out;
  out.reserve(length);
  auto emit = [&](const std::vector<std::int8_t>& block, std::uint64_t reps) {
    for (std::uint64_t r = 0; r < reps && out.size() < length; ++r)
      for (auto v : block) {
        if (out.size() == length) break;
        out.push_back(v);
      }
  };
  for (std::uint64_t j = 1; out.size() < length; ++j) {
    std::uint64_t mj = m_seq(j), nj = n_seq(j);
    if (mj < 1 || nj < 1) throw std::invalid_argument("block_eperiodic: m_j and n_j must be positive");
    emit(alpha, mj);
    emit(beta, nj);
  }
  return SeqWindow::from_small(1, std::move(out));
}

namespace {

/// frac(theta) as a Q0.128 fixed-point number. Exact for any long double
/// whose fractional part is at least 2^-64.
u128 to_fixed(long double theta) {
  long double frac = theta - std::floor(theta);
  long double scaled = std::ldexp(frac, 64);
  auto hi = static_cast<std::uint64_t>(scaled);
  long double rest = std::ldexp(scaled - static_cast<long double>(hi), 64);
  auto lo = static_cast<std::uint64_t>(rest);
  return (u128{hi} << 64) | lo;
}

double fixed_to_unit(u128 x) {
  return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(x >> 64)), -64) +
         std::ldexp(static_cast<double>(static_cast<std::uint64_t>(x)), -128);
}

std::complex<double> unit(double phase) {
  // Reduce to [-1/2, 1/2) so the angle passed to sin/cos is small.
  double r = phase - std::round(phase);
  return std::polar(1.0, 2.0 * std::numbers::pi * r);
}

} // namespace

double quadratic_phase(std::uint64_t n, long double theta) {
  u128 sq = u128{n} * n;
  return fixed_to_unit(sq * to_fixed(theta));
}

double linear_phase(std::uint64_t n, long double theta) {
  return fixed_to_unit(u128{n} * to_fixed(theta));
}

SeqWindow sampler(const PhaseFunction& phase, std::uint64_t start, std::uint64_t length) {
  if (start < 1) throw std::invalid_argument("sampler: start must be >= 1");
  if (length < 1) throw std::invalid_argument("sampler: length must be >= 1");
  if (start > (std::uint64_t{1} << 62) - length) throw std::overflow_error("sampler: range overflow");
  std::vector<std::complex<double>> out(length);
  const u128 theta = to_fixed(phase.theta);
  parallel_chunks(length, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t n = start + i;
      double ph = 0.0;
      switch (phase.kind) {
        case PhaseKind::exp_sqrt: {
          long double s = std::sqrt(static_cast<long double>(n));
          ph = static_cast<double>(s - std::floor(s));
          break;
        }
        case PhaseKind::exp_linear: ph = fixed_to_unit(u128{n} * theta); break;
        case PhaseKind::exp_quadratic: ph = fixed_to_unit(u128{n} * n * theta); break;
      }
      out[i] = unit(ph);
    }
  });
  // |e(x)| = 1 up to rounding; certify a bound that covers the rounding.
  return SeqWindow::from_complex(start, std::move(out), 1.0 + 1e-15);
}

} // namespace mdlab
