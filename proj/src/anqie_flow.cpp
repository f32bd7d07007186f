#include "mdlab/anqie_flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mdlab/correlation.hpp"
#include "mdlab/sieve.hpp"

namespace mdlab {

namespace {

constexpr unsigned dense_limit = 22;

std::span<const std::int8_t> binary_prefix(const SeqWindow& f, std::uint64_t N, const char* who) {
  if (f.start() != 1 || f.size() < N)
    throw std::invalid_argument(std::string(who) + ": window must start at 1 and cover N=" + std::to_string(N));
  if (!f.is_small()) throw std::invalid_argument(std::string(who) + ": sequence must be {0,1}-valued");
  auto v = f.small().first(N);
  for (auto x : v)
    if (x != 0 && x != 1) throw std::invalid_argument(std::string(who) + ": sequence must be {0,1}-valued");
  return v;
}

} // namespace

std::uint64_t WindowCensus::total() const {
  std::uint64_t s = 0;
  for (const auto& [w, c] : counts) s += c;
  return s;
}

WindowCensus window_census(const SeqWindow& f, unsigned L, std::uint64_t N) {
  if (L < 1 || L > 32) throw std::invalid_argument("window_census: L must lie in [1, 32]");
  if (N < L) throw std::invalid_argument("window_census: N must be >= L");
  auto v = binary_prefix(f, N, "window_census");
  WindowCensus c;
  c.L = L;
  c.N = N;
  const std::uint64_t mask = (std::uint64_t{1} << L) - 1;
  std::uint64_t w = 0;
  for (unsigned i = 0; i + 1 < L; ++i) w = (w << 1) | static_cast<std::uint64_t>(v[i]);

  if (L <= dense_limit) {
    std::vector<std::uint32_t> dense(std::size_t{1} << L, 0);
    for (std::uint64_t n = L - 1; n < N; ++n) {
      w = ((w << 1) | static_cast<std::uint64_t>(v[n])) & mask;
      ++dense[w];
    }
    for (std::uint64_t x = 0; x < dense.size(); ++x)
      if (dense[x]) c.counts.emplace_back(x, dense[x]);
  } else {
    std::unordered_map<std::uint64_t, std::uint64_t> sparse;
    for (std::uint64_t n = L - 1; n < N; ++n) {
      w = ((w << 1) | static_cast<std::uint64_t>(v[n])) & mask;
      ++sparse[w];
    }
    c.counts.assign(sparse.begin(), sparse.end());
    std::sort(c.counts.begin(), c.counts.end());
  }
  c.distinct_count = c.counts.size();
  return c;
}

EntropyProfile entropy_profile(const SeqWindow& f, unsigned L_lo, unsigned L_hi, std::uint64_t N) {
  if (L_lo < 1 || L_lo > L_hi) throw std::invalid_argument("entropy_profile: need 1 <= L_lo <= L_hi");
  EntropyProfile p;
  p.N = N;
  for (unsigned L = L_lo; L <= L_hi; ++L) {
    const auto c = window_census(f, L, N);
    p.points.push_back({L, c.distinct_count, std::log2(static_cast<double>(c.distinct_count)) / L});
    if (p.points.size() > 1 && c.distinct_count < p.points[p.points.size() - 2].distinct_count)
      p.log_counts_monotone = false;
  }
  return p;
}

bool mu2_admissible(std::uint64_t window, unsigned L, const std::vector<std::uint64_t>& primes) {
  for (auto p : primes) {
    const std::uint64_t q = p * p;
    bool found = false;
    for (std::uint64_t r = 0; r < q && !found; ++r) {
      bool zeros = true;
      for (std::uint64_t pos = r; pos < L; pos += q)
        if ((window >> (L - 1 - pos)) & 1) {
          zeros = false;
          break;
        }
      found = zeros;
    }
    if (!found) return false;
  }
  return true;
}

ProjectionRigidity projection_rigidity(std::uint64_t i, std::uint64_t l, unsigned j, std::uint64_t N,
                                       const std::optional<SeqWindow>& mu2, std::uint64_t oracle_cutoff) {
  if (N < 1) throw std::invalid_argument("projection_rigidity: N must be >= 1");
  ProjectionRigidity r;
  r.i = i;
  r.l = l;
  r.j = j;
  const std::uint64_t nj = rigidity_sequence(2, j);
  if (__builtin_mul_overflow(l, nj, &r.lag)) throw std::overflow_error("projection_rigidity: l * n_j overflows");
  if (l == 0) return r;
  const std::uint64_t reach = i + r.lag + N;
  const SeqWindow w = mu2 ? *mu2 : power_free_sieve(1, reach, 2);
  if (w.start() != 1 || w.size() < reach)
    throw std::invalid_argument("projection_rigidity: mu^2 window must start at 1 and cover " +
                                std::to_string(reach));
  auto v = w.small();
  std::uint64_t differ = 0;
  // Offsets are zero-based: value at n lives at index n - 1.
  for (std::uint64_t n = 1; n <= N; ++n) differ += v[i + n - 1] != v[i + r.lag + n - 1];
  r.empirical = static_cast<double>(differ) / static_cast<double>(N);
  r.closed_form = rigidity_closed_form(2, r.lag, oracle_cutoff);
  return r;
}

AveragedRigidity averaged_rigidity(std::uint64_t i, unsigned j, std::uint64_t h, std::uint64_t N,
                                   const std::optional<SeqWindow>& mu2, std::uint64_t oracle_cutoff) {
  if (h < 1) throw std::invalid_argument("averaged_rigidity: h must be >= 1");
  AveragedRigidity a;
  a.i = i;
  a.j = j;
  a.h = h;
  const std::uint64_t reach = i + (h - 1) * rigidity_sequence(2, j) + N;
  const SeqWindow w = mu2 ? *mu2 : power_free_sieve(1, reach, 2);
  for (std::uint64_t l = 1; l < h; ++l) {
    const auto r = projection_rigidity(i, l, j, N, w, oracle_cutoff);
    a.empirical += r.empirical;
    a.closed_form += r.closed_form;
  }
  a.empirical /= static_cast<double>(h);
  a.closed_form /= static_cast<double>(h);
  return a;
}

RigidityFloor rigidity_floor(unsigned j, double delta, std::uint64_t oracle_cutoff) {
  if (!(delta > 0.0 && delta <= 1.0)) throw std::invalid_argument("rigidity_floor: delta must lie in (0, 1]");
  RigidityFloor f;
  f.j = j;
  f.delta = delta;
  const std::uint64_t nj = rigidity_sequence(2, j);
  f.h = static_cast<std::uint64_t>(std::floor(std::pow(static_cast<double>(nj), delta) + 1e-9));
  if (f.h < 2) throw std::invalid_argument("rigidity_floor: n_j^delta must be >= 2");
  f.min_closed_form = std::numeric_limits<double>::infinity();
  for (std::uint64_t l = 1; l <= f.h; ++l) {
    const double v = rigidity_closed_form(2, l * nj, oracle_cutoff);
    if (v < f.min_closed_form) {
      f.min_closed_form = v;
      f.argmin_l = l;
    }
  }
  const double hd = static_cast<double>(f.h);
  f.floor = 1.0 / (std::sqrt(hd) * std::log(hd));
  return f;
}

} // namespace mdlab
