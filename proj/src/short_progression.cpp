#include "mdlab/short_progression.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdlab/parallel.hpp"
#include "mdlab/sieve.hpp"
#include "mdlab/summation.hpp"

namespace mdlab {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    out.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) out.push_back(k);
  return out;
}

void require_cover(const SeqWindow& w, std::uint64_t last, const char* who) {
  if (w.start() != 1 || w.end() <= last)
    throw std::invalid_argument(std::string(who) + ": window must start at 1 and cover n=" +
                                std::to_string(last));
}

} // namespace

std::uint64_t euler_phi(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be >= 1");
  std::uint64_t phi = k;
  for (auto p : prime_divisors(k)) phi = phi / p * (p - 1);
  return phi;
}

double moment_bound(std::uint64_t h, std::uint64_t k) {
  if (h < 3) throw std::invalid_argument("moment_bound: needs h >= 3 (log log h <= 0 below)");
  if (k < 1) throw std::invalid_argument("moment_bound: k must be >= 1");
  const double hd = static_cast<double>(h);
  return hd * hd * (static_cast<double>(k) / static_cast<double>(euler_phi(k))) *
         std::log(std::log(hd)) / std::log(hd);
}

std::int64_t sliding_sum_squares(const SeqWindow& f, std::uint64_t N, std::uint64_t h,
                                 std::uint64_t k) {
  if (h < 1 || k < 1 || N < 1) throw std::invalid_argument("sliding_sum_squares: N, h, k must be >= 1");
  require_cover(f, N + h * k, "second_moment");
  auto v = f.small();
  // v[n - 1] = f(n)
  std::vector<std::int64_t> partial(thread_count(), 0);
  parallel_chunks(N, [&](std::size_t b0, std::size_t b1, std::size_t c) {
    const std::uint64_t first = b0 + 1, last = b1;  // n range [first, last]
    std::vector<std::int64_t> ring(k, 0);
    std::int64_t total = 0;
    for (std::uint64_t n = first; n <= last; ++n) {
      std::int64_t& inner = ring[(n - first) % k];
      if (n < first + k) {
        inner = 0;
        for (std::uint64_t l = 1; l <= h; ++l) inner += v[n + k * l - 1];
      } else {
        // inner(n) = inner(n - k) - f(n) + f(n + hk)
        inner += v[n + h * k - 1] - v[n - 1];
      }
      total += inner * inner;
    }
    partial[c] = total;
  }, 1 << 18);
  return std::accumulate(partial.begin(), partial.end(), std::int64_t{0});
}

MomentReport second_moment(std::uint64_t N, std::uint64_t h, std::uint64_t k,
                           const std::optional<SeqWindow>& mu) {
  if (h < 2) throw std::invalid_argument("second_moment: h must be >= 2, got " + std::to_string(h));
  if (k < 1) throw std::invalid_argument("second_moment: k must be >= 1");
  if (N < 1) throw std::invalid_argument("second_moment: N must be >= 1");
  SeqWindow window = mu ? *mu : mobius_sieve(1, N + h * k);
  MomentReport r;
  r.N = N;
  r.h = h;
  r.k = k;
  r.sum_squares = sliding_sum_squares(window, N, h, k);
  r.S = static_cast<double>(r.sum_squares) / static_cast<double>(N);
  if (h >= 3) {
    r.bound = moment_bound(h, k);
    r.ratio = r.S / *r.bound;
  }
  r.chowla_ratio = r.S / static_cast<double>(h);
  return r;
}

double averaged_shift_norm(const SeqWindow& f, std::uint64_t h, std::uint64_t k, std::uint64_t N) {
  if (h < 1 || k < 1 || N < 1) throw std::invalid_argument("averaged_shift_norm: N, h, k must be >= 1");
  const double hd = static_cast<double>(h);
  if (f.is_small()) {
    return static_cast<double>(sliding_sum_squares(f, N, h, k)) / (hd * hd * static_cast<double>(N));
  }
  require_cover(f, N + h * k, "averaged_shift_norm");
  CompensatedSum total;
  for (std::uint64_t n = 1; n <= N; ++n) {
    CompensatedComplexSum inner;
    for (std::uint64_t l = 1; l <= h; ++l) inner.add(f[n + k * l - 1]);
    total.add(std::norm(inner.value()));
  }
  return total.value() / (hd * hd * static_cast<double>(N));
}

AdmissibleDecision admissible_pair(std::uint64_t k, std::uint64_t h, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("admissible_pair: epsilon must lie in (0, 1)");
  if (k < 1) throw std::invalid_argument("admissible_pair: k must be >= 1");
  AdmissibleDecision d;
  d.k = k;
  d.h = h;
  d.epsilon = epsilon;
  CompensatedSum lhs, rhs;
  for (auto p : prime_divisors(k)) lhs.add(1.0 / static_cast<double>(p));
  for (auto p : primes_up_to(h)) rhs.add(1.0 / static_cast<double>(p));
  d.lhs = lhs.value();
  d.prime_sum = rhs.value();
  d.rhs = (1.0 - epsilon) * d.prime_sum;
  d.admissible = d.lhs <= d.rhs;
  return d;
}

DivisorDecomposition divisor_decomposition(std::uint64_t X, std::uint64_t h, std::uint64_t k,
                                           const std::optional<SeqWindow>& mu) {
  if (X < 1 || h < 1 || k < 1)
    throw std::invalid_argument("divisor_decomposition: X, h, k must be >= 1");
  const std::uint64_t last = 2 * X + h * k + k;
  SeqWindow window = mu ? *mu : mobius_sieve(1, last);
  require_cover(window, last, "divisor_decomposition");
  auto v = window.small();
  auto at = [&](std::uint64_t n) -> std::int64_t { return v[n - 1]; };

  DivisorDecomposition out;
  out.X = X;
  out.h = h;
  out.k = k;

  std::int64_t lhs = 0;
  for (std::uint64_t n = X; n <= 2 * X; ++n) {
    std::int64_t s = 0;
    for (std::uint64_t l = 1; l <= h; ++l) s += at(n + k * l);
    lhs += s * s;
  }

  // g(n) = mu(n) 1_{(n,k)=1}
  const auto k_primes = prime_divisors(k);
  std::vector<std::int64_t> g(last + 1, 0);
  for (std::uint64_t n = 1; n <= last; ++n) g[n] = at(n);
  for (auto p : k_primes)
    for (std::uint64_t n = p; n <= last; n += p) g[n] = 0;

  std::int64_t weighted = 0;  // sum_d d * T_d
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const std::uint64_t q = k / d;
    const std::uint64_t x_lo = (X + d - 1) / d, x_hi = 2 * X / d;
    const std::uint64_t n_max = x_hi + h * q;
    // pre[n] = sum_{m <= n, m = n mod q} g(m)
    std::vector<std::int64_t> pre(n_max + 1, 0);
    for (std::uint64_t n = 1; n <= n_max; ++n) pre[n] = g[n] + (n > q ? pre[n - q] : 0);
    std::int64_t t_d = 0;
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const std::uint64_t ra = a % q;
      for (std::uint64_t x = x_lo; x <= x_hi; ++x) {
        const std::uint64_t top = x + h * q;
        std::uint64_t n_lo = x + (ra + q - x % q) % q;
        if (n_lo > top) continue;
        std::uint64_t n_hi = top - (top % q + q - ra) % q;
        std::int64_t s = pre[n_hi] - (n_lo > q ? pre[n_lo - q] : 0);
        t_d += s * s;
      }
    }
    weighted += static_cast<std::int64_t>(d) * t_d;
  }
  out.lhs = static_cast<double>(lhs);
  out.rhs = static_cast<double>(weighted) / static_cast<double>(k);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

} // namespace mdlab
