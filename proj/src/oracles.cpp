#include "mdlab/oracles.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mdlab::oracle {

TrialValues trial_values(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("trial_values: n must be >= 1");
  TrialValues v{1, 1, 1, 1};
  auto take = [&](std::uint64_t, unsigned e) {
    v.mobius = e >= 2 ? 0 : -v.mobius;
    if (e % 2) v.liouville = -v.liouville;
    if (e >= 2) v.squarefree = 0;
    if (e >= 3) v.cubefree = 0;
  };
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) take(d, e);
  }
  if (n > 1) take(n, 1);
  return v;
}

int trial_mobius(std::uint64_t n) { return trial_values(n).mobius; }

std::int64_t second_moment_brute(const SeqWindow& mu, std::uint64_t N, std::uint64_t h, std::uint64_t k) {
  std::int64_t total = 0;
  for (std::uint64_t n = 1; n <= N; ++n) {
    std::int64_t s = 0;
    for (std::uint64_t l = 1; l <= h; ++l) s += static_cast<std::int64_t>(mu.at(n + k * l).real());
    total += s * s;
  }
  return total;
}

std::set<std::string> string_set_census(const SeqWindow& f, unsigned L, std::uint64_t N) {
  std::string s;
  s.reserve(N);
  for (std::uint64_t n = 1; n <= N; ++n) s.push_back(f.at(n).real() != 0.0 ? '1' : '0');
  std::set<std::string> out;
  for (std::uint64_t i = 0; i + L <= N; ++i) out.insert(s.substr(i, L));
  return out;
}

double exact_trig_integral(const std::vector<std::complex<double>>& c, const std::vector<double>& w, double a,
                           double b) {
  std::complex<double> total = 0.0;
  const std::complex<double> I(0.0, 1.0);
  for (std::size_t m = 0; m < c.size(); ++m)
    for (std::size_t n = 0; n < c.size(); ++n) {
      const double d = w[m] - w[n];
      std::complex<double> integral;
      if (std::abs(d) < 1e-300)
        integral = b - a;
      else
        integral = (std::exp(I * (d * b)) - std::exp(I * (d * a))) / (I * d);
      total += c[m] * std::conj(c[n]) * integral;
    }
  return total.real();
}

std::uint64_t coprime_count(std::uint64_t x, std::uint64_t k) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2, r = k; r > 1; ++p) {
    if (r % p) continue;
    primes.push_back(p);
    while (r % p == 0) r /= p;
  }
  std::int64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << primes.size()); ++mask) {
    std::uint64_t d = 1;
    int sign = 1;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) {
        d *= primes[i];
        sign = -sign;
      }
    total += sign * static_cast<std::int64_t>(x / d);
  }
  return static_cast<std::uint64_t>(total);
}

double prime_reciprocal_sum(std::uint64_t x) {
  double s = 0.0;
  for (std::uint64_t n = 2; n <= x; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) s += 1.0 / static_cast<double>(n);
  }
  return s;
}

double divisor_decomposition_rhs(std::uint64_t X, std::uint64_t h, std::uint64_t k) {
  double total = 0.0;
  for (std::uint64_t d = 1; d <= k; ++d) {
    if (k % d) continue;
    const std::uint64_t q = k / d;
    double inner_d = 0.0;
    for (std::uint64_t a = 1; a <= q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      // x runs over integers with X/d <= x <= 2X/d.
      for (std::uint64_t x = (X + d - 1) / d; x <= 2 * X / d; ++x) {
        std::int64_t s = 0;
        for (std::uint64_t n = x; n <= x + h * q; ++n)
          if (n % q == a % q && std::gcd(n, k) == 1) s += trial_mobius(n);
        inner_d += static_cast<double>(s * s);
      }
    }
    total += static_cast<double>(d) * inner_d;
  }
  return total / static_cast<double>(k);
}

} // namespace mdlab::oracle
