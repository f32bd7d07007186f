#include "mdlab/sieve.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mdlab/parallel.hpp"

namespace mdlab {

namespace {

constexpr std::uint64_t max_index = std::uint64_t{1} << 62;

void check_range(std::uint64_t start, std::uint64_t length) {
  if (start < 1) throw std::invalid_argument("sieve: start must be >= 1");
  if (length < 1) throw std::invalid_argument("sieve: length must be >= 1");
  if (start > max_index || length > max_index - start)
    throw std::overflow_error("sieve: range [" + std::to_string(start) + ", start+" +
                              std::to_string(length) + ") exceeds 2^62");
  if (length > std::numeric_limits<std::size_t>::max() / 16)
    throw std::overflow_error("sieve: window too large to materialize");
}

std::uint64_t first_multiple_at_least(std::uint64_t d, std::uint64_t lo) {
  return (lo + d - 1) / d * d;
}

/// Runs fill(lo, hi, out) over blocks of [start, start+length). out points at
/// the slot for lo.
template <class T, class Fill>
std::vector<T> run_segmented(std::uint64_t start, std::uint64_t length, const SieveOptions& opts,
                             Fill fill) {
  std::size_t block = std::max<std::size_t>(opts.block_size, 1);
  std::vector<T> out(length);
  std::size_t blocks = (length + block - 1) / block;
  parallel_chunks(
      blocks,
      [&](std::size_t b0, std::size_t b1, std::size_t) {
        for (std::size_t b = b0; b < b1; ++b) {
          std::uint64_t lo = start + b * block;
          std::uint64_t hi = std::min<std::uint64_t>(lo + block, start + length);
          fill(lo, hi, out.data() + (lo - start));
        }
      },
      1);
  return out;
}

bool mul_overflows(std::uint64_t a, std::uint64_t b, std::uint64_t& out) {
  return __builtin_mul_overflow(a, b, &out);
}

} // namespace

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && r > n / r) --r;
  while (r + 1 <= n / (r + 1)) ++r;
  return r;
}

std::uint64_t iroot(std::uint64_t n, unsigned r) {
  if (r == 0) throw std::invalid_argument("iroot: r must be >= 1");
  if (r == 1) return n;
  auto x = static_cast<std::uint64_t>(std::pow(static_cast<long double>(n), 1.0L / r));
  auto pow_leq = [&](std::uint64_t b) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < r; ++i)
      if (mul_overflows(acc, b, acc)) return false;
    return acc <= n;
  };
  while (x > 0 && !pow_leq(x)) --x;
  while (pow_leq(x + 1)) ++x;
  return x;
}

std::vector<std::uint32_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  if (limit > std::numeric_limits<std::uint32_t>::max())
    throw std::overflow_error("primes_up_to: limit exceeds 32-bit range");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

// --- MultiplicativeSpec -----------------------------------------------------

std::complex<double> MultiplicativeSpec::operator()(std::uint64_t p, unsigned e) const {
  if (e == 0) return 1.0;
  if (coprime_to > 1 && coprime_to % p == 0) return 0.0;
  return value_at_prime_power(p, e);
}

MultiplicativeSpec MultiplicativeSpec::coprime(std::uint64_t k) const {
  if (k < 1) throw std::invalid_argument("coprime: k must be >= 1");
  MultiplicativeSpec s = *this;
  s.coprime_to = std::lcm(coprime_to, k);
  if (k > 1) s.name = name + "*1_(n," + std::to_string(k) + ")=1";
  return s;
}

MultiplicativeSpec MultiplicativeSpec::one() {
  MultiplicativeSpec s;
  s.name = "one";
  s.value_at_prime_power = [](std::uint64_t, unsigned) { return std::complex<double>(1.0); };
  s.kind = SpecKind::one;
  s.small_valued = true;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::mobius() {
  MultiplicativeSpec s;
  s.name = "mobius";
  s.value_at_prime_power = [](std::uint64_t, unsigned e) {
    return std::complex<double>(e == 1 ? -1.0 : 0.0);
  };
  s.kind = SpecKind::mobius;
  s.small_valued = true;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::liouville() {
  MultiplicativeSpec s;
  s.name = "liouville";
  s.value_at_prime_power = [](std::uint64_t, unsigned e) {
    return std::complex<double>(e % 2 ? -1.0 : 1.0);
  };
  s.kind = SpecKind::liouville;
  s.small_valued = true;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::power_free(unsigned r) {
  if (r < 2) throw std::invalid_argument("power_free: r must be >= 2");
  MultiplicativeSpec s;
  s.name = "mu_" + std::to_string(r);
  s.value_at_prime_power = [r](std::uint64_t, unsigned e) {
    return std::complex<double>(e < r ? 1.0 : 0.0);
  };
  s.kind = SpecKind::power_free;
  s.power = r;
  s.small_valued = true;
  return s;
}

MultiplicativeSpec MultiplicativeSpec::archimedean(double t) {
  MultiplicativeSpec s;
  s.name = "n^(i*" + std::to_string(t) + ")";
  s.value_at_prime_power = [t](std::uint64_t p, unsigned e) {
    return std::polar(1.0, t * e * std::log(static_cast<double>(p)));
  };
  return s;
}

MultiplicativeSpec MultiplicativeSpec::custom(std::string name, Rule rule, bool small_valued) {
  MultiplicativeSpec s;
  s.name = std::move(name);
  s.value_at_prime_power = std::move(rule);
  s.small_valued = small_valued;
  return s;
}

// --- sieves -----------------------------------------------------------------

SeqWindow mobius_sieve(std::uint64_t start, std::uint64_t length, const SieveOptions& opts) {
  check_range(start, length);
  const std::uint64_t last = start + length - 1;
  const auto primes = primes_up_to(isqrt(last));
  auto values = run_segmented<std::int8_t>(
      start, length, opts, [&](std::uint64_t lo, std::uint64_t hi, std::int8_t* out) {
        const std::size_t len = hi - lo;
        std::vector<std::uint64_t> prod(len, 1);
        std::fill(out, out + len, std::int8_t{1});
        for (std::uint64_t p : primes) {
          if (p >= hi) break;
          for (std::uint64_t m = first_multiple_at_least(p, lo); m < hi; m += p) {
            out[m - lo] = static_cast<std::int8_t>(-out[m - lo]);
            prod[m - lo] *= p;
          }
          const std::uint64_t sq = p * p;
          for (std::uint64_t m = first_multiple_at_least(sq, lo); m < hi; m += sq) out[m - lo] = 0;
        }
        for (std::size_t i = 0; i < len; ++i)
          if (out[i] != 0 && prod[i] != lo + i) out[i] = static_cast<std::int8_t>(-out[i]);
      });
  return SeqWindow::from_small(start, std::move(values));
}

SeqWindow power_free_sieve(std::uint64_t start, std::uint64_t length, unsigned r,
                           const SieveOptions& opts) {
  if (r < 2) throw std::invalid_argument("power_free_sieve: r must be >= 2, got " + std::to_string(r));
  check_range(start, length);
  const std::uint64_t last = start + length - 1;
  const auto primes = primes_up_to(iroot(last, r));
  auto values = run_segmented<std::int8_t>(
      start, length, opts, [&](std::uint64_t lo, std::uint64_t hi, std::int8_t* out) {
        std::fill(out, out + (hi - lo), std::int8_t{1});
        for (std::uint64_t p : primes) {
          std::uint64_t pr = 1;
          for (unsigned i = 0; i < r; ++i) pr *= p;  // p^r <= last by construction
          for (std::uint64_t m = first_multiple_at_least(pr, lo); m < hi; m += pr) out[m - lo] = 0;
        }
      });
  return SeqWindow::from_small(start, std::move(values));
}

SeqWindow liouville_sieve(std::uint64_t start, std::uint64_t length, const SieveOptions& opts) {
  check_range(start, length);
  const std::uint64_t last = start + length - 1;
  const auto primes = primes_up_to(isqrt(last));
  auto values = run_segmented<std::int8_t>(
      start, length, opts, [&](std::uint64_t lo, std::uint64_t hi, std::int8_t* out) {
        const std::size_t len = hi - lo;
        std::vector<std::uint64_t> prod(len, 1);
        std::fill(out, out + len, std::int8_t{1});
        for (std::uint64_t p : primes) {
          if (p >= hi) break;
          std::uint64_t pe = p;
          while (pe < hi) {
            for (std::uint64_t m = first_multiple_at_least(pe, lo); m < hi; m += pe) {
              out[m - lo] = static_cast<std::int8_t>(-out[m - lo]);
              prod[m - lo] *= p;
            }
            if (mul_overflows(pe, p, pe)) break;
          }
        }
        // Whatever is left of n is a single prime above sqrt(n).
        for (std::size_t i = 0; i < len; ++i)
          if (prod[i] != lo + i) out[i] = static_cast<std::int8_t>(-out[i]);
      });
  return SeqWindow::from_small(start, std::move(values));
}

namespace {

SeqWindow apply_coprime_mask(const SeqWindow& w, std::uint64_t k) {
  if (k <= 1) return w;
  std::vector<std::uint64_t> prime_divisors;
  std::uint64_t rest = k;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    prime_divisors.push_back(p);
    while (rest % p == 0) rest /= p;
  }
  if (rest > 1) prime_divisors.push_back(rest);
  const std::uint64_t lo = w.start(), hi = w.end();
  if (w.is_small()) {
    std::vector<std::int8_t> v(w.small().begin(), w.small().end());
    for (auto p : prime_divisors)
      for (std::uint64_t m = first_multiple_at_least(p, lo); m < hi; m += p) v[m - lo] = 0;
    return SeqWindow::from_small(lo, std::move(v));
  }
  std::vector<std::complex<double>> v(w.complex_values().begin(), w.complex_values().end());
  for (auto p : prime_divisors)
    for (std::uint64_t m = first_multiple_at_least(p, lo); m < hi; m += p) v[m - lo] = 0.0;
  return SeqWindow::from_complex(lo, std::move(v), w.bound());
}

} // namespace

SeqWindow evaluate_spec(const MultiplicativeSpec& spec, std::uint64_t start, std::uint64_t length,
                        const SieveOptions& opts) {
  check_range(start, length);
  switch (spec.kind) {
    case SpecKind::one:
      return apply_coprime_mask(SeqWindow::from_small(start, std::vector<std::int8_t>(length, 1)),
                                spec.coprime_to);
    case SpecKind::mobius:
      return apply_coprime_mask(mobius_sieve(start, length, opts), spec.coprime_to);
    case SpecKind::liouville:
      return apply_coprime_mask(liouville_sieve(start, length, opts), spec.coprime_to);
    case SpecKind::power_free:
      return apply_coprime_mask(power_free_sieve(start, length, spec.power, opts), spec.coprime_to);
    case SpecKind::custom:
      break;
  }

  const std::uint64_t last = start + length - 1;
  const auto primes = primes_up_to(isqrt(last));
  auto checked = [&](std::uint64_t p, unsigned e) {
    auto v = spec(p, e);
    if (std::abs(v) > 1.0 + 1e-12)
      throw std::invalid_argument("evaluate_spec: |" + spec.name + "(" + std::to_string(p) + "^" +
                                  std::to_string(e) + ")| > 1");
    return v;
  };
  auto values = run_segmented<std::complex<double>>(
      start, length, opts, [&](std::uint64_t lo, std::uint64_t hi, std::complex<double>* out) {
        const std::size_t len = hi - lo;
        std::vector<std::uint64_t> rem(len);
        for (std::size_t i = 0; i < len; ++i) {
          rem[i] = lo + i;
          out[i] = 1.0;
        }
        for (std::uint64_t p : primes) {
          if (p >= hi) break;
          for (std::uint64_t m = first_multiple_at_least(p, lo); m < hi; m += p) {
            unsigned e = 0;
            auto& r = rem[m - lo];
            while (r % p == 0) {
              r /= p;
              ++e;
            }
            out[m - lo] *= checked(p, e);
          }
        }
        for (std::size_t i = 0; i < len; ++i)
          if (rem[i] > 1) out[i] *= checked(rem[i], 1);
      });
  for (auto& v : values) {
    // Products of unimodular values drift off the unit circle by ulps.
    double a = std::abs(v);
    if (a > 1.0) v /= a;
  }
  SeqWindow w = SeqWindow::from_complex(start, std::move(values), 1.0);
  if (spec.small_valued) {
    std::vector<std::int8_t> small(length);
    for (std::size_t i = 0; i < length; ++i) {
      auto v = w[i];
      if (v.imag() != 0.0 || (v.real() != 0.0 && v.real() != 1.0 && v.real() != -1.0))
        throw std::invalid_argument("evaluate_spec: " + spec.name +
                                    " declared small-valued but produced a non {-1,0,1} value");
      small[i] = static_cast<std::int8_t>(v.real());
    }
    w = SeqWindow::from_small(start, std::move(small));
  }
  return apply_coprime_mask(w, spec.coprime_to);
}

// --- FactorizationOracle ----------------------------------------------------

FactorizationOracle::FactorizationOracle(std::uint64_t limit) : limit_(limit) {
  if (limit > max_limit)
    throw std::invalid_argument("FactorizationOracle: limit " + std::to_string(limit) +
                                " exceeds cap 10^7");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

std::uint32_t FactorizationOracle::smallest_prime_factor(std::uint64_t n) const {
  if (n < 2 || n > limit_)
    throw std::out_of_range("FactorizationOracle: n=" + std::to_string(n) + " outside [2, limit]");
  return spf_[n];
}

std::vector<std::pair<std::uint64_t, unsigned>> FactorizationOracle::factor(std::uint64_t n) const {
  if (n < 1 || n > limit_)
    throw std::out_of_range("FactorizationOracle: n=" + std::to_string(n) + " outside [1, limit]");
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

int FactorizationOracle::mobius(std::uint64_t n) const {
  int v = 1;
  for (auto [p, e] : factor(n)) {
    if (e > 1) return 0;
    v = -v;
  }
  return v;
}

int FactorizationOracle::liouville(std::uint64_t n) const {
  unsigned omega = 0;
  for (auto [p, e] : factor(n)) omega += e;
  return omega % 2 ? -1 : 1;
}

int FactorizationOracle::power_free(std::uint64_t n, unsigned r) const {
  for (auto [p, e] : factor(n))
    if (e >= r) return 0;
  return 1;
}

std::complex<double> FactorizationOracle::evaluate(const MultiplicativeSpec& spec,
                                                   std::uint64_t n) const {
  std::complex<double> v = 1.0;
  for (auto [p, e] : factor(n)) v *= spec(p, e);
  return v;
}

} // namespace mdlab
