#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mdlab/seq_window.hpp"

namespace mdlab {

/// Fast-path tag for specs the segmented sieves know how to produce directly.
enum class SpecKind { one, mobius, liouville, power_free, custom };

/// A 1-bounded multiplicative function given by its values on prime powers,
/// optionally restricted to integers coprime to a modulus.
struct MultiplicativeSpec {
  using Rule = std::function<std::complex<double>(std::uint64_t p, unsigned e)>;

  std::string name;
  Rule value_at_prime_power;
  /// Restriction 1_{(n,k)=1}; 1 means unrestricted.
  std::uint64_t coprime_to = 1;
  SpecKind kind = SpecKind::custom;
  unsigned power = 0;          // r for power_free
  bool small_valued = false;   // every value lies in {-1, 0, 1}

  /// f(p^e) including the coprimality restriction; f(p^0) = 1.
  std::complex<double> operator()(std::uint64_t p, unsigned e) const;
  std::complex<double> at_prime(std::uint64_t p) const { return (*this)(p, 1); }

  /// Same function multiplied by 1_{(n,k)=1} (restrictions compose by lcm).
  MultiplicativeSpec coprime(std::uint64_t k) const;

  static MultiplicativeSpec one();
  static MultiplicativeSpec mobius();
  static MultiplicativeSpec liouville();
  static MultiplicativeSpec power_free(unsigned r);
  /// n -> n^{it}, completely multiplicative: p^e -> exp(i t e log p).
  static MultiplicativeSpec archimedean(double t);
  static MultiplicativeSpec custom(std::string name, Rule rule, bool small_valued = false);
};

struct SieveOptions {
  std::size_t block_size = std::size_t{1} << 20;
};

/// All primes p <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint64_t limit);
/// floor(sqrt(n)) computed exactly.
std::uint64_t isqrt(std::uint64_t n);
/// floor(n^(1/r)) computed exactly.
std::uint64_t iroot(std::uint64_t n, unsigned r);

/// mu(n) for n in [start, start + length).
SeqWindow mobius_sieve(std::uint64_t start, std::uint64_t length, const SieveOptions& opts = {});
/// Indicator of r-th power-free n; r >= 2.
SeqWindow power_free_sieve(std::uint64_t start, std::uint64_t length, unsigned r,
                           const SieveOptions& opts = {});
/// lambda(n) = (-1)^Omega(n).
SeqWindow liouville_sieve(std::uint64_t start, std::uint64_t length, const SieveOptions& opts = {});
/// Materializes any spec. Small-valued specs come back as signed-byte windows.
SeqWindow evaluate_spec(const MultiplicativeSpec& spec, std::uint64_t start, std::uint64_t length,
                        const SieveOptions& opts = {});

/// Smallest-prime-factor table for n <= limit. Verification oracle only;
/// limit is capped at 10^7.
class FactorizationOracle {
 public:
  static constexpr std::uint64_t max_limit = 10'000'000;

  explicit FactorizationOracle(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  /// (p, e) pairs in ascending p.
  std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) const;

  int mobius(std::uint64_t n) const;
  int liouville(std::uint64_t n) const;
  int power_free(std::uint64_t n, unsigned r) const;
  std::complex<double> evaluate(const MultiplicativeSpec& spec, std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

} // namespace mdlab
