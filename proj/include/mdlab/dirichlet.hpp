#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mdlab/seq_window.hpp"
#include "mdlab/sieve.hpp"
#include "mdlab/trig_sum.hpp"

namespace mdlab {

/// Discrete logarithm in a cyclic subgroup <g> of (Z/qZ)^*. Uses a full
/// table when q <= 10^4, baby-step/giant-step otherwise.
class CyclicLog {
 public:
  CyclicLog(std::uint64_t modulus, std::uint64_t generator, std::uint64_t order);

  std::uint64_t modulus() const { return q_; }
  std::uint64_t generator() const { return g_; }
  std::uint64_t order() const { return n_; }
  /// log_g(x mod q); x must lie in <g>.
  std::uint64_t log(std::uint64_t x) const;

 private:
  std::uint64_t q_, g_, n_;
  std::vector<std::uint32_t> table_;  // x -> log + 1, 0 = absent
  std::uint64_t baby_ = 0;
  std::uint64_t giant_ = 0;  // g^{-baby}
  std::unordered_map<std::uint64_t, std::uint64_t> baby_steps_;
};

/// (Z/kZ)^* as a product of cyclic factors via CRT over prime powers: one
/// factor for each odd p^e (least primitive root), one for 4 (generator -1),
/// two for 2^a with a >= 3 (generators -1 and 5).
class DirichletGroup {
 public:
  static constexpr std::uint64_t max_modulus = 1'000'000;

  explicit DirichletGroup(std::uint64_t k);

  struct Factor {
    std::uint64_t prime = 0;  // p of the component p^e this factor belongs to
    std::uint64_t component_modulus = 0;
    std::uint64_t generator = 0;
    std::uint64_t order = 0;
  };

  std::uint64_t modulus() const { return k_; }
  std::uint64_t size() const { return phi_; }
  /// Group exponent lambda(k) = lcm of factor orders.
  std::uint64_t exponent() const { return exponent_; }
  const std::vector<Factor>& factors() const { return factors_; }
  /// Component moduli p^e of the CRT decomposition.
  std::vector<std::uint64_t> component_moduli() const;

  /// Exponent vector of n over the factors; false if gcd(n, k) > 1.
  bool logs(std::uint64_t n, std::vector<std::uint64_t>& out) const;

 private:
  std::uint64_t k_ = 1, phi_ = 1, exponent_ = 1;
  std::vector<Factor> factors_;
  std::vector<CyclicLog> dlogs_;
  std::vector<std::uint8_t> two_power_kind_;  // per factor: 0 plain, 1 sign of 2^a, 2 the <5> part
};

class DirichletCharacter {
 public:
  DirichletCharacter(std::shared_ptr<const DirichletGroup> group, std::vector<std::uint64_t> exponents);

  std::uint64_t modulus() const { return group_->modulus(); }
  const std::vector<std::uint64_t>& exponents() const { return exponents_; }
  std::vector<std::uint64_t> component_moduli() const { return group_->component_moduli(); }
  std::uint64_t order() const { return order_; }
  bool is_principal() const { return order_ == 1; }
  bool is_real() const { return order_ <= 2; }
  const DirichletGroup& group() const { return *group_; }

  /// chi(n) = e(numerator / exponent) for units; nullopt when gcd(n,k) > 1.
  std::optional<std::uint64_t> phase_numerator(std::uint64_t n) const;
  /// Exact for values in {1, i, -1, -i}; otherwise via polar.
  std::complex<double> operator()(std::uint64_t n) const;
  DirichletCharacter conj() const;
  std::string label() const;

 private:
  std::shared_ptr<const DirichletGroup> group_;
  std::vector<std::uint64_t> exponents_;
  std::uint64_t order_ = 1;
};

/// All phi(k) characters mod k; index 0 is the principal character.
std::vector<DirichletCharacter> characters_mod(std::uint64_t k);

/// max over pairs |sum_{a mod k, (a,k)=1} conj(chi1(a)) chi2(a) - phi(k) [chi1 = chi2]|.
double orthogonality_check(std::uint64_t k);

/// f * chi as a multiplicative spec.
MultiplicativeSpec twist(const MultiplicativeSpec& spec, const DirichletCharacter& chi);

/// Coefficients f(n) chi(n) n^{-sigma}, n in [X, 2X], as a TrigSum in t.
TrigSum dirichlet_trig_sum(const MultiplicativeSpec& spec, const DirichletCharacter& chi,
                           std::uint64_t X, double sigma);

/// F(chi, sigma + it) = sum_{X <= n <= 2X} f(n) chi(n) n^{-sigma - it}.
std::complex<double> dirichlet_polynomial(const MultiplicativeSpec& spec, const DirichletCharacter& chi,
                                          std::uint64_t X, double sigma, double t);

struct MeanSquareReport {
  std::uint64_t k = 0, X = 0;
  double T = 0.0;
  double step = 0.0;  // coarse Simpson step actually used
  std::vector<std::string> characters;
  std::vector<double> per_character;  // int_0^T |F(chi, 1+it)|^2 dt, half-step run
  double total = 0.0;
  double quadrature_error = 0.0;  // |half-step total - full-step total|
};

/// Largest admissible quadrature step for a polynomial supported on [1, n_max]:
/// 1 / (4 log n_max).
double max_quadrature_step(std::uint64_t n_max);

/// Sum over characters mod k of int_0^T |F(chi, 1+it)|^2 dt. step must not
/// exceed max_quadrature_step(2X).
MeanSquareReport mean_square(const MultiplicativeSpec& spec, std::uint64_t k, std::uint64_t X, double T,
                             double step);

struct HybridMeanValue {
  std::uint64_t k = 0, N = 0;
  double T = 0.0, step = 0.0;
  double lhs = 0.0;  // sum_chi int_0^T |sum a_n chi(n) n^{it}|^2 dt
  double rhs = 0.0;  // (phi(k) T + (phi(k)/k) N) sum_{(n,k)=1} |a_n|^2
  double ratio = 0.0;
  double self_convergence = 0.0;  // relative change from halving the step
};

/// coeffs must start at n = 1; N = coeffs.size().
HybridMeanValue hybrid_mean_value(const SeqWindow& coeffs, std::uint64_t k, double T, double step);

/// Random +-1 coefficients on [1, N] from a seeded mt19937_64.
SeqWindow random_sign_coefficients(std::uint64_t N, std::uint64_t seed);

struct HybridSummary {
  std::uint64_t k = 0, N = 0;
  double T = 0.0;
  std::uint64_t base_seed = 0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> ratios;
  double max_ratio = 0.0;
  double max_self_convergence = 0.0;
};

/// Runs hybrid_mean_value over `trials` random sign vectors seeded
/// base_seed, base_seed + 1, ...; step defaults to max_quadrature_step(2N)/8.
HybridSummary hybrid_mean_value_ratio(std::uint64_t N, std::uint64_t k, double T, std::uint64_t trials,
                                      std::uint64_t base_seed, std::optional<double> step = std::nullopt);

struct ParsevalRatio {
  std::uint64_t X = 0, h = 0;
  double step = 0.0;
  double lhs = 0.0;             // (1/X) int_X^{2X} |(1/h) sum_{x<=n<=x+h} a_n|^2 dx, exact
  double initial_integral = 0.0;  // int_0^{X/h} |A(1+it)|^2 dt
  std::vector<double> ladder_T;
  std::vector<double> ladder_terms;  // (X/h)/T int_T^{2T} |A(1+it)|^2 dt
  double rhs = 0.0;
  double ratio = 0.0;
};

/// coeffs must cover [X, 4X]; step defaults to max_quadrature_step(4X).
/// The ladder T = (X/h) 2^i runs while T <= min(X, t_cap).
ParsevalRatio parseval_ratio(const SeqWindow& coeffs, std::uint64_t h, std::uint64_t X,
                             std::optional<double> step = std::nullopt, double t_cap = 1000.0);

/// Coefficient vectors from either the MDL1 binary format or plain text with
/// one real value per line (indexed from `start`).
SeqWindow read_coefficients_csv(std::istream& in, std::uint64_t start);
SeqWindow load_coefficients(const std::filesystem::path& path, std::uint64_t start = 1);

} // namespace mdlab
