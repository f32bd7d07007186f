#include "mdlab/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mdlab/mean_state.hpp"
#include "mdlab/sieve.hpp"
#include "mdlab/summation.hpp"

namespace mdlab {

namespace {

/// Certified bound on sum_{p > P} |log(1 - c/p^r)|, using
/// |log(1-x)| <= x/(1-x) and sum_{n > P} n^-r <= P^(1-r)/(r-1).
double tail_bound_for(double c, unsigned r, std::uint64_t cutoff) {
  const double P = static_cast<double>(cutoff);
  const double x_max = c / std::pow(P, r);
  return c / (1.0 - x_max) * std::pow(P, 1.0 - r) / (r - 1.0);
}

double ipow(std::uint64_t p, unsigned r) { return std::pow(static_cast<double>(p), r); }

} // namespace

double EulerProductTruncation::lower() const { return partial_value * std::exp(-tail_bound); }
double EulerProductTruncation::upper() const { return partial_value * std::exp(tail_bound); }

EulerProductTruncation euler_product(std::string label, std::uint64_t cutoff,
                                     std::function<double(std::uint64_t)> local_factor,
                                     double tail_bound) {
  EulerProductTruncation e;
  e.label = std::move(label);
  e.cutoff_prime = cutoff;
  e.local_factor = std::move(local_factor);
  CompensatedSum log_sum;
  for (std::uint64_t p : primes_up_to(cutoff)) {
    double v = e.local_factor(p);
    if (!(v > 0.0))
      throw std::domain_error("euler_product: non-positive local factor at p=" + std::to_string(p));
    log_sum.add(std::log(v));
  }
  e.log_partial = log_sum.value();
  e.partial_value = std::exp(e.log_partial);
  e.tail_bound = tail_bound;
  return e;
}

EulerProductTruncation power_free_density(unsigned r, std::uint64_t cutoff) {
  if (r < 2) throw std::invalid_argument("power_free_density: r must be >= 2");
  if (cutoff < 100) throw std::invalid_argument("power_free_density: cutoff must be >= 100");
  return euler_product(
      "prod_p(1-1/p^" + std::to_string(r) + ")", cutoff,
      [r](std::uint64_t p) { return 1.0 - 1.0 / ipow(p, r); }, tail_bound_for(1.0, r, cutoff));
}

double mirsky_adjustment(unsigned r, std::uint64_t m) {
  if (r < 2) throw std::invalid_argument("mirsky_adjustment: r must be >= 2");
  if (m == 0) throw std::invalid_argument("mirsky_adjustment: m must be >= 1");
  double factor = 1.0;
  std::uint64_t rest = m;
  auto account = [&](std::uint64_t p, unsigned e) {
    if (e >= r) factor *= 1.0 + 1.0 / (ipow(p, r) - 2.0);
  };
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    account(p, e);
  }
  if (rest > 1) account(rest, 1);
  return factor;
}

EulerProductTruncation mirsky_oracle(unsigned r, std::uint64_t m, std::uint64_t cutoff) {
  if (r < 2) throw std::invalid_argument("mirsky_oracle: r must be >= 2");
  if (m == 0) throw std::invalid_argument("mirsky_oracle: m must be >= 1");
  if (cutoff < 100) throw std::invalid_argument("mirsky_oracle: cutoff must be >= 100");
  auto e = euler_product(
      "prod_p(1-2/p^" + std::to_string(r) + ")", cutoff,
      [r](std::uint64_t p) { return 1.0 - 2.0 / ipow(p, r); }, tail_bound_for(2.0, r, cutoff));
  e.finite_factor = mirsky_adjustment(r, m);
  e.partial_value *= e.finite_factor;
  e.label += "*prod_{p^" + std::to_string(r) + "|" + std::to_string(m) + "}(1+1/(p^r-2))";
  return e;
}

std::complex<double> shift_correlation(const SeqWindow& f, const SeqWindow& g, std::uint64_t m,
                                       std::uint64_t n) {
  if (g.size() < n + m)
    throw std::invalid_argument("shift_correlation: window of length " + std::to_string(g.size()) +
                                " does not cover N+m=" + std::to_string(n + m));
  return cesaro_inner(f, shift(g, m), n);
}

std::uint64_t rigidity_sequence(unsigned r, unsigned j) {
  if (j < 1) throw std::invalid_argument("rigidity_sequence: j must be >= 1");
  if (r < 1) throw std::invalid_argument("rigidity_sequence: r must be >= 1");
  std::uint64_t value = 1;
  unsigned found = 0;
  for (std::uint64_t p = 2; found < j; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    ++found;
    for (unsigned i = 0; i < r; ++i)
      if (__builtin_mul_overflow(value, p, &value))
        throw std::overflow_error("rigidity_sequence: (p_1...p_" + std::to_string(j) + ")^" +
                                  std::to_string(r) + " overflows 64 bits");
  }
  return value;
}

double rigidity_closed_form(unsigned r, std::uint64_t lag, std::uint64_t oracle_cutoff) {
  if (lag == 0) return 0.0;
  auto density = power_free_density(r, oracle_cutoff);
  auto cross = mirsky_oracle(r, lag, oracle_cutoff);
  return 2.0 * (density.partial_value - cross.partial_value);
}

RigidityNorm rigidity_norm(unsigned r, unsigned j, std::uint64_t l, std::uint64_t n,
                           std::uint64_t oracle_cutoff, const std::optional<SeqWindow>& mu_r) {
  if (n < 1) throw std::invalid_argument("rigidity_norm: N must be >= 1");
  RigidityNorm out;
  const std::uint64_t nj = rigidity_sequence(r, j);
  if (l != 0 && __builtin_mul_overflow(l, nj, &out.lag))
    throw std::overflow_error("rigidity_norm: l * n_j overflows");
  if (l == 0) return out;

  SeqWindow window = mu_r ? *mu_r : power_free_sieve(1, n + out.lag, r);
  if (window.start() != 1 || window.size() < n + out.lag)
    throw std::invalid_argument("rigidity_norm: mu_r window must start at 1 and cover N + l*n_j = " +
                                std::to_string(n + out.lag));
  out.empirical = eperiod_defect(window, out.lag, n);

  auto density = power_free_density(r, oracle_cutoff);
  auto cross = mirsky_oracle(r, out.lag, oracle_cutoff);
  out.closed_form = 2.0 * (density.partial_value - cross.partial_value);
  out.oracle_tail_bound = density.tail_bound + cross.tail_bound;
  return out;
}

SeqWindow product_of_shifts(const std::vector<std::uint64_t>& m_list, std::uint64_t start,
                            std::uint64_t length) {
  if (m_list.empty()) throw std::invalid_argument("product_of_shifts: m_list must be nonempty");
  const std::uint64_t reach = *std::max_element(m_list.begin(), m_list.end());
  auto mu2 = power_free_sieve(start, length + reach, 2);
  auto base = mu2.small();
  std::vector<std::int8_t> out(length, 1);
  for (auto m : m_list)
    for (std::size_t i = 0; i < length; ++i) out[i] = static_cast<std::int8_t>(out[i] * base[i + m]);
  return SeqWindow::from_small(start, std::move(out));
}

} // namespace mdlab
