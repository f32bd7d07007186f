#include "mdlab/pretentious.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mdlab/dirichlet.hpp"
#include "mdlab/parallel.hpp"
#include "mdlab/short_progression.hpp"
#include "mdlab/summation.hpp"
#include "mdlab/trig_sum.hpp"

namespace mdlab {

namespace {

constexpr double modulus_slack = 1e-12;

void check_modulus(std::complex<double> v, std::uint64_t p, const char* which) {
  if (std::abs(v) > 1.0 + modulus_slack)
    throw std::invalid_argument(std::string("distance_sq: |") + which + "(" + std::to_string(p) +
                                ")| exceeds 1");
}

// D^2(t) = base - Re S(t) with S(t) = sum_p f(p)/p e^{-it log p}.
struct DistanceCurve {
  double base = 0.0;
  TrigSum sum;

  double operator()(double t) const { return std::max(0.0, base - sum(t).real()); }
};

DistanceCurve make_curve(const MultiplicativeSpec& spec, std::uint64_t x, std::uint64_t k) {
  CompensatedSum base;
  std::vector<std::complex<double>> c;
  std::vector<double> w;
  for (std::uint32_t p : primes_up_to(x)) {
    if (k % p == 0) continue;
    const auto v = spec.at_prime(p);
    check_modulus(v, p, "f");
    const double inv = 1.0 / p;
    base.add(inv);
    c.push_back(v * inv);
    w.push_back(-std::log(static_cast<double>(p)));
  }
  return {base.value(), TrigSum(std::move(c), std::move(w))};
}

} // namespace

double distance_sq(const PrimeRule& f, const PrimeRule& g, std::uint64_t x, std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("distance_sq: k must be >= 1");
  CompensatedSum s;
  for (std::uint32_t p : primes_up_to(x)) {
    if (k % p == 0) continue;
    const auto fp = f(p), gp = g(p);
    check_modulus(fp, p, "f");
    check_modulus(gp, p, "g");
    s.add((1.0 - (fp * std::conj(gp)).real()) / p);
  }
  return s.value();
}

double max_t_spacing(std::uint64_t x) {
  return 1.0 / (2.0 * std::log(static_cast<double>(std::max<std::uint64_t>(x, 3))));
}

DistanceReport m_of_f(const MultiplicativeSpec& spec, std::uint64_t x, double T, std::uint64_t k,
                      std::uint64_t grid_points) {
  if (!(T > 0.0)) throw std::invalid_argument("m_of_f: T must be positive");
  if (grid_points < 16) throw std::invalid_argument("m_of_f: grid_points must be >= 16");
  if (k == 0) throw std::invalid_argument("m_of_f: k must be >= 1");
  const auto curve = make_curve(spec, x, k);

  const auto needed = static_cast<std::uint64_t>(std::ceil(2.0 * T / max_t_spacing(x))) + 1;
  const std::uint64_t count = std::max(grid_points, needed);
  const double dt = 2.0 * T / static_cast<double>(count - 1);

  DistanceReport r;
  r.spec = spec.name;
  r.k = k;
  r.x = x;
  r.T = T;
  const auto s = curve.sum.grid(-T, dt, count);
  r.t_grid.resize(count);
  r.values.resize(count);
  std::size_t best = 0;
  for (std::size_t j = 0; j < count; ++j) {
    r.t_grid[j] = j + 1 == count ? T : -T + dt * static_cast<double>(j);
    r.values[j] = std::max(0.0, curve.base - s[j].real());
    if (r.values[j] < r.values[best]) best = j;
  }

  // Golden-section search on the bracket around the best grid point.
  double a = std::max(-T, r.t_grid[best] - dt);
  double b = std::min(T, r.t_grid[best] + dt);
  const double tol = 1e-6 * std::max(1.0, T);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a), d = a + invphi * (b - a);
  double fc = curve(c), fd = curve(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = curve(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = curve(d);
    }
  }
  const double t_star = 0.5 * (a + b);
  const double f_star = curve(t_star);
  if (f_star < r.values[best]) {
    r.argmin_t = t_star;
    r.min_value = f_star;
  } else {
    r.argmin_t = r.t_grid[best];
    r.min_value = r.values[best];
  }
  return r;
}

DistanceReport m_over_characters(const MultiplicativeSpec& spec, std::uint64_t k, std::uint64_t x, double T,
                                 std::uint64_t grid_points) {
  std::optional<DistanceReport> best;
  for (const auto& chi : characters_mod(k)) {
    auto r = m_of_f(twist(spec, chi), x, T, k, grid_points);
    r.spec = spec.name;
    r.character = chi.label();
    if (!best || r.min_value < best->min_value) best = std::move(r);
  }
  return *best;
}

HalaszPair halasz_bound_pair(const MultiplicativeSpec& spec, std::uint64_t x, std::uint64_t k, double T) {
  if (x < 3) throw std::invalid_argument("halasz_bound_pair: x must be >= 3");
  if (k < 1 || k > x || T < 1.0 || T > static_cast<double>(x))
    throw std::invalid_argument("halasz_bound_pair: need 1 <= k, T <= x");
  HalaszPair h;
  h.x = x;
  h.k = k;
  h.T = T;
  const auto f = evaluate_spec(spec.coprime(k), 1, x);
  if (f.is_small()) {
    std::int64_t total = 0;
    for (auto v : f.small()) total += v;
    h.lhs = std::abs(static_cast<double>(total)) / static_cast<double>(x);
  } else {
    CompensatedComplexSum total;
    for (auto v : f.complex_values()) total.add(v);
    h.lhs = std::abs(total.value()) / static_cast<double>(x);
  }
  h.M = m_of_f(spec, x, T, k).min_value;
  const double density = static_cast<double>(euler_phi(k)) / static_cast<double>(k);
  h.rhs_shape = density * ((h.M + 1.0) * std::exp(-h.M) + 1.0 / T +
                           std::pow(std::log(static_cast<double>(x)), -5.0 / 64.0));
  h.ratio = h.lhs / h.rhs_shape;
  return h;
}

CharacterFloorReport character_distance_floor(std::uint64_t k, std::uint64_t X,
                                              const std::vector<double>& t_grid) {
  if (X < 16) throw std::invalid_argument("character_distance_floor: X must be >= 16");
  if (k < 1 || static_cast<double>(k) > std::log(static_cast<double>(X)))
    throw std::invalid_argument("character_distance_floor: need 1 <= k <= log X");
  CharacterFloorReport r;
  r.k = k;
  r.X = X;
  r.soft_floor = std::log(std::log(static_cast<double>(X))) / 3.0 - 2.0;
  r.minimum.value = std::numeric_limits<double>::infinity();
  for (const auto& chi : characters_mod(k)) {
    std::vector<double> ts;
    for (double t : t_grid) {
      const double a = std::abs(t);
      if (a > static_cast<double>(X)) continue;
      if (chi.is_principal() && a < 1.0) continue;
      ts.push_back(t);
    }
    if (ts.empty()) continue;
    MultiplicativeSpec spec = MultiplicativeSpec::custom(
        chi.label(), [chi](std::uint64_t p, unsigned e) {
          std::complex<double> c = chi(p), v = 1.0;
          for (unsigned i = 0; i < e; ++i) v *= c;
          return v;
        });
    const auto curve = make_curve(spec, X, k);
    std::vector<double> values(ts.size());
    parallel_chunks(ts.size(), [&](std::size_t b, std::size_t e, std::size_t) {
      for (std::size_t i = b; i < e; ++i) values[i] = curve(ts[i]);
    }, 1);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      FloorSample s{chi.label(), ts[i], values[i]};
      if (s.value < r.minimum.value) r.minimum = s;
      if (s.value < r.soft_floor) r.violations.push_back(s);
      r.samples.push_back(std::move(s));
    }
  }
  return r;
}

} // namespace mdlab
