#include "mdlab/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mdlab/cache.hpp"
#include "mdlab/short_progression.hpp"
#include "mdlab/summation.hpp"

namespace mdlab {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128{a} * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t least_primitive_root(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  const std::uint64_t phi = q / p * (p - 1);
  std::vector<std::uint64_t> divisors;
  for (auto [r, _] : factorize(p - 1)) divisors.push_back(r);
  if (e >= 2) divisors.push_back(p);
  for (std::uint64_t g = 2; g < q; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (auto r : divisors)
      if (powmod(g, phi / r, q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("least_primitive_root: none found");
}

} // namespace

// --- CyclicLog --------------------------------------------------------------

CyclicLog::CyclicLog(std::uint64_t modulus, std::uint64_t generator, std::uint64_t order)
    : q_(modulus), g_(generator % modulus), n_(order) {
  if (q_ <= 10'000) {
    table_.assign(q_, 0);
    std::uint64_t x = 1 % q_;
    for (std::uint64_t j = 0; j < n_; ++j) {
      table_[x] = static_cast<std::uint32_t>(j + 1);
      x = mulmod(x, g_, q_);
    }
    return;
  }
  baby_ = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n_))));
  std::uint64_t x = 1;
  for (std::uint64_t j = 0; j < baby_; ++j) {
    baby_steps_.emplace(x, j);
    x = mulmod(x, g_, q_);
  }
  giant_ = powmod(powmod(g_, n_ - 1, q_), baby_, q_);
}

std::uint64_t CyclicLog::log(std::uint64_t x) const {
  x %= q_;
  if (!table_.empty()) {
    if (table_[x] == 0) throw std::domain_error("CyclicLog: element outside subgroup");
    return table_[x] - 1;
  }
  std::uint64_t y = x;
  for (std::uint64_t i = 0; i <= baby_; ++i) {
    if (auto it = baby_steps_.find(y); it != baby_steps_.end()) return (i * baby_ + it->second) % n_;
    y = mulmod(y, giant_, q_);
  }
  throw std::domain_error("CyclicLog: element outside subgroup");
}

// --- DirichletGroup ---------------------------------------------------------

DirichletGroup::DirichletGroup(std::uint64_t k) : k_(k) {
  if (k < 1 || k > max_modulus)
    throw std::invalid_argument("DirichletGroup: modulus " + std::to_string(k) + " outside [1, 10^6]");
  phi_ = euler_phi(k);
  for (auto [p, e] : factorize(k)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    if (p == 2) {
      if (e == 1) continue;
      if (e == 2) {
        factors_.push_back({2, 4, 3, 2});
        dlogs_.emplace_back(4, 3, 2);
        two_power_kind_.push_back(0);
        continue;
      }
      factors_.push_back({2, q, q - 1, 2});
      dlogs_.emplace_back(q, q - 1, 2);
      two_power_kind_.push_back(1);
      factors_.push_back({2, q, 5, q / 4});
      dlogs_.emplace_back(q, 5, q / 4);
      two_power_kind_.push_back(2);
      continue;
    }
    const std::uint64_t g = least_primitive_root(p, e);
    factors_.push_back({p, q, g, q / p * (p - 1)});
    dlogs_.emplace_back(q, g, q / p * (p - 1));
    two_power_kind_.push_back(0);
  }
  for (const auto& f : factors_) exponent_ = std::lcm(exponent_, f.order);
}

std::vector<std::uint64_t> DirichletGroup::component_moduli() const {
  std::vector<std::uint64_t> out;
  for (auto [p, e] : factorize(k_)) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) q *= p;
    out.push_back(q);
  }
  return out;
}

bool DirichletGroup::logs(std::uint64_t n, std::vector<std::uint64_t>& out) const {
  if (std::gcd(n, k_) != 1) return false;
  out.resize(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::uint64_t q = factors_[i].component_modulus;
    const std::uint64_t x = n % q;
    switch (two_power_kind_[i]) {
      case 0: out[i] = dlogs_[i].log(x); break;
      case 1: out[i] = x % 4 == 1 ? 0 : 1; break;
      case 2: out[i] = dlogs_[i].log(x % 4 == 1 ? x : q - x); break;
    }
  }
  return true;
}

// --- DirichletCharacter -----------------------------------------------------

DirichletCharacter::DirichletCharacter(std::shared_ptr<const DirichletGroup> group,
                                       std::vector<std::uint64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  const auto& factors = group_->factors();
  if (exponents_.size() != factors.size())
    throw std::invalid_argument("DirichletCharacter: exponent count does not match group");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (exponents_[i] >= factors[i].order)
      throw std::invalid_argument("DirichletCharacter: exponent out of range");
    order_ = std::lcm(order_, factors[i].order / std::gcd(exponents_[i], factors[i].order));
  }
}

std::optional<std::uint64_t> DirichletCharacter::phase_numerator(std::uint64_t n) const {
  thread_local std::vector<std::uint64_t> logs;
  if (!group_->logs(n, logs)) return std::nullopt;
  const auto& factors = group_->factors();
  const std::uint64_t lambda = group_->exponent();
  std::uint64_t num = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::uint64_t ord = factors[i].order;
    num = (num + mulmod(exponents_[i], logs[i], ord) * (lambda / ord)) % lambda;
  }
  return num;
}

std::complex<double> DirichletCharacter::operator()(std::uint64_t n) const {
  auto num = phase_numerator(n);
  if (!num) return 0.0;
  const std::uint64_t lambda = group_->exponent();
  if ((4 * *num) % lambda == 0) {
    static constexpr std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return quarter[(4 * *num / lambda) % 4];
  }
  // Reduce the phase to (-1/2, 1/2] before scaling by 2 pi.
  double frac = static_cast<double>(*num) / static_cast<double>(lambda);
  if (frac > 0.5) frac -= 1.0;
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<std::uint64_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const std::uint64_t ord = group_->factors()[i].order;
    e[i] = (ord - exponents_[i]) % ord;
  }
  return DirichletCharacter(group_, std::move(e));
}

std::string DirichletCharacter::label() const {
  std::string s = "chi_" + std::to_string(modulus()) + "[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exponents_[i]);
  }
  return s + "]";
}

std::vector<DirichletCharacter> characters_mod(std::uint64_t k) {
  auto group = std::make_shared<const DirichletGroup>(k);
  const auto& factors = group->factors();
  std::vector<DirichletCharacter> out;
  out.reserve(group->size());
  std::vector<std::uint64_t> e(factors.size(), 0);
  while (true) {
    out.emplace_back(group, e);
    std::size_t i = 0;
    for (; i < e.size(); ++i) {
      if (++e[i] < factors[i].order) break;
      e[i] = 0;
    }
    if (i == e.size()) break;
  }
  return out;
}

double orthogonality_check(std::uint64_t k) {
  if (k < 1 || k > 10'000)
    throw std::invalid_argument("orthogonality_check: k must lie in [1, 10^4]");
  auto chars = characters_mod(k);
  const std::size_t n = chars.size();
  std::vector<std::vector<std::complex<double>>> table(n);
  for (std::size_t c = 0; c < n; ++c) {
    table[c].reserve(n);
    for (std::uint64_t a = 1; a <= k; ++a)
      if (std::gcd(a, k) == 1) table[c].push_back(chars[c](a));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      std::complex<double> s = 0.0;
      for (std::size_t a = 0; a < table[i].size(); ++a) s += std::conj(table[i][a]) * table[j][a];
      if (i == j) s -= static_cast<double>(n);
      worst = std::max(worst, std::abs(s));
    }
  return worst;
}

MultiplicativeSpec twist(const MultiplicativeSpec& spec, const DirichletCharacter& chi) {
  MultiplicativeSpec out = MultiplicativeSpec::custom(
      spec.name + "*" + chi.label(),
      [base = spec, chi](std::uint64_t p, unsigned e) {
        std::complex<double> c = chi(p), v = 1.0;
        for (unsigned i = 0; i < e; ++i) v *= c;
        return base(p, e) * v;
      },
      spec.small_valued && chi.is_real());
  return out;
}

TrigSum dirichlet_trig_sum(const MultiplicativeSpec& spec, const DirichletCharacter& chi,
                           std::uint64_t X, double sigma) {
  if (X < 2) throw std::invalid_argument("dirichlet_polynomial: X must be >= 2");
  auto f = evaluate_spec(spec, X, X + 1);
  std::vector<std::complex<double>> coeffs(X + 1);
  std::vector<double> freqs(X + 1);
  for (std::uint64_t n = X; n <= 2 * X; ++n) {
    const double ln = std::log(static_cast<double>(n));
    coeffs[n - X] = f[n - X] * chi(n) * std::exp(-sigma * ln);
    freqs[n - X] = -ln;
  }
  return TrigSum(std::move(coeffs), std::move(freqs));
}

std::complex<double> dirichlet_polynomial(const MultiplicativeSpec& spec, const DirichletCharacter& chi,
                                          std::uint64_t X, double sigma, double t) {
  return dirichlet_trig_sum(spec, chi, X, sigma)(t);
}

double max_quadrature_step(std::uint64_t n_max) {
  return 1.0 / (4.0 * std::log(static_cast<double>(std::max<std::uint64_t>(n_max, 3))));
}

MeanSquareReport mean_square(const MultiplicativeSpec& spec, std::uint64_t k, std::uint64_t X, double T,
                             double step) {
  if (!(T > 0.0)) throw std::invalid_argument("mean_square: T must be positive");
  const double ceiling = max_quadrature_step(2 * X);
  if (!(step > 0.0) || step > ceiling)
    throw std::invalid_argument("mean_square: step " + std::to_string(step) +
                                " exceeds the ceiling 1/(4 log 2X) = " + std::to_string(ceiling));
  MeanSquareReport report;
  report.k = k;
  report.X = X;
  report.T = T;
  CompensatedSum total, coarse;
  for (const auto& chi : characters_mod(k)) {
    auto pair = integrate_norm_sq(dirichlet_trig_sum(spec, chi, X, 1.0), 0.0, T, step);
    report.step = pair.step;
    report.characters.push_back(chi.label());
    report.per_character.push_back(pair.fine);
    total.add(pair.fine);
    coarse.add(pair.coarse);
  }
  report.total = total.value();
  report.quadrature_error = std::abs(report.total - coarse.value());
  return report;
}

HybridMeanValue hybrid_mean_value(const SeqWindow& coeffs, std::uint64_t k, double T, double step) {
  if (coeffs.start() != 1) throw std::invalid_argument("hybrid_mean_value: coefficients must start at n=1");
  if (!(T > 0.0)) throw std::invalid_argument("hybrid_mean_value: T must be positive");
  const std::uint64_t N = coeffs.size();
  const double ceiling = max_quadrature_step(2 * N);
  if (!(step > 0.0) || step > ceiling)
    throw std::invalid_argument("hybrid_mean_value: step " + std::to_string(step) +
                                " exceeds the ceiling " + std::to_string(ceiling));
  HybridMeanValue out;
  out.k = k;
  out.N = N;
  out.T = T;
  CompensatedSum fine, coarse, energy;
  for (std::uint64_t n = 1; n <= N; ++n)
    if (std::gcd(n, k) == 1) energy.add(std::norm(coeffs[n - 1]));
  for (const auto& chi : characters_mod(k)) {
    std::vector<std::complex<double>> c(N);
    std::vector<double> w(N);
    for (std::uint64_t n = 1; n <= N; ++n) {
      c[n - 1] = coeffs[n - 1] * chi(n);
      w[n - 1] = std::log(static_cast<double>(n));
    }
    auto pair = integrate_norm_sq(TrigSum(std::move(c), std::move(w)), 0.0, T, step);
    out.step = pair.step;
    fine.add(pair.fine);
    coarse.add(pair.coarse);
  }
  const double phi = static_cast<double>(euler_phi(k));
  out.lhs = fine.value();
  out.rhs = (phi * T + phi / static_cast<double>(k) * static_cast<double>(N)) * energy.value();
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  out.self_convergence = out.lhs > 0.0 ? std::abs(out.lhs - coarse.value()) / out.lhs : 0.0;
  return out;
}

SeqWindow random_sign_coefficients(std::uint64_t N, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::int8_t> v(N);
  for (auto& x : v) x = (gen() >> 63) ? 1 : -1;
  return SeqWindow::from_small(1, std::move(v));
}

HybridSummary hybrid_mean_value_ratio(std::uint64_t N, std::uint64_t k, double T, std::uint64_t trials,
                                      std::uint64_t base_seed, std::optional<double> step) {
  HybridSummary s;
  s.k = k;
  s.N = N;
  s.T = T;
  s.base_seed = base_seed;
  const double h = step.value_or(max_quadrature_step(2 * N) / 8.0);
  for (std::uint64_t i = 0; i < trials; ++i) {
    const std::uint64_t seed = base_seed + i;
    auto r = hybrid_mean_value(random_sign_coefficients(N, seed), k, T, h);
    s.seeds.push_back(seed);
    s.ratios.push_back(r.ratio);
    s.max_ratio = std::max(s.max_ratio, r.ratio);
    s.max_self_convergence = std::max(s.max_self_convergence, r.self_convergence);
  }
  return s;
}

ParsevalRatio parseval_ratio(const SeqWindow& coeffs, std::uint64_t h, std::uint64_t X,
                             std::optional<double> step, double t_cap) {
  if (X < 2) throw std::invalid_argument("parseval_ratio: X must be >= 2");
  if (h < 1 || h > X) throw std::invalid_argument("parseval_ratio: need 1 <= h <= X");
  if (!coeffs.covers(X, 4 * X))
    throw std::invalid_argument("parseval_ratio: coefficients must cover [X, 4X]");
  ParsevalRatio out;
  out.X = X;
  out.h = h;
  const double hd = static_cast<double>(h);

  // On (m, m+1) the inner sum runs over n = m+1 .. m+h, so the x-integral is
  // a finite sum.
  CompensatedSum lhs;
  for (std::uint64_t m = X; m < 2 * X; ++m) {
    CompensatedComplexSum inner;
    for (std::uint64_t n = m + 1; n <= m + h; ++n) inner.add(coeffs.at(n));
    lhs.add(std::norm(inner.value() / hd));
  }
  out.lhs = lhs.value() / static_cast<double>(X);

  std::vector<std::complex<double>> c;
  std::vector<double> w;
  for (std::uint64_t n = X; n <= 4 * X; ++n) {
    const double ln = std::log(static_cast<double>(n));
    c.push_back(coeffs.at(n) / static_cast<double>(n));
    w.push_back(-ln);
  }
  TrigSum A(std::move(c), std::move(w));

  const double base = static_cast<double>(X) / hd;
  std::size_t rungs = 0;
  const double t_max = std::min(static_cast<double>(X), t_cap);
  while (base * std::ldexp(1.0, static_cast<int>(rungs)) <= t_max) ++rungs;
  const double max_step = step.value_or(max_quadrature_step(4 * X));
  if (!(max_step > 0.0) || max_step > max_quadrature_step(4 * X))
    throw std::invalid_argument("parseval_ratio: step exceeds the ceiling 1/(4 log 4X)");
  auto per_base = static_cast<std::size_t>(std::ceil(base / max_step));
  if (per_base % 2) ++per_base;
  out.step = base / static_cast<double>(per_base);
  const std::size_t total_intervals = per_base << rungs;  // covers [0, 2 T_max]
  auto samples = A.grid_norm_sq(0.0, out.step, total_intervals + 1);
  auto integral = [&](std::size_t i0, std::size_t i1) {
    return simpson(std::span<const double>(samples.data() + i0, i1 - i0 + 1), out.step);
  };
  out.initial_integral = integral(0, per_base);
  double best = 0.0;
  for (std::size_t r = 0; r < rungs; ++r) {
    const double T = base * std::ldexp(1.0, static_cast<int>(r));
    const double term = base / T * integral(per_base << r, per_base << (r + 1));
    out.ladder_T.push_back(T);
    out.ladder_terms.push_back(term);
    best = std::max(best, term);
  }
  out.rhs = out.initial_integral + best;
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

SeqWindow read_coefficients_csv(std::istream& in, std::uint64_t start) {
  std::vector<std::complex<double>> values;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    if (!(fields >> re)) throw std::runtime_error("read_coefficients_csv: cannot parse '" + line + "'");
    fields >> im;
    values.emplace_back(re, im);
  }
  if (values.empty()) throw std::runtime_error("read_coefficients_csv: no values");
  return SeqWindow::from_complex(start, std::move(values));
}

SeqWindow load_coefficients(const std::filesystem::path& path, std::uint64_t start) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_coefficients: cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() >= 4 && bytes[0] == 'M' && bytes[1] == 'D' && bytes[2] == 'L' && bytes[3] == '1')
    return decode_window(bytes).window;
  std::istringstream text(std::string(bytes.begin(), bytes.end()));
  return read_coefficients_csv(text, start);
}

} // namespace mdlab
