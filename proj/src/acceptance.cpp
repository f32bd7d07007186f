#include "mdlab/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>

#include <fmt/format.h>

#include "mdlab/oracles.hpp"
#include "mdlab/sieve.hpp"

namespace mdlab {

namespace {

constexpr std::uint64_t N7 = 10'000'000;

// Large sieves shared between criteria; built on first use.
class Windows {
 public:
  const SeqWindow& mobius(std::uint64_t length) { return get(mobius_, length, [](std::uint64_t n) { return mobius_sieve(1, n); }); }
  const SeqWindow& mu2(std::uint64_t length) { return get(mu2_, length, [](std::uint64_t n) { return power_free_sieve(1, n, 2); }); }

 private:
  template <class Make>
  const SeqWindow& get(std::optional<SeqWindow>& slot, std::uint64_t length, Make make) {
    if (!slot || slot->size() < length) slot = make(length);
    return *slot;
  }
  std::optional<SeqWindow> mobius_, mu2_;
};

struct Check {
  bool ok = true;
  std::vector<std::string> notes;
  json data = json::object();

  void require(bool cond, std::string what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + std::move(what));
    }
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string fmt_g(double v) { return fmt::format("{:.6g}", v); }

// 1
Check sieve_exactness(Windows&) {
  Check c;
  constexpr std::uint64_t n = 1'000'000;
  const auto mu_w = mobius_sieve(1, n), sf_w = power_free_sieve(1, n, 2), cf_w = power_free_sieve(1, n, 3),
             la_w = liouville_sieve(1, n);
  auto mu = mu_w.small(), sf = sf_w.small(), cf = cf_w.small(), la = la_w.small();
  std::uint64_t mismatches = 0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const auto t = oracle::trial_values(i);
    mismatches += (mu[i - 1] != t.mobius) + (sf[i - 1] != t.squarefree) + (cf[i - 1] != t.cubefree) +
                  (la[i - 1] != t.liouville);
  }
  c.require(mismatches == 0, fmt::format("{} mismatches", mismatches));
  c.note(fmt::format("n <= 10^6, 4 functions, mismatches = {}", mismatches));
  c.data["mismatches"] = mismatches;
  return c;
}

// 2
Check squarefree_density(Windows& w) {
  Check c;
  auto v = w.mu2(N7 + 1000).small().first(N7);
  std::uint64_t count = 0;
  for (auto x : v) count += static_cast<std::uint64_t>(x);
  const double density = static_cast<double>(count) / static_cast<double>(N7);
  c.require(std::abs(density - 0.6079) <= 0.002, "density outside 0.6079 +- 0.002");
  c.note("density " + fmt_g(density));
  c.data["density"] = density;
  return c;
}

// 3
Check mirsky_correlations(Windows& w) {
  Check c;
  const auto& mu2 = w.mu2(N7 + 1000);
  double worst = 0.0, worst_tail = 0.0;
  json rows = json::array();
  for (std::uint64_t m = 1; m <= 10; ++m) {
    const double emp = shift_correlation(mu2, mu2, m, N7).real();
    const auto orc = mirsky_oracle(2, m, 1'000'000);
    worst = std::max(worst, std::abs(emp - orc.partial_value));
    worst_tail = std::max(worst_tail, orc.tail_bound);
    rows.push_back(json{{"m", m}, {"empirical", emp}, {"oracle", orc.partial_value}, {"tail_bound", orc.tail_bound}});
  }
  c.require(worst <= 0.003, "max |empirical - oracle| > 0.003");
  c.require(worst_tail < 1e-4, "oracle tail bound >= 1e-4");
  c.note("max diff " + fmt_g(worst) + ", max tail bound " + fmt_g(worst_tail));
  c.data["rows"] = rows;
  return c;
}

// 4
Check rigidity(Windows& w) {
  Check c;
  const auto& mu2 = w.mu2(N7 + 1000 + 2 * rigidity_sequence(2, 3));
  double worst = 0.0;
  json rows = json::array();
  std::map<std::pair<unsigned, std::uint64_t>, double> closed;
  for (unsigned j : {2u, 3u})
    for (std::uint64_t l : {1u, 2u}) {
      const auto r = rigidity_norm(2, j, l, N7, 1'000'000, mu2);
      worst = std::max(worst, std::abs(r.empirical - r.closed_form));
      closed[{j, l}] = r.closed_form;
      rows.push_back(json{{"j", j}, {"l", l}, {"empirical", r.empirical}, {"closed_form", r.closed_form}});
    }
  c.require(worst <= 0.005, "max |empirical - closed_form| > 0.005");
  for (std::uint64_t l : {1u, 2u})
    c.require(closed[{3, l}] < closed[{2, l}], fmt::format("closed form not decreasing in j at l={}", l));
  c.note("max diff " + fmt_g(worst));
  c.data["rows"] = rows;
  return c;
}

// 5 and 6 share the grid.
struct MomentGrid {
  std::vector<MomentReport> rows;
  std::uint64_t brute_cases = 0, brute_mismatches = 0;
};

MomentGrid& moment_grid(Windows& w) {
  static std::optional<MomentGrid> grid;
  if (grid) return *grid;
  grid.emplace();
  const auto& mu = w.mobius(N7 + 1000 * 210 + 1);
  for (std::uint64_t h : {10u, 100u, 1000u})
    for (std::uint64_t k : {1u, 2u, 6u, 30u, 210u}) grid->rows.push_back(second_moment(N7, h, k, mu));
  constexpr std::uint64_t n = 100'000;
  for (std::uint64_t h : {1u, 2u, 3u, 7u, 20u, 50u})
    for (std::uint64_t k = 1; k <= 12; ++k) {
      ++grid->brute_cases;
      if (sliding_sum_squares(mu, n, h, k) != oracle::second_moment_brute(mu, n, h, k)) ++grid->brute_mismatches;
    }
  return *grid;
}

Check moment_bound_check(Windows& w) {
  Check c;
  const auto& g = moment_grid(w);
  double worst = 0.0;
  for (const auto& m : g.rows) {
    worst = std::max(worst, *m.ratio);
    c.require(m.S <= 10.0 * *m.bound, fmt::format("S > 10 bound at h={}, k={}", m.h, m.k));
  }
  c.require(g.brute_mismatches == 0, fmt::format("{} sliding/brute mismatches", g.brute_mismatches));
  c.note(fmt::format("max S/bound {} over {} cells; brute force {}/{} exact", fmt_g(worst), g.rows.size(),
                     g.brute_cases - g.brute_mismatches, g.brute_cases));
  c.data["rows"] = g.rows;
  return c;
}

Check chowla_scale(Windows& w) {
  Check c;
  for (const auto& m : moment_grid(w).rows)
    if (m.h == 100 && m.k == 1) {
      c.require(m.chowla_ratio >= 0.3 && m.chowla_ratio <= 1.2, "S/h outside [0.3, 1.2]");
      c.note("S/h " + fmt_g(m.chowla_ratio));
      c.data["chowla_ratio"] = m.chowla_ratio;
    }
  return c;
}

// 7
Check divisor_decomposition_check(Windows& w) {
  Check c;
  const auto& mu = w.mobius(N7);
  json rows = json::array();
  for (std::uint64_t k : {1u, 6u}) {
    const auto a = divisor_decomposition(100'000, 10, k, mu);
    const auto b = divisor_decomposition(200'000, 10, k, mu);
    const double ra = a.residual_over_x(), rb = b.residual_over_x();
    const bool within = ra == 0.0 ? rb == 0.0 : (rb <= 2.0 * ra && ra <= 2.0 * rb);
    c.require(within, fmt::format("k={}: ratio at 2X not within 2x of ratio at X", k));
    c.note(fmt::format("k={}: residual/X {} -> {}", k, fmt_g(ra), fmt_g(rb)));
    rows.push_back(a);
    rows.push_back(b);
  }
  c.data["rows"] = rows;
  return c;
}

// 8
Check character_algebra(Windows&) {
  Check c;
  double worst = 0.0;
  std::uint64_t count_failures = 0;
  for (std::uint64_t k = 1; k <= 200; ++k) {
    if (characters_mod(k).size() != euler_phi(k)) ++count_failures;
    worst = std::max(worst, orthogonality_check(k));
  }
  c.require(count_failures == 0, fmt::format("{} moduli with wrong character count", count_failures));
  c.require(worst <= 1e-9, "orthogonality deviation > 1e-9");
  c.note("max orthogonality deviation " + fmt_g(worst));
  c.data["max_deviation"] = worst;
  return c;
}

// 9
Check pretentious_floors(Windows&) {
  Check c;
  const auto m1 = m_of_f(MultiplicativeSpec::mobius(), 1'000'000, 10.0, 1);
  const auto m6 = m_over_characters(MultiplicativeSpec::mobius().coprime(6), 6, 1'000'000, 10.0);
  const auto pre = m_of_f(MultiplicativeSpec::archimedean(0.3), 1'000'000, 10.0, 1);
  c.require(m1.min_value >= 0.5, "M_1(mu) < 0.5");
  c.require(m6.min_value >= 0.5, "M_6(mu 1_(n,6)=1; 6) < 0.5");
  c.require(std::abs(pre.argmin_t - 0.3) <= 1e-4, "pretender t0 not recovered");
  c.require(pre.min_value <= 1e-6, "pretender minimum > 1e-6");
  c.note(fmt::format("M_1 {} at t={}, M_6 {} ({}), pretender t={} min={}", fmt_g(m1.min_value), fmt_g(m1.argmin_t),
                     fmt_g(m6.min_value), m6.character.value_or(""), fmt_g(pre.argmin_t), fmt_g(pre.min_value)));
  c.data = json{{"M1", m1.min_value}, {"M6", m6.min_value}, {"pretender_t", pre.argmin_t}, {"pretender_min", pre.min_value}};
  return c;
}

// 10
Check halasz_shape(Windows&) {
  Check c;
  json rows = json::array();
  for (std::uint64_t k : {2u, 6u, 30u}) {
    const auto h = halasz_bound_pair(MultiplicativeSpec::one(), 1'000'000, k, 10.0);
    c.require(h.ratio <= 3.0, fmt::format("spec=1, k={}: ratio > 3", k));
    c.note(fmt::format("1,k={}: ratio {}", k, fmt_g(h.ratio)));
    rows.push_back(h);
  }
  const auto mu = halasz_bound_pair(MultiplicativeSpec::mobius(), N7, 1, 10.0);
  c.require(mu.lhs <= 1e-2, "spec=mu: lhs > 1e-2");
  c.note("mu: lhs " + fmt_g(mu.lhs));
  rows.push_back(mu);
  c.data["rows"] = rows;
  return c;
}

// 11
Check hybrid(Windows&) {
  Check c;
  json rows = json::array();
  for (std::uint64_t k : {1u, 3u, 8u}) {
    const auto s = hybrid_mean_value_ratio(512, k, 50.0, 50, 1000 * k);
    c.require(s.max_ratio <= 10.0, fmt::format("k={}: max ratio > 10", k));
    c.require(s.max_self_convergence < 1e-6, fmt::format("k={}: self-convergence >= 1e-6", k));
    c.note(fmt::format("k={}: max ratio {}, self-conv {}", k, fmt_g(s.max_ratio), fmt_g(s.max_self_convergence)));
    rows.push_back(s);
  }
  c.data["rows"] = rows;
  return c;
}

// 12
Check parseval(Windows& w) {
  Check c;
  const auto p = parseval_ratio(w.mobius(N7), 100, 10'000);
  c.require(p.ratio <= 10.0, "ratio > 10");
  c.note("ratio " + fmt_g(p.ratio));
  c.data = p;
  return c;
}

// 13
Check flow_entropy(Windows& w) {
  Check c;
  const auto profile = entropy_profile(w.mu2(N7 + 1000), 10, 20, N7);
  double lo = 1.0, hi = 0.0;
  for (const auto& e : profile.points) {
    lo = std::min(lo, e.bits_per_symbol);
    hi = std::max(hi, e.bits_per_symbol);
  }
  c.require(lo >= 0.50 && hi <= 0.61, fmt::format("mu^2 profile range [{}, {}] outside [0.50, 0.61]", fmt_g(lo), fmt_g(hi)));
  bool from_below = true;
  for (const auto& e : profile.points) from_below = from_below && e.bits_per_symbol <= 6.0 / (std::numbers::pi * std::numbers::pi);
  c.require(from_below, "profile not below 6/pi^2");
  const auto prod = entropy_profile(product_of_shifts({0, 1}, 1, N7), 12, 12, N7);
  const double witness = prod.points.front().bits_per_symbol;
  c.require(witness >= 0.2, "product_of_shifts([0,1]) profile at L=12 < 0.2");
  c.note(fmt::format("mu^2 bits/symbol L=10..20: {} .. {}; shifts witness {}", fmt_g(hi), fmt_g(lo), fmt_g(witness)));
  c.data = json{{"mu2", profile}, {"product_of_shifts", prod}};
  return c;
}

// 14
Check quadratic_phase_orthogonality(Windows&) {
  Check c;
  const auto f = sampler({PhaseKind::exp_quadratic, std::sqrt(2.0L)}, 1, N7 + 5);
  double worst_inner = 0.0, worst_norm = 0.0;
  for (std::uint64_t l = 0; l <= 5; ++l)
    for (std::uint64_t m = l + 1; m <= 5; ++m)
      worst_inner = std::max(worst_inner, std::abs(cesaro_inner(shift(f, l), shift(f, m), N7)));
  for (std::uint64_t m = 1; m <= 5; ++m) worst_norm = std::max(worst_norm, std::abs(eperiod_defect(f, m, N7) - 2.0));
  c.require(worst_inner <= 1e-3, "max |<A^l f, A^m f>| > 1e-3");
  c.require(worst_norm <= 1e-3, "||f - A^m f||^2 differs from 2 by > 1e-3");
  c.note(fmt::format("max inner {}, max |norm - 2| {}", fmt_g(worst_inner), fmt_g(worst_norm)));
  c.data = json{{"max_inner", worst_inner}, {"max_norm_deviation", worst_norm}};
  return c;
}

// 15
Check block_eperiodicity(Windows&) {
  Check c;
  constexpr std::uint64_t length = 1'000'000, k = 3;
  auto id = [](std::uint64_t j) { return j; };
  const auto f = block_eperiodic(k, id, id, length);
  const std::uint64_t n = length - k;
  const double at_k = eperiod_defect(f, k, n);
  c.require(at_k <= 0.01, "defect at lag k > 0.01");
  json lags = json::array();
  for (std::uint64_t l = 1; l < k; ++l) {
    const double d = eperiod_defect(f, l, n);
    c.require(d >= 0.1, fmt::format("defect at lag {} < 0.1", l));
    c.note(fmt::format("lag {}: {}", l, fmt_g(d)));
    lags.push_back(d);
  }
  c.note(fmt::format("lag {}: {}", k, fmt_g(at_k)));
  c.data = json{{"defect_at_k", at_k}, {"defects_below_k", lags}};
  return c;
}

struct Entry {
  int id;
  const char* name;
  double limit;
  bool soft;
  Check (*run)(Windows&);
};

const Entry entries[] = {
    {1, "sieve exactness", 10, false, sieve_exactness},
    {2, "squarefree density", 5, false, squarefree_density},
    {3, "mirsky correlations", 30, false, mirsky_correlations},
    {4, "rigidity", 60, false, rigidity},
    {5, "second-moment bound", 300, false, moment_bound_check},
    {6, "chowla-scale sanity", 300, true, chowla_scale},
    {7, "divisor decomposition", 60, false, divisor_decomposition_check},
    {8, "character algebra", 10, false, character_algebra},
    {9, "pretentious floors", 60, false, pretentious_floors},
    {10, "halasz shape", 30, false, halasz_shape},
    {11, "hybrid mean value", 120, false, hybrid},
    {12, "parseval", 60, false, parseval},
    {13, "flow entropy", 60, false, flow_entropy},
    {14, "quadratic phase orthogonality", 30, false, quadratic_phase_orthogonality},
    {15, "block e-periodicity", 5, false, block_eperiodicity},
};

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  Windows windows;
  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    if (!options.only.empty() && !options.only.count(e.id)) continue;
    CriterionResult r;
    r.id = e.id;
    r.name = e.name;
    r.soft = e.soft;
    r.runtime_limit = e.limit;
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = e.run(windows);
    } catch (const std::exception& ex) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + ex.what());
    }
    r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.runtime >= r.runtime_limit) {
      c.ok = false;
      c.notes.push_back("runtime limit exceeded");
    }
    r.passed = c.ok;
    r.detail = fmt::format("{}", fmt::join(c.notes, "; "));
    r.data = std::move(c.data);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  return fmt::format("{} {:>2} {}{} ({:.2f} s / {:.0f} s): {}", r.passed ? "PASS" : "FAIL", r.id, r.name,
                     r.soft ? " [soft]" : "", r.runtime, r.runtime_limit, r.detail);
}

void to_json(json& j, const CriterionResult& r) {
  j = json{{"id", r.id},           {"name", r.name},       {"passed", r.passed},
           {"soft", r.soft},       {"runtime", r.runtime}, {"runtime_limit", r.runtime_limit},
           {"detail", r.detail},   {"data", r.data}};
}

} // namespace mdlab
