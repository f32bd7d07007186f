// mdlab: command-line front end for the engines. Reports are JSON lines on
// stdout; --out writes the matching CSV table.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdlab/acceptance.hpp"
#include "mdlab/anqie_flow.hpp"
#include "mdlab/cache.hpp"
#include "mdlab/correlation.hpp"
#include "mdlab/dirichlet.hpp"
#include "mdlab/mean_state.hpp"
#include "mdlab/numeric_args.hpp"
#include "mdlab/parallel.hpp"
#include "mdlab/pretentious.hpp"
#include "mdlab/report.hpp"
#include "mdlab/short_progression.hpp"
#include "mdlab/sieve.hpp"

using namespace mdlab;

namespace {

using Clock = std::chrono::steady_clock;
const Clock::time_point started = Clock::now();

struct Globals {
  std::string threads;
  std::string cache_dir;
  std::string out;
  std::string seed = "0";
};

// String-backed options so every numeric flag goes through parse_integer /
// parse_real and is echoed, normalized, into the manifest.
class Params {
  template <class F>
  auto wrap(const std::string& name, F f) {
    try {
      return f();
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--" + name, e.what());
    }
  }
  std::string record(const std::string& name, std::string v) {
    recorded[name] = v;
    return v;
  }

 public:
  explicit Params(CLI::App* app) : app_(app) {}

  Params& add(const std::string& name, std::string fallback, const std::string& help) {
    auto& slot = values_[name];
    slot = std::move(fallback);
    app_->add_option("--" + name, slot, help)->capture_default_str();
    return *this;
  }

  std::string text(const std::string& name) { return record(name, values_.at(name)); }
  bool is_set(const std::string& name) const { return !values_.at(name).empty(); }
  std::uint64_t integer(const std::string& name) {
    const auto v = wrap(name, [&] { return parse_integer(values_.at(name)); });
    record(name, std::to_string(v));
    return v;
  }
  double real(const std::string& name) {
    const auto v = wrap(name, [&] { return parse_real(values_.at(name)); });
    record(name, format_number(v));
    return v;
  }
  std::vector<std::uint64_t> integers(const std::string& name) {
    const auto v = wrap(name, [&] { return parse_integer_list(values_.at(name)); });
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    record(name, s);
    return v;
  }
  std::vector<double> reals(const std::string& name) {
    const auto v = wrap(name, [&] { return parse_real_list(values_.at(name)); });
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ",") + format_number(x);
    record(name, s);
    return v;
  }

  std::map<std::string, std::string> recorded;

 private:
  CLI::App* app_;
  std::map<std::string, std::string> values_;
};

class Session {
 public:
  Session(std::string subcommand, Params& params, const Globals& g) : params_(params) {
    manifest_.subcommand = std::move(subcommand);
    if (!g.cache_dir.empty()) cache_.emplace(g.cache_dir);
    if (!g.out.empty()) out_path_ = g.out;
    manifest_.seed = parse_integer(g.seed);
  }

  void emit(const std::string& kind, json data) {
    manifest_.parameters = params_.recorded;
    manifest_.wall_time = std::chrono::duration<double>(Clock::now() - started).count();
    if (cache_) data["cache"] = json{{"dir", cache_->path_for({}, 1, 1).parent_path().string()},
                                     {"hits", cache_->hits()},
                                     {"misses", cache_->misses()}};
    std::cout << report_line(manifest_, kind, data) << '\n';
  }

  std::uint64_t seed() const { return manifest_.seed; }

  /// Opens the CSV target if --out was given.
  std::ostream* csv() {
    if (!out_path_) return nullptr;
    if (!csv_) {
      csv_ = std::make_unique<std::ofstream>(*out_path_, std::ios::binary);
      if (!*csv_) throw std::runtime_error("cannot open " + *out_path_ + " for writing");
    }
    return csv_.get();
  }

  SeqWindow window(CachedFunction fn, std::uint64_t start, std::uint64_t length) {
    return cache_ ? cache_->get(fn, start, length) : sieve_function(fn, start, length);
  }
  SeqWindow mobius(std::uint64_t length) { return window({FunctionTag::mobius, 0}, 1, length); }
  SeqWindow power_free(unsigned r, std::uint64_t length) {
    if (r == 2) return window({FunctionTag::mobius_squared, 0}, 1, length);
    return window({FunctionTag::power_free, static_cast<std::uint8_t>(r)}, 1, length);
  }

 private:
  Params& params_;
  RunManifest manifest_;
  std::optional<SieveCache> cache_;
  std::optional<std::string> out_path_;
  std::unique_ptr<std::ofstream> csv_;
};

MultiplicativeSpec spec_from(Params& p) {
  const auto name = p.text("spec");
  MultiplicativeSpec s;
  if (name == "one")
    s = MultiplicativeSpec::one();
  else if (name == "mobius")
    s = MultiplicativeSpec::mobius();
  else if (name == "liouville")
    s = MultiplicativeSpec::liouville();
  else if (name == "mu2")
    s = MultiplicativeSpec::power_free(2);
  else if (name == "mu3")
    s = MultiplicativeSpec::power_free(3);
  else if (name == "pretender")
    s = MultiplicativeSpec::archimedean(p.real("t0"));
  else
    throw CLI::ValidationError("--spec", "unknown spec '" + name + "' (one, mobius, liouville, mu2, mu3, pretender)");
  const auto k = p.integer("coprime");
  return k > 1 ? s.coprime(k) : s;
}

void add_spec_options(Params& p, const std::string& fallback) {
  p.add("spec", fallback, "one | mobius | liouville | mu2 | mu3 | pretender")
      .add("t0", "0.3", "t for the n^{it} pretender")
      .add("coprime", "1", "restrict to n coprime to this modulus");
}

SeqWindow sequence_window(Session& s, Params& p, const std::string& which, std::uint64_t length) {
  const auto name = p.text(which);
  if (name == "mobius") return s.mobius(length);
  if (name == "mu2") return s.power_free(2, length);
  if (name == "liouville") return s.window({FunctionTag::liouville, 0}, 1, length);
  if (name == "exp-sqrt") return sampler({PhaseKind::exp_sqrt, 0.0L}, 1, length);
  const long double theta = p.real("theta");
  if (name == "exp-linear") return sampler({PhaseKind::exp_linear, theta}, 1, length);
  if (name == "exp-quadratic") return sampler({PhaseKind::exp_quadratic, theta}, 1, length);
  throw CLI::ValidationError("--" + which, "unknown sequence '" + name + "'");
}

// --- subcommands ------------------------------------------------------------

int cmd_sieve(Session& s, Params& p) {
  const auto fn = p.text("fn");
  const auto start = p.integer("start"), length = p.integer("length");
  CachedFunction tag;
  if (fn == "mobius")
    tag = {FunctionTag::mobius, 0};
  else if (fn == "mu2")
    tag = {FunctionTag::mobius_squared, 0};
  else if (fn == "power-free") {
    const auto r = p.integer("r");
    tag = r == 2 ? CachedFunction{FunctionTag::mobius_squared, 0}
                 : CachedFunction{FunctionTag::power_free, static_cast<std::uint8_t>(r)};
  } else if (fn == "liouville")
    tag = {FunctionTag::liouville, 0};
  else
    throw CLI::ValidationError("--fn", "unknown function '" + fn + "'");
  const auto w = s.window(tag, start, length);
  std::int64_t sum = 0;
  std::uint64_t nonzero = 0;
  for (auto v : w.small()) {
    sum += v;
    nonzero += v != 0;
  }
  if (auto* out = s.csv()) {
    *out << "n,value\n";
    for (std::uint64_t i = 0; i < w.size(); ++i) *out << start + i << ',' << int(w.small()[i]) << '\n';
  }
  s.emit("sieve", json{{"function", tag.label()}, {"start", start}, {"length", length}, {"sum", sum}, {"nonzero", nonzero}});
  return 0;
}

int cmd_inner(Session& s, Params& p) {
  const CesaroMean mean(p.integers("cutoffs"));
  const auto m = p.integer("shift");
  const auto length = mean.max_cutoff() + m;
  const auto f = sequence_window(s, p, "f", length);
  const auto g = shift(sequence_window(s, p, "g", length), m);
  const auto trace = cesaro_inner(f, g, mean);
  if (auto* out = s.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < trace.cutoffs.size(); ++i)
      rows.push_back({std::to_string(trace.cutoffs[i]), format_number(trace.partial_values[i].real()),
                      format_number(trace.partial_values[i].imag())});
    write_csv(*out, {"N", "re", "im"}, rows);
  }
  s.emit("inner_product", trace);
  return 0;
}

int cmd_corr(Session& s, Params& p) {
  const auto r = static_cast<unsigned>(p.integer("r"));
  const auto ms = p.integers("m");
  const auto N = p.integer("N"), cutoff = p.integer("oracle-cutoff");
  std::uint64_t reach = 0;
  for (auto m : ms) reach = std::max(reach, m);
  const auto w = s.power_free(r, N + reach);
  std::vector<std::vector<std::string>> rows;
  for (auto m : ms) {
    const double emp = shift_correlation(w, w, m, N).real();
    const auto orc = mirsky_oracle(r, m, cutoff);
    rows.push_back({std::to_string(m), format_number(emp), format_number(orc.partial_value),
                    format_number(orc.tail_bound), format_number(std::abs(emp - orc.partial_value))});
    s.emit("correlation", json{{"r", r}, {"m", m}, {"N", N}, {"empirical", emp}, {"oracle", orc}});
  }
  if (auto* out = s.csv()) write_csv(*out, {"m", "empirical", "oracle", "tail_bound", "difference"}, rows);
  return 0;
}

int cmd_moment(Session& s, Params& p) {
  const auto N = p.integer("N");
  const auto hs = p.integers("h"), ks = p.integers("k");
  std::uint64_t reach = 0;
  for (auto h : hs)
    for (auto k : ks) reach = std::max(reach, h * k);
  const auto mu = s.mobius(N + reach);
  std::vector<MomentReport> rows;
  for (auto h : hs)
    for (auto k : ks) {
      rows.push_back(second_moment(N, h, k, mu));
      s.emit("moment", rows.back());
    }
  if (auto* out = s.csv()) write_moment_csv(*out, rows);
  return 0;
}

int cmd_decomp(Session& s, Params& p) {
  const auto Xs = p.integers("X");
  const auto h = p.integer("h");
  const auto ks = p.integers("k");
  std::uint64_t reach = 0;
  for (auto X : Xs)
    for (auto k : ks) reach = std::max(reach, 2 * X + h * k + k);
  const auto mu = s.mobius(reach);
  std::vector<std::vector<std::string>> rows;
  for (auto X : Xs)
    for (auto k : ks) {
      const auto d = divisor_decomposition(X, h, k, mu);
      rows.push_back({std::to_string(X), std::to_string(h), std::to_string(k), format_number(d.lhs),
                      format_number(d.rhs), format_number(d.residual), format_number(d.residual_over_x())});
      s.emit("divisor_decomposition", d);
    }
  if (auto* out = s.csv()) write_csv(*out, {"X", "h", "k", "lhs", "rhs", "residual", "residual_over_x"}, rows);
  return 0;
}

int cmd_distance(Session& s, Params& p) {
  const auto mode = p.text("mode");
  if (mode == "floor") {
    const auto r = character_distance_floor(p.integer("k"), p.integer("X"), p.reals("t"));
    if (auto* out = s.csv()) {
      std::vector<std::vector<std::string>> rows;
      for (const auto& x : r.samples) rows.push_back({x.character, format_number(x.t), format_number(x.value)});
      write_csv(*out, {"character", "t", "value"}, rows);
    }
    s.emit("character_floor", r);
    return 0;
  }
  const auto spec = spec_from(p);
  const auto x = p.integer("x"), k = p.integer("k"), points = p.integer("grid-points");
  const double T = p.real("T");
  DistanceReport r;
  if (mode == "m")
    r = m_of_f(spec, x, T, k, points);
  else if (mode == "characters")
    r = m_over_characters(spec, k, x, T, points);
  else
    throw CLI::ValidationError("--mode", "expected m, characters or floor");
  if (auto* out = s.csv()) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < r.t_grid.size(); ++i) rows.push_back({format_number(r.t_grid[i]), format_number(r.values[i])});
    write_csv(*out, {"t", "value"}, rows);
  }
  s.emit("distance", r);
  return 0;
}

int cmd_halasz(Session& s, Params& p) {
  const auto spec = spec_from(p);
  const auto h = halasz_bound_pair(spec, p.integer("x"), p.integer("k"), p.real("T"));
  if (auto* out = s.csv())
    write_csv(*out, {"x", "k", "T", "lhs", "M", "rhs_shape", "ratio"},
              {{std::to_string(h.x), std::to_string(h.k), format_number(h.T), format_number(h.lhs), format_number(h.M),
                format_number(h.rhs_shape), format_number(h.ratio)}});
  s.emit("halasz", h);
  return 0;
}

int cmd_dirichlet(Session& s, Params& p) {
  const auto mode = p.text("mode");
  if (mode == "orthogonality") {
    const auto k = p.integer("k");
    const auto chars = characters_mod(k);
    json labels = json::array();
    for (const auto& c : chars) labels.push_back(c.label());
    s.emit("characters", json{{"k", k}, {"phi", euler_phi(k)}, {"count", chars.size()},
                              {"max_deviation", orthogonality_check(k)}, {"characters", labels}});
    return 0;
  }
  if (mode == "value") {
    const auto spec = spec_from(p);
    const auto chars = characters_mod(p.integer("k"));
    const auto idx = p.integer("character");
    if (idx >= chars.size()) throw std::invalid_argument("character index out of range");
    const auto v = dirichlet_polynomial(spec, chars[idx], p.integer("X"), p.real("sigma"), p.real("t"));
    s.emit("dirichlet_value", json{{"character", chars[idx].label()}, {"value", json::array({v.real(), v.imag()})}});
    return 0;
  }
  if (mode == "mean-square") {
    const auto spec = spec_from(p);
    const auto X = p.integer("X");
    const double step = p.is_set("step") ? p.real("step") : max_quadrature_step(2 * X) / 2.0;
    const auto r = mean_square(spec, p.integer("k"), X, p.real("T"), step);
    if (auto* out = s.csv()) {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < r.characters.size(); ++i) rows.push_back({r.characters[i], format_number(r.per_character[i])});
      write_csv(*out, {"character", "integral"}, rows);
    }
    s.emit("mean_square", r);
    return 0;
  }
  if (mode == "hybrid") {
    std::optional<double> step;
    if (p.is_set("step")) step = p.real("step");
    const auto r = hybrid_mean_value_ratio(p.integer("N"), p.integer("k"), p.real("T"), p.integer("trials"), s.seed(), step);
    if (auto* out = s.csv()) {
      std::vector<std::vector<std::string>> rows;
      for (std::size_t i = 0; i < r.seeds.size(); ++i) rows.push_back({std::to_string(r.seeds[i]), format_number(r.ratios[i])});
      write_csv(*out, {"seed", "ratio"}, rows);
    }
    s.emit("hybrid_mean_value", r);
    return 0;
  }
  if (mode == "parseval") {
    const auto X = p.integer("X");
    const auto coeffs = p.is_set("coeffs") ? load_coefficients(p.text("coeffs"), 1) : s.mobius(4 * X + 1);
    std::optional<double> step;
    if (p.is_set("step")) step = p.real("step");
    const auto r = parseval_ratio(coeffs, p.integer("h"), X, step, p.real("t-cap"));
    s.emit("parseval", r);
    return 0;
  }
  throw CLI::ValidationError("--mode", "expected orthogonality, value, mean-square, hybrid or parseval");
}

int cmd_flow(Session& s, Params& p) {
  const auto N = p.integer("N");
  const auto Ls = p.integers("L");
  const auto fn = p.text("fn");
  SeqWindow f = fn == "mu2"      ? s.power_free(2, N)
                : fn == "shifts" ? product_of_shifts(p.integers("shifts"), 1, N)
                                 : throw CLI::ValidationError("--fn", "expected mu2 or shifts");
  EntropyProfile profile;
  profile.N = N;
  json inadmissible = json::array();
  for (auto L : Ls) {
    const auto c = window_census(f, static_cast<unsigned>(L), N);
    profile.points.push_back({static_cast<unsigned>(L), c.distinct_count, std::log2(static_cast<double>(c.distinct_count)) / L});
    if (profile.points.size() > 1 && c.distinct_count < profile.points[profile.points.size() - 2].distinct_count)
      profile.log_counts_monotone = false;
    std::uint64_t bad = 0;
    for (const auto& [w, n] : c.counts) bad += !mu2_admissible(w, static_cast<unsigned>(L));
    inadmissible.push_back(bad);
  }
  if (auto* out = s.csv()) write_census_csv(*out, profile);
  json data = profile;
  data["function"] = fn;
  data["inadmissible_windows"] = inadmissible;
  s.emit("entropy_profile", data);
  return 0;
}

int cmd_rigidity(Session& s, Params& p) {
  const auto mode = p.text("mode");
  const auto cutoff = p.integer("oracle-cutoff");
  if (mode == "floor") {
    s.emit("rigidity_floor", rigidity_floor(static_cast<unsigned>(p.integer("j")), p.real("delta"), cutoff));
    return 0;
  }
  const auto j = static_cast<unsigned>(p.integer("j"));
  const auto N = p.integer("N");
  if (mode == "averaged") {
    const auto i = p.integer("i"), h = p.integer("h");
    const auto w = s.power_free(2, i + h * rigidity_sequence(2, j) + N);
    s.emit("averaged_rigidity", averaged_rigidity(i, j, h, N, w, cutoff));
    return 0;
  }
  const auto ls = p.integers("l");
  std::uint64_t lmax = 0;
  for (auto l : ls) lmax = std::max(lmax, l);
  std::vector<std::vector<std::string>> rows;
  if (mode == "norm") {
    const auto r = static_cast<unsigned>(p.integer("r"));
    const auto w = s.power_free(r, N + lmax * rigidity_sequence(r, j));
    for (auto l : ls) {
      const auto x = rigidity_norm(r, j, l, N, cutoff, w);
      rows.push_back({std::to_string(l), std::to_string(x.lag), format_number(x.empirical), format_number(x.closed_form)});
      s.emit("rigidity_norm", x);
    }
  } else if (mode == "projection") {
    const auto i = p.integer("i");
    const auto w = s.power_free(2, i + lmax * rigidity_sequence(2, j) + N);
    for (auto l : ls) {
      const auto x = projection_rigidity(i, l, j, N, w, cutoff);
      rows.push_back({std::to_string(l), std::to_string(x.lag), format_number(x.empirical), format_number(x.closed_form)});
      s.emit("projection_rigidity", x);
    }
  } else {
    throw CLI::ValidationError("--mode", "expected norm, projection, averaged or floor");
  }
  if (auto* out = s.csv()) write_csv(*out, {"l", "lag", "empirical", "closed_form"}, rows);
  return 0;
}

int cmd_verify(Session& s, Params& p) {
  const auto suite = p.text("suite");
  if (suite != "primary") throw CLI::ValidationError("--suite", "only the 'primary' suite exists");
  AcceptanceOptions options;
  if (p.is_set("only"))
    for (auto id : p.integers("only")) options.only.insert(static_cast<int>(id));
  int failed = 0;
  run_acceptance(options, [&](const CriterionResult& r) {
    std::cerr << format_result(r) << '\n';
    if (!r.passed) ++failed;
    s.emit("criterion", r);
  });
  return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mdlab: multiplicative-function experiments"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads (default: MDLAB_THREADS, then hardware)");
  app.add_option("--cache-dir", g.cache_dir, "directory for cached sieve windows");
  app.add_option("--out", g.out, "write the report table as CSV to this path");
  app.add_option("--seed", g.seed, "base random seed")->capture_default_str();

  using Handler = int (*)(Session&, Params&);
  struct Sub {
    CLI::App* app;
    std::unique_ptr<Params> params;
    Handler run;
  };
  std::vector<Sub> subs;
  auto sub = [&](const char* name, const char* help, Handler run) -> Params& {
    auto* a = app.add_subcommand(name, help);
    subs.push_back({a, std::make_unique<Params>(a), run});
    return *subs.back().params;
  };

  sub("sieve", "sieve an arithmetic function over a range", cmd_sieve)
      .add("fn", "mobius", "mobius | mu2 | power-free | liouville")
      .add("r", "2", "power for power-free")
      .add("start", "1", "first n")
      .add("length", "1e6", "number of values");
  sub("inner", "Cesaro inner products along a cutoff ladder", cmd_inner)
      .add("f", "mobius", "mobius | mu2 | liouville | exp-sqrt | exp-linear | exp-quadratic")
      .add("g", "mu2", "same choices as --f")
      .add("theta", "1.4142135623730950488", "phase parameter")
      .add("shift", "0", "shift applied to g")
      .add("cutoffs", "1e4,1e5,1e6,1e7", "averaging lengths");
  sub("corr", "shift correlations of mu_r against the product oracle", cmd_corr)
      .add("r", "2", "power")
      .add("m", "1..10", "shifts")
      .add("N", "1e7", "averaging length")
      .add("oracle-cutoff", "1e6", "Euler product cutoff");
  sub("moment", "second moment of Mobius sums over short progressions", cmd_moment)
      .add("N", "1e7", "range")
      .add("h", "100", "progression lengths")
      .add("k", "1", "common differences");
  sub("decomp", "divisor decomposition of the second moment", cmd_decomp)
      .add("X", "1e5", "scales")
      .add("h", "10", "progression length")
      .add("k", "1,6", "moduli");
  auto& dist = sub("distance", "pretentious distance minimizers", cmd_distance);
  add_spec_options(dist, "mobius");
  dist.add("mode", "m", "m | characters | floor")
      .add("x", "1e6", "prime cutoff")
      .add("T", "10", "t range")
      .add("k", "1", "modulus")
      .add("grid-points", "16", "minimum grid size")
      .add("X", "1e6", "prime cutoff for the character floor")
      .add("t", "0,1,2,5,10", "t values for the character floor");
  auto& hal = sub("halasz", "mean value against the Halasz-type shape", cmd_halasz);
  add_spec_options(hal, "one");
  hal.add("x", "1e6", "length").add("k", "1", "modulus").add("T", "10", "t range");
  auto& dir = sub("dirichlet", "Dirichlet characters and polynomials", cmd_dirichlet);
  add_spec_options(dir, "mobius");
  dir.add("mode", "orthogonality", "orthogonality | value | mean-square | hybrid | parseval")
      .add("k", "1", "modulus")
      .add("X", "1e4", "polynomial length scale")
      .add("T", "50", "integration range")
      .add("step", "", "quadrature step (default: derived from the ceiling)")
      .add("N", "512", "hybrid coefficient count")
      .add("trials", "50", "hybrid random vectors")
      .add("h", "100", "parseval window")
      .add("t-cap", "1000", "largest parseval ladder T (also capped at X)")
      .add("coeffs", "", "parseval coefficients (MDL1 or one value per line from n=1)")
      .add("character", "0", "character index for --mode value")
      .add("sigma", "1", "real part")
      .add("t", "0", "imaginary part");
  sub("flow", "window census and entropy profile", cmd_flow)
      .add("fn", "mu2", "mu2 | shifts")
      .add("shifts", "0,1", "shift set for product_of_shifts")
      .add("L", "10..20", "window lengths")
      .add("N", "1e7", "scan range");
  sub("rigidity", "rigidity norms along n_j = (p_1...p_j)^r", cmd_rigidity)
      .add("mode", "norm", "norm | projection | averaged | floor")
      .add("r", "2", "power")
      .add("j", "3", "sequence index")
      .add("l", "1,2", "multipliers")
      .add("i", "0", "projection offset")
      .add("h", "100", "averaging length")
      .add("delta", "0.5", "floor exponent")
      .add("N", "1e7", "averaging length")
      .add("oracle-cutoff", "1e6", "Euler product cutoff");
  sub("verify", "run the acceptance grid", cmd_verify)
      .add("suite", "primary", "suite name")
      .add("only", "", "criterion ids to run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }

  try {
    if (!g.threads.empty()) set_thread_count(static_cast<unsigned>(parse_integer(g.threads)));
    for (auto& s : subs)
      if (s.app->parsed()) {
        Session session(s.app->get_name(), *s.params, g);
        return s.run(session, *s.params);
      }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
