#include "mdlab/report.hpp"

#include <cmath>

#include <fmt/format.h>

namespace mdlab {

namespace {

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// JSON has no infinities or NaNs.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

std::string report_line(const RunManifest& manifest, const std::string& kind, const json& data) {
  json line;
  line["manifest"] = manifest;
  line["kind"] = kind;
  line["data"] = data;
  return line.dump();
}

void to_json(json& j, const RunManifest& m) {
  j = json{{"subcommand", m.subcommand},
           {"parameters", m.parameters},
           {"seed", m.seed},
           {"tool_version", m.version},
           {"wall_time", m.wall_time}};
}

void to_json(json& j, const InnerProductTrace& t) {
  json values = json::array();
  for (auto v : t.partial_values) values.push_back(complex_json(v));
  j = json{{"cutoffs", t.cutoffs},
           {"partial_values", values},
           {"max_successive_difference", t.max_successive_difference()}};
}

void to_json(json& j, const EulerProductTruncation& e) {
  j = json{{"label", e.label},
           {"cutoff_prime", e.cutoff_prime},
           {"partial_value", e.partial_value},
           {"finite_factor", e.finite_factor},
           {"tail_bound", e.tail_bound},
           {"lower", e.lower()},
           {"upper", e.upper()}};
}

void to_json(json& j, const RigidityNorm& r) {
  j = json{{"lag", r.lag},
           {"empirical", r.empirical},
           {"closed_form", r.closed_form},
           {"oracle_tail_bound", r.oracle_tail_bound}};
}

void to_json(json& j, const MomentReport& m) {
  j = json{{"N", m.N}, {"h", m.h}, {"k", m.k}, {"sum_squares", m.sum_squares}, {"S", m.S}};
  j["bound"] = m.bound ? json(*m.bound) : json(nullptr);
  j["ratio"] = m.ratio ? json(*m.ratio) : json(nullptr);
  j["chowla_ratio"] = m.chowla_ratio;
}

void to_json(json& j, const DivisorDecomposition& d) {
  j = json{{"X", d.X},         {"h", d.h},
           {"k", d.k},         {"lhs", d.lhs},
           {"rhs", d.rhs},     {"residual", d.residual},
           {"residual_over_x", d.residual_over_x()}};
}

void to_json(json& j, const AdmissibleDecision& d) {
  j = json{{"k", d.k},     {"h", d.h},
           {"epsilon", d.epsilon}, {"lhs", d.lhs},
           {"prime_sum", d.prime_sum}, {"rhs", d.rhs},
           {"admissible", d.admissible}};
}

void to_json(json& j, const DistanceReport& d) {
  j = json{{"spec", d.spec},         {"k", d.k},
           {"x", d.x},               {"T", d.T},
           {"argmin_t", d.argmin_t}, {"min_value", d.min_value}};
  j["character"] = d.character ? json(*d.character) : json(nullptr);
  j["t_grid"] = d.t_grid;
  j["values"] = d.values;
}

void to_json(json& j, const HalaszPair& h) {
  j = json{{"x", h.x}, {"k", h.k}, {"T", h.T}, {"lhs", h.lhs}, {"M", h.M}, {"rhs_shape", h.rhs_shape},
           {"ratio", h.ratio}};
}

void to_json(json& j, const CharacterFloorReport& r) {
  auto sample = [](const FloorSample& s) { return json{{"character", s.character}, {"t", s.t}, {"value", number(s.value)}}; };
  json samples = json::array(), violations = json::array();
  for (const auto& s : r.samples) samples.push_back(sample(s));
  for (const auto& s : r.violations) violations.push_back(sample(s));
  j = json{{"k", r.k},
           {"X", r.X},
           {"soft_floor", r.soft_floor},
           {"minimum", sample(r.minimum)},
           {"violations", violations},
           {"samples", samples}};
}

void to_json(json& j, const MeanSquareReport& r) {
  j = json{{"k", r.k},
           {"X", r.X},
           {"T", r.T},
           {"step", r.step},
           {"characters", r.characters},
           {"per_character", r.per_character},
           {"total", r.total},
           {"quadrature_error", r.quadrature_error}};
}

void to_json(json& j, const HybridSummary& s) {
  j = json{{"k", s.k},
           {"N", s.N},
           {"T", s.T},
           {"base_seed", s.base_seed},
           {"seeds", s.seeds},
           {"ratios", s.ratios},
           {"max_ratio", s.max_ratio},
           {"max_self_convergence", s.max_self_convergence}};
}

void to_json(json& j, const ParsevalRatio& p) {
  j = json{{"X", p.X},
           {"h", p.h},
           {"step", p.step},
           {"lhs", p.lhs},
           {"initial_integral", p.initial_integral},
           {"ladder_T", p.ladder_T},
           {"ladder_terms", p.ladder_terms},
           {"rhs", p.rhs},
           {"ratio", p.ratio}};
}

void to_json(json& j, const EntropyProfile& p) {
  json points = json::array();
  for (const auto& e : p.points)
    points.push_back(json{{"L", e.L}, {"distinct_count", e.distinct_count}, {"bits_per_symbol", e.bits_per_symbol}});
  j = json{{"N", p.N}, {"points", points}, {"log_counts_monotone", p.log_counts_monotone}};
}

void to_json(json& j, const ProjectionRigidity& r) {
  j = json{{"i", r.i},     {"l", r.l},
           {"j", r.j},     {"lag", r.lag},
           {"empirical", r.empirical}, {"closed_form", r.closed_form}};
}

void to_json(json& j, const AveragedRigidity& r) {
  j = json{{"i", r.i}, {"j", r.j}, {"h", r.h}, {"empirical", r.empirical}, {"closed_form", r.closed_form}};
}

void to_json(json& j, const RigidityFloor& f) {
  j = json{{"j", f.j},
           {"delta", f.delta},
           {"h", f.h},
           {"min_closed_form", f.min_closed_form},
           {"argmin_l", f.argmin_l},
           {"floor", f.floor}};
}

std::string format_number(double v) { return fmt::format("{}", v); }

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  out << fmt::format("{}\n", fmt::join(header, ","));
  for (const auto& r : rows) out << fmt::format("{}\n", fmt::join(r, ","));
}

void write_moment_csv(std::ostream& out, const std::vector<MomentReport>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& m : rows)
    cells.push_back({std::to_string(m.N), std::to_string(m.h), std::to_string(m.k), format_number(m.S),
                     m.bound ? format_number(*m.bound) : "", m.ratio ? format_number(*m.ratio) : "",
                     format_number(m.chowla_ratio)});
  write_csv(out, {"N", "h", "k", "S", "bound", "ratio", "chowla_ratio"}, cells);
}

void write_census_csv(std::ostream& out, const EntropyProfile& profile) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& e : profile.points)
    cells.push_back({std::to_string(e.L), std::to_string(profile.N), std::to_string(e.distinct_count),
                     format_number(e.bits_per_symbol)});
  write_csv(out, {"L", "N", "distinct_count", "bits_per_symbol"}, cells);
}

} // namespace mdlab
