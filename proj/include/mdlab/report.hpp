#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdlab/anqie_flow.hpp"
#include "mdlab/correlation.hpp"
#include "mdlab/dirichlet.hpp"
#include "mdlab/mean_state.hpp"
#include "mdlab/pretentious.hpp"
#include "mdlab/short_progression.hpp"

namespace mdlab {

using json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "1.0.0";

struct RunManifest {
  std::string subcommand;
  std::map<std::string, std::string> parameters;
  std::uint64_t seed = 0;
  std::string version = tool_version;
  double wall_time = 0.0;
};

/// {"manifest": {...}, "kind": kind, "data": data} on one line.
std::string report_line(const RunManifest& manifest, const std::string& kind, const json& data);

void to_json(json& j, const RunManifest& m);
void to_json(json& j, const InnerProductTrace& t);
void to_json(json& j, const EulerProductTruncation& e);
void to_json(json& j, const RigidityNorm& r);
void to_json(json& j, const MomentReport& m);
void to_json(json& j, const DivisorDecomposition& d);
void to_json(json& j, const AdmissibleDecision& d);
void to_json(json& j, const DistanceReport& d);
void to_json(json& j, const HalaszPair& h);
void to_json(json& j, const CharacterFloorReport& r);
void to_json(json& j, const MeanSquareReport& r);
void to_json(json& j, const HybridSummary& s);
void to_json(json& j, const ParsevalRatio& p);
void to_json(json& j, const EntropyProfile& p);
void to_json(json& j, const ProjectionRigidity& r);
void to_json(json& j, const AveragedRigidity& r);
void to_json(json& j, const RigidityFloor& f);

/// Shortest round-trip decimal form; identical inputs give identical text.
std::string format_number(double v);

/// Columns N,h,k,S,bound,ratio,chowla_ratio (bound and ratio empty when absent).
void write_moment_csv(std::ostream& out, const std::vector<MomentReport>& rows);
/// Columns L,N,distinct_count,bits_per_symbol.
void write_census_csv(std::ostream& out, const EntropyProfile& profile);
/// Generic table writer: header then rows of preformatted cells.
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

} // namespace mdlab
