#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mdlab/report.hpp"

namespace mdlab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool soft = false;  // reported but informational
  double runtime = 0.0;
  double runtime_limit = 0.0;
  std::string detail;
  json data;
};

struct AcceptanceOptions {
  std::set<int> only;  // empty = all
};

/// Runs the desk-scale acceptance grid. on_result fires as each criterion
/// finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3 mirsky correlations (12.3 s / 30 s): detail".
std::string format_result(const CriterionResult& r);

void to_json(json& j, const CriterionResult& r);

} // namespace mdlab
