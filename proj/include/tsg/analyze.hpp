#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace tsg {

inline const std::vector<std::string> kAnalysisChecks = {"valency", "components", "cosets",
                                                         "burnside", "theorem24", "retract"};

struct AnalysisRequest {
  std::string group_spec;
  std::string left_spec;
  std::string right_spec;
  // Subset of kAnalysisChecks; empty means valency and components.
  std::vector<std::string> checks;
  bool emit_dot = false;
};

// {instance, group, order, left, right, checks, results: {<check>: {...}},
//  report: [...], pass, dot?}. Every section is computed from one built
// digraph. Throws tsg::error for unparsable specs, unknown checks, and
// "retract" on a group that is not a semidirect product.
nlohmann::json analyze(const AnalysisRequest& request);

}  // namespace tsg
