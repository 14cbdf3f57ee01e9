#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "donormatch/pipeline/ranking.hpp"

namespace donormatch::pipeline {

struct ExplanationEntry {
  std::string attribute;
  double value;
  std::string label;
  double degree;
};

/// Everything needed to recompute a donor's priority by hand.
struct Explanation {
  std::string record_id;
  std::string name;
  std::vector<ExplanationEntry> entries;
  /// e.g. "min(0.574, 0.667, 0.324) = 0.324"; display rounding only.
  std::string combination;
  double fire_strength;
  double confidence_eligible;
  double confidence_ineligible;
};

Explanation explain(const RankedDonor& ranked);

nlohmann::json to_json(const Explanation& explanation);
/// Multi-line human-readable form.
std::string format_explanation(const Explanation& explanation);

}  // namespace donormatch::pipeline
