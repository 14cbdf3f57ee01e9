#include "donormatch/pipeline/explain.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace donormatch::pipeline {

Explanation explain(const RankedDonor& ranked) {
  Explanation ex;
  ex.record_id = ranked.record.id;
  ex.name = ranked.record.name;
  for (const auto& d : ranked.degrees) ex.entries.push_back({d.attribute, d.value, d.label, d.degree});
  ex.combination = ranked.trace + " = " + query::format_degree(ranked.fire_strength);
  ex.fire_strength = ranked.fire_strength;
  ex.confidence_eligible = ranked.classification.confidence_eligible;
  ex.confidence_ineligible = ranked.classification.confidence_ineligible;
  return ex;
}

nlohmann::json to_json(const Explanation& ex) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : ex.entries)
    entries.push_back(
        {{"attribute", e.attribute}, {"value", e.value}, {"label", e.label}, {"degree", e.degree}});
  return {
      {"id", ex.record_id},
      {"name", ex.name},
      {"predicates", std::move(entries)},
      {"combination", ex.combination},
      {"fire_strength", ex.fire_strength},
      {"confidence_eligible", ex.confidence_eligible},
      {"confidence_ineligible", ex.confidence_ineligible},
  };
}

std::string format_explanation(const Explanation& ex) {
  std::string out = ex.record_id;
  if (!ex.name.empty()) out += " (" + ex.name + ")";
  out += "\n";
  for (const auto& e : ex.entries) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "  %-10s %10g  %-10s %s\n", e.attribute.c_str(), e.value,
                  e.label.c_str(), query::format_degree(e.degree).c_str());
    out += buf;
  }
  out += "  priority   " + ex.combination + "\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "  network    eligible %.4f, ineligible %.4f\n",
                ex.confidence_eligible, ex.confidence_ineligible);
  out += buf;
  return out;
}

}  // namespace donormatch::pipeline
