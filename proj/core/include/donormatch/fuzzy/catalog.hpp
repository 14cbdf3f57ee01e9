#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "donormatch/fuzzy/membership.hpp"

namespace donormatch::fuzzy {

struct FuzzySet {
  std::string label;
  MembershipCurve curve;
  /// Alternative spellings accepted in queries (e.g. English terms).
  std::vector<std::string> aliases{};

  bool matches(std::string_view name) const;
  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
};

struct LinguisticVariable {
  std::string name;
  std::string units;
  std::vector<FuzzySet> sets;
  std::vector<std::string> aliases{};

  bool matches(std::string_view name) const;
  /// Case-insensitive lookup by label or alias; nullptr when absent.
  const FuzzySet* find_set(std::string_view label) const;
  friend bool operator==(const LinguisticVariable&, const LinguisticVariable&) = default;
};

/// The set of linguistic variables a query can reference.
///
/// Names, labels and aliases are matched case-insensitively. Construction
/// rejects empty variables, duplicate labels within a variable, and names or
/// aliases shared by two variables.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<LinguisticVariable> variables);

  const std::vector<LinguisticVariable>& variables() const noexcept { return variables_; }
  const LinguisticVariable* find(std::string_view name) const;

  friend bool operator==(const Catalog&, const Catalog&) = default;

 private:
  std::vector<LinguisticVariable> variables_;
};

/// Age (years), distance (meters) and time since last donation (days), each
/// with left-shoulder / triangle / right-shoulder sets.
Catalog standard_catalog();

/// Accepts `{ name: [ {label, shape, params, aliases?}, ... ] }` or the
/// long form `{ name: { units, aliases, sets: [...] } }`.
Catalog catalog_from_json(const nlohmann::json& doc);
nlohmann::json catalog_to_json(const Catalog& catalog);

/// Throws IoError or FormatError.
Catalog load_catalog(const std::filesystem::path& path);

bool iequals(std::string_view a, std::string_view b) noexcept;

}  // namespace donormatch::fuzzy
