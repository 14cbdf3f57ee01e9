#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "donormatch/query/evaluator.hpp"

namespace donormatch::registry {

enum class AboGroup { A, B, AB, O };
enum class RhFactor { Positive, Negative };

struct BloodType {
  AboGroup group = AboGroup::O;
  RhFactor rh = RhFactor::Positive;

  /// Parses "A+", "ab-", "O+" ... Returns nullopt on anything else.
  static std::optional<BloodType> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BloodType&, const BloodType&) = default;
};

struct DonorRecord {
  std::string id;
  std::string name;
  BloodType blood_type;
  int age = 0;
  double weight_kg = 0.0;
  double distance_m = 0.0;       // to the collection center
  std::optional<int> days_since_donation;  // nullopt: never donated
  std::string phone;

  friend bool operator==(const DonorRecord&, const DonorRecord&) = default;
};

/// Throws ValidationError naming the first violated field.
void validate(const DonorRecord& record);

inline constexpr int kDefaultNeverDonatedDays = 400;

/// Crisp values the fuzzy query sees, keyed by both the English and the
/// Indonesian attribute names (age/usia, distance/jarak, time/waktu_donor).
query::AttributeMap donor_attributes(const DonorRecord& record,
                                     int never_donated_days = kDefaultNeverDonatedDays);

nlohmann::json to_json(const DonorRecord& record);
/// Throws ValidationError on missing or invalid fields.
DonorRecord record_from_json(const nlohmann::json& j);

}  // namespace donormatch::registry
