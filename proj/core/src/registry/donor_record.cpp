#include "donormatch/registry/donor_record.hpp"

#include <cctype>
#include <cmath>

#include <nlohmann/json.hpp>

#include "donormatch/error.hpp"

namespace donormatch::registry {

std::optional<BloodType> BloodType::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.size() < 2) return std::nullopt;

  BloodType bt;
  const char sign = text.back();
  if (sign == '+')
    bt.rh = RhFactor::Positive;
  else if (sign == '-')
    bt.rh = RhFactor::Negative;
  else
    return std::nullopt;

  std::string group;
  for (char c : text.substr(0, text.size() - 1))
    group.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (group == "A")
    bt.group = AboGroup::A;
  else if (group == "B")
    bt.group = AboGroup::B;
  else if (group == "AB")
    bt.group = AboGroup::AB;
  else if (group == "O")
    bt.group = AboGroup::O;
  else
    return std::nullopt;
  return bt;
}

std::string BloodType::to_string() const {
  std::string out;
  switch (group) {
    case AboGroup::A: out = "A"; break;
    case AboGroup::B: out = "B"; break;
    case AboGroup::AB: out = "AB"; break;
    case AboGroup::O: out = "O"; break;
  }
  out.push_back(rh == RhFactor::Positive ? '+' : '-');
  return out;
}

void validate(const DonorRecord& r) {
  if (r.id.empty()) throw ValidationError("id must be nonempty");
  if (r.age < 0) throw ValidationError("age must be >= 0");
  if (!(r.weight_kg > 0.0) || !std::isfinite(r.weight_kg))
    throw ValidationError("weight_kg must be > 0");
  if (!(r.distance_m >= 0.0) || !std::isfinite(r.distance_m))
    throw ValidationError("distance_m must be >= 0");
  if (r.days_since_donation && *r.days_since_donation < 0)
    throw ValidationError("days_since_donation must be >= 0");
}

query::AttributeMap donor_attributes(const DonorRecord& r, int never_donated_days) {
  const double age = r.age;
  const double days = r.days_since_donation.value_or(never_donated_days);
  return {
      {"age", age},       {"usia", age},  {"distance", r.distance_m},
      {"jarak", r.distance_m}, {"time", days}, {"waktu_donor", days},
  };
}

nlohmann::json to_json(const DonorRecord& r) {
  nlohmann::json j = {
      {"id", r.id},
      {"name", r.name},
      {"blood_type", r.blood_type.to_string()},
      {"age", r.age},
      {"weight_kg", r.weight_kg},
      {"distance_m", r.distance_m},
      {"days_since_donation", nullptr},
      {"phone", r.phone},
  };
  if (r.days_since_donation) j["days_since_donation"] = *r.days_since_donation;
  return j;
}

DonorRecord record_from_json(const nlohmann::json& j) {
  DonorRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.name = j.at("name").get<std::string>();
    const auto bt = BloodType::parse(j.at("blood_type").get<std::string>());
    if (!bt) throw ValidationError("invalid blood_type");
    r.blood_type = *bt;
    r.age = j.at("age").get<int>();
    r.weight_kg = j.at("weight_kg").get<double>();
    r.distance_m = j.at("distance_m").get<double>();
    const auto& days = j.at("days_since_donation");
    if (!days.is_null()) r.days_since_donation = days.get<int>();
    r.phone = j.at("phone").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("invalid donor record: ") + e.what());
  }
  validate(r);
  return r;
}

}  // namespace donormatch::registry
