#include "donormatch/registry/eligibility.hpp"

#include "donormatch/error.hpp"

namespace donormatch::registry {

void EligibilityRule::validate() const {
  if (!(min_age < max_age)) throw ValidationError("eligibility rule needs min_age < max_age");
  if (!(min_weight_exclusive_kg > 0.0))
    throw ValidationError("eligibility rule needs a positive weight bound");
}

const char* to_string(RejectReason reason) noexcept {
  switch (reason) {
    case RejectReason::TooYoung: return "TooYoung";
    case RejectReason::TooOld: return "TooOld";
    case RejectReason::Underweight: return "Underweight";
  }
  return "?";
}

std::optional<RejectReason> check(const DonorRecord& r, const EligibilityRule& rule) {
  if (r.age < rule.min_age) return RejectReason::TooYoung;
  if (r.age > rule.max_age) return RejectReason::TooOld;
  if (!(r.weight_kg > rule.min_weight_exclusive_kg)) return RejectReason::Underweight;
  return std::nullopt;
}

FilterOutcome hard_filter(std::span<const DonorRecord> records, const EligibilityRule& rule) {
  FilterOutcome out;
  for (const auto& r : records) {
    if (auto reason = check(r, rule))
      out.rejected.push_back({r, *reason});
    else
      out.eligible.push_back(r);
  }
  return out;
}

}  // namespace donormatch::registry
