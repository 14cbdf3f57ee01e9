#pragma once

#include <optional>
#include <span>
#include <vector>

#include "donormatch/registry/donor_record.hpp"

namespace donormatch::registry {

/// Crisp donor screening: age within [min_age, max_age] inclusive and weight
/// strictly above min_weight_exclusive_kg.
struct EligibilityRule {
  int min_age = 17;
  int max_age = 60;
  double min_weight_exclusive_kg = 40.0;

  /// Throws ValidationError unless min_age < max_age and the weight bound is
  /// positive.
  void validate() const;
};

enum class RejectReason { TooYoung, TooOld, Underweight };

const char* to_string(RejectReason reason) noexcept;

/// First failing check in the order age-low, age-high, weight.
std::optional<RejectReason> check(const DonorRecord& record, const EligibilityRule& rule);

struct Rejection {
  DonorRecord record;
  RejectReason reason;
};

struct FilterOutcome {
  std::vector<DonorRecord> eligible;
  std::vector<Rejection> rejected;
};

/// Partitions `records`, preserving their relative order on both sides.
FilterOutcome hard_filter(std::span<const DonorRecord> records, const EligibilityRule& rule = {});

}  // namespace donormatch::registry
