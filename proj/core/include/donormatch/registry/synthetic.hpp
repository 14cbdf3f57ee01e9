#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "donormatch/registry/csv.hpp"
#include "donormatch/registry/eligibility.hpp"

namespace donormatch::registry {

struct SyntheticOptions {
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  /// Probability of flipping each label away from the hard rule.
  double noise = 0.0;
  EligibilityRule rule{};
};

/// Labeled donors with age uniform over the integers 10..75, weight uniform
/// on [30, 120] kg (0.1 kg resolution), distance uniform on [0, 15000] m and
/// days since donation uniform over 0..400 (about 5% never donated). Labels
/// follow `rule`, flipped with probability `noise`. Deterministic per seed.
std::vector<LabeledDonor> generate_synthetic(const SyntheticOptions& options);

}  // namespace donormatch::registry
