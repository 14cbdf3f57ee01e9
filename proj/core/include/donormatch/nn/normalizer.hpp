#pragma once

#include <array>
#include <span>
#include <vector>

namespace donormatch::nn {

/// Per-feature min-max scaling to [0, 1], fit on training data and stored
/// with the model so inference sees the same scaling.
struct Normalizer {
  std::vector<double> min;
  std::vector<double> max;

  /// clamp((v - min) / (max - min), 0, 1) per feature. Throws ShapeMismatch
  /// on a feature-count mismatch and DegenerateFeature if min == max.
  std::vector<double> apply(std::span<const double> raw) const;

  friend bool operator==(const Normalizer&, const Normalizer&) = default;
};

/// Fits per-feature bounds. Throws EmptyDataset on no rows, DegenerateFeature
/// when a feature is constant.
Normalizer fit_normalizer(std::span<const std::array<double, 2>> raw);

/// Normalized (age, weight) pair.
std::array<double, 2> normalize(const Normalizer& normalizer, double age, double weight);

}  // namespace donormatch::nn
