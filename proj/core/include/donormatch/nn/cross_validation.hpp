#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "donormatch/nn/network.hpp"
#include "donormatch/nn/training.hpp"

namespace donormatch::nn {

struct CvReport {
  std::vector<double> fold_accuracies;
  double mean_accuracy = 0.0;
};

/// Seeded shuffle of 0..n-1 split into k folds whose sizes differ by at most
/// one. Throws TooFewSamples when n < k.
std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k, std::uint64_t seed);

/// Seed used for fold `fold`'s network init and epoch shuffles. Each fold
/// gets its own stream so results do not depend on evaluation order.
std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) noexcept;

/// k-fold cross-validation: each fold trains a fresh network on the other
/// k-1 folds and reports argmax accuracy on itself.
CvReport cross_validate(std::span<const TrainingSample> samples, const NetworkConfig& config);

}  // namespace donormatch::nn
