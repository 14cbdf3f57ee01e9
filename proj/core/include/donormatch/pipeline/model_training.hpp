#pragma once

#include <span>
#include <vector>

#include "donormatch/nn/cross_validation.hpp"
#include "donormatch/nn/model.hpp"
#include "donormatch/registry/csv.hpp"

namespace donormatch::pipeline {

struct TrainingData {
  nn::Normalizer normalizer;
  std::vector<nn::TrainingSample> samples;
};

/// Fits the (age, weight) normalizer on `donors` and builds one-hot samples.
TrainingData prepare_training_data(std::span<const registry::LabeledDonor> donors);

struct TrainOutcome {
  nn::CvReport cv;
  nn::TrainReport final_fit;
  nn::TrainedModel model;
};

/// Cross-validates with `config`, then trains the final model on all data.
/// The returned network has zeroed momentum memory, like a loaded model.
TrainOutcome train_model(std::span<const registry::LabeledDonor> donors,
                         const nn::NetworkConfig& config);

}  // namespace donormatch::pipeline
