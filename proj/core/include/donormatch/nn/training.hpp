#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "donormatch/nn/network.hpp"

namespace donormatch::nn {

struct TrainingSample {
  std::vector<double> features;
  std::vector<double> target;  // one-hot
};

/// Eligible -> (1, 0), ineligible -> (0, 1).
TrainingSample make_sample(double age_feature, double weight_feature, bool eligible);

/// Index of the larger output; ties go to index 0 (eligible).
std::size_t predicted_class(std::span<const double> outputs) noexcept;

/// Squared-error loss 0.5 * sum_k (target_k - output_k)^2 for one sample.
double sample_loss(const Parameters& params, const TrainingSample& sample);

/// Mean over samples and output units of (target - output)^2.
double mean_squared_error(const Parameters& params, std::span<const TrainingSample> samples);

/// Analytic gradient of sample_loss with respect to every parameter.
Parameters backprop(const Parameters& params, const TrainingSample& sample);

/// One momentum step: delta = -lr * grad + momentum * prev_delta, added to
/// the parameters and remembered as the new prev_delta.
void apply_update(Network& net, const Parameters& gradient, double learning_rate,
                  double momentum);

struct TrainReport {
  std::size_t epochs_run = 0;
  double final_mse = 0.0;
  /// Dataset MSE after each epoch.
  std::vector<double> mse_history;
};

/// Per-sample gradient descent with momentum. Sample order is reshuffled
/// each epoch from `config.rng_seed`. Stops after `max_epochs` or once the
/// epoch MSE drops below `error_epsilon`.
///
/// Throws EmptyDataset, ShapeMismatch, or ValidationError for a negative
/// learning rate or momentum outside [0, 1). A zero learning rate is
/// accepted and leaves the weights untouched.
TrainReport train(Network& net, std::span<const TrainingSample> samples,
                  const NetworkConfig& config);

/// Fraction of samples whose predicted class matches the target's.
double accuracy(const Parameters& params, std::span<const TrainingSample> samples);

}  // namespace donormatch::nn
