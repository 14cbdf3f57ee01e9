#include "donormatch/nn/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "donormatch/error.hpp"

namespace donormatch::nn {

TrainingSample make_sample(double age_feature, double weight_feature, bool eligible) {
  return {{age_feature, weight_feature}, eligible ? std::vector{1.0, 0.0} : std::vector{0.0, 1.0}};
}

std::size_t predicted_class(std::span<const double> outputs) noexcept {
  std::size_t best = 0;
  for (std::size_t k = 1; k < outputs.size(); ++k)
    if (outputs[k] > outputs[best]) best = k;
  return best;
}

double sample_loss(const Parameters& params, const TrainingSample& sample) {
  const auto act = forward(params, sample.features);
  double loss = 0.0;
  for (std::size_t k = 0; k < act.outputs.size(); ++k) {
    const double diff = sample.target[k] - act.outputs[k];
    loss += diff * diff;
  }
  return 0.5 * loss;
}

double mean_squared_error(const Parameters& params, std::span<const TrainingSample> samples) {
  if (samples.empty()) return 0.0;
  double total = 0.0;
  for (const auto& s : samples) total += 2.0 * sample_loss(params, s);
  return total / static_cast<double>(samples.size() * params.outputs());
}

Parameters backprop(const Parameters& p, const TrainingSample& sample) {
  if (sample.target.size() != p.outputs())
    throw ShapeMismatch("expected " + std::to_string(p.outputs()) + " targets, got " +
                        std::to_string(sample.target.size()));
  const auto act = forward(p, sample.features);
  Parameters grad(p.inputs(), p.hidden(), p.outputs());

  std::vector<double> out_delta(p.outputs());
  for (std::size_t k = 0; k < p.outputs(); ++k) {
    const double o = act.outputs[k];
    out_delta[k] = (o - sample.target[k]) * o * (1.0 - o);
    grad.b_out(k) = out_delta[k];
    for (std::size_t j = 0; j < p.hidden(); ++j) grad.w_hidden_out(j, k) = out_delta[k] * act.hidden[j];
  }

  for (std::size_t j = 0; j < p.hidden(); ++j) {
    double back = 0.0;
    for (std::size_t k = 0; k < p.outputs(); ++k) back += out_delta[k] * p.w_hidden_out(j, k);
    const double h = act.hidden[j];
    const double delta = back * h * (1.0 - h);
    grad.b_hidden(j) = delta;
    for (std::size_t i = 0; i < p.inputs(); ++i) grad.w_in_hidden(i, j) = delta * sample.features[i];
  }
  return grad;
}

void apply_update(Network& net, const Parameters& gradient, double learning_rate,
                  double momentum) {
  if (!net.params.same_shape(gradient) || !net.params.same_shape(net.prev_deltas))
    throw ShapeMismatch("gradient and network shapes differ");
  auto w = net.params.values();
  auto prev = net.prev_deltas.values();
  const auto g = gradient.values();
  for (std::size_t n = 0; n < w.size(); ++n) {
    const double delta = -learning_rate * g[n] + momentum * prev[n];
    w[n] += delta;
    prev[n] = delta;
  }
}

TrainReport train(Network& net, std::span<const TrainingSample> samples,
                  const NetworkConfig& config) {
  if (samples.empty()) throw EmptyDataset();
  if (net.params.inputs() != config.inputs() || net.params.hidden() != config.hidden() ||
      net.params.outputs() != config.outputs() || !net.params.same_shape(net.prev_deltas))
    throw ShapeMismatch("network shape does not match the configured layer sizes");
  for (const auto& s : samples)
    if (s.features.size() != config.inputs() || s.target.size() != config.outputs())
      throw ShapeMismatch("training sample shape does not match the configured layer sizes");
  if (!(config.learning_rate >= 0.0) || !std::isfinite(config.learning_rate))
    throw ValidationError("learning rate must be non-negative");
  if (!(config.momentum >= 0.0 && config.momentum < 1.0))
    throw ValidationError("momentum must be in [0, 1)");

  std::mt19937_64 rng(config.rng_seed);
  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  TrainReport report;
  for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (auto idx : order)
      apply_update(net, backprop(net.params, samples[idx]), config.learning_rate,
                   config.momentum);

    const double mse = mean_squared_error(net.params, samples);
    report.mse_history.push_back(mse);
    report.epochs_run = epoch + 1;
    report.final_mse = mse;
    if (mse < config.error_epsilon) break;
  }
  return report;
}

double accuracy(const Parameters& params, std::span<const TrainingSample> samples) {
  if (samples.empty()) return 0.0;
  std::size_t correct = 0;
  for (const auto& s : samples) {
    const auto act = forward(params, s.features);
    if (predicted_class(act.outputs) == predicted_class(s.target)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(samples.size());
}

}  // namespace donormatch::nn
