#include "donormatch/nn/network.hpp"

#include <cmath>
#include <random>

#include "donormatch/error.hpp"

namespace donormatch::nn {

void NetworkConfig::validate() const {
  for (auto n : layer_sizes)
    if (n < 1) throw ValidationError("every layer needs at least one unit");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
    throw ValidationError("learning rate must be positive");
  if (!(momentum >= 0.0 && momentum < 1.0)) throw ValidationError("momentum must be in [0, 1)");
  if (max_epochs < 1) throw ValidationError("max_epochs must be at least 1");
  if (!(error_epsilon >= 0.0)) throw ValidationError("error epsilon must be non-negative");
  if (folds < 2) throw ValidationError("cross-validation needs at least 2 folds");
}

Parameters::Parameters(std::size_t inputs, std::size_t hidden, std::size_t outputs)
    : inputs_(inputs),
      hidden_(hidden),
      outputs_(outputs),
      data_(inputs * hidden + hidden + hidden * outputs + outputs, 0.0) {}

Network make_network(std::size_t inputs, std::size_t hidden, std::size_t outputs) {
  return {Parameters(inputs, hidden, outputs), Parameters(inputs, hidden, outputs)};
}

Network init_network(const NetworkConfig& config) {
  Network net = make_network(config.inputs(), config.hidden(), config.outputs());
  std::mt19937_64 rng(config.rng_seed);
  std::uniform_real_distribution<double> uniform(-0.5, 0.5);

  auto& p = net.params;
  for (std::size_t i = 0; i < p.inputs(); ++i)
    for (std::size_t j = 0; j < p.hidden(); ++j) p.w_in_hidden(i, j) = uniform(rng);
  for (std::size_t j = 0; j < p.hidden(); ++j)
    for (std::size_t k = 0; k < p.outputs(); ++k) p.w_hidden_out(j, k) = uniform(rng);
  return net;
}

double sigmoid(double x) noexcept {
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Activations forward(const Parameters& p, std::span<const double> features) {
  if (features.size() != p.inputs())
    throw ShapeMismatch("expected " + std::to_string(p.inputs()) + " features, got " +
                        std::to_string(features.size()));

  Activations act{std::vector<double>(p.hidden()), std::vector<double>(p.outputs())};
  for (std::size_t j = 0; j < p.hidden(); ++j) {
    double net = p.b_hidden(j);
    for (std::size_t i = 0; i < p.inputs(); ++i) net += features[i] * p.w_in_hidden(i, j);
    act.hidden[j] = sigmoid(net);
  }
  for (std::size_t k = 0; k < p.outputs(); ++k) {
    double net = p.b_out(k);
    for (std::size_t j = 0; j < p.hidden(); ++j) net += act.hidden[j] * p.w_hidden_out(j, k);
    act.outputs[k] = sigmoid(net);
  }
  return act;
}

}  // namespace donormatch::nn
