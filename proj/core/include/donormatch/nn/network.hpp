#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace donormatch::nn {

/// Hyperparameters of the input-hidden-output sigmoid network and its
/// training schedule. Defaults are the donor-eligibility setup: 2 inputs
/// (age, weight), 3 hidden units, 2 outputs (eligible, ineligible).
struct NetworkConfig {
  std::array<std::size_t, 3> layer_sizes{2, 3, 2};
  double learning_rate = 0.001;
  double momentum = 0.9;
  std::size_t max_epochs = 100;
  double error_epsilon = 0.001;
  std::size_t folds = 10;
  std::uint64_t rng_seed = 0;

  std::size_t inputs() const noexcept { return layer_sizes[0]; }
  std::size_t hidden() const noexcept { return layer_sizes[1]; }
  std::size_t outputs() const noexcept { return layer_sizes[2]; }

  /// Throws ValidationError unless learning_rate > 0, 0 <= momentum < 1,
  /// max_epochs >= 1, folds >= 2 and every layer has at least one unit.
  void validate() const;

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// All weights and biases of the network in one flat buffer.
///
/// Layout: input->hidden weights (row = input), hidden biases,
/// hidden->output weights (row = hidden unit), output biases. Gradients and
/// momentum memory use the same type.
class Parameters {
 public:
  Parameters() = default;
  Parameters(std::size_t inputs, std::size_t hidden, std::size_t outputs);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t hidden() const noexcept { return hidden_; }
  std::size_t outputs() const noexcept { return outputs_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& w_in_hidden(std::size_t i, std::size_t j) { return data_[i * hidden_ + j]; }
  double w_in_hidden(std::size_t i, std::size_t j) const { return data_[i * hidden_ + j]; }
  double& b_hidden(std::size_t j) { return data_[hidden_bias_offset() + j]; }
  double b_hidden(std::size_t j) const { return data_[hidden_bias_offset() + j]; }
  double& w_hidden_out(std::size_t j, std::size_t k) { return data_[out_weight_offset() + j * outputs_ + k]; }
  double w_hidden_out(std::size_t j, std::size_t k) const { return data_[out_weight_offset() + j * outputs_ + k]; }
  double& b_out(std::size_t k) { return data_[out_bias_offset() + k]; }
  double b_out(std::size_t k) const { return data_[out_bias_offset() + k]; }

  std::span<double> values() noexcept { return data_; }
  std::span<const double> values() const noexcept { return data_; }

  bool same_shape(const Parameters& other) const noexcept {
    return inputs_ == other.inputs_ && hidden_ == other.hidden_ && outputs_ == other.outputs_;
  }

  friend bool operator==(const Parameters&, const Parameters&) = default;

 private:
  std::size_t hidden_bias_offset() const noexcept { return inputs_ * hidden_; }
  std::size_t out_weight_offset() const noexcept { return hidden_bias_offset() + hidden_; }
  std::size_t out_bias_offset() const noexcept { return out_weight_offset() + hidden_ * outputs_; }

  std::size_t inputs_ = 0;
  std::size_t hidden_ = 0;
  std::size_t outputs_ = 0;
  std::vector<double> data_;
};

struct Network {
  Parameters params;
  /// Last applied update per parameter; zero until the first training step.
  Parameters prev_deltas;

  friend bool operator==(const Network&, const Network&) = default;
};

/// Zero-initialised network of the given shape.
Network make_network(std::size_t inputs, std::size_t hidden, std::size_t outputs);

/// Weights uniform in [-0.5, 0.5] from `config.rng_seed`, biases and
/// momentum memory zero.
Network init_network(const NetworkConfig& config);

/// Logistic function, evaluated without overflow for large |x|.
double sigmoid(double x) noexcept;

struct Activations {
  std::vector<double> hidden;
  std::vector<double> outputs;
};

/// Throws ShapeMismatch if `features` does not match the input layer.
Activations forward(const Parameters& params, std::span<const double> features);
inline Activations forward(const Network& net, std::span<const double> features) {
  return forward(net.params, features);
}

}  // namespace donormatch::nn
