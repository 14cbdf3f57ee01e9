#include "donormatch/pipeline/model_training.hpp"

#include "donormatch/error.hpp"

namespace donormatch::pipeline {

TrainingData prepare_training_data(std::span<const registry::LabeledDonor> donors) {
  if (donors.empty()) throw EmptyDataset();
  std::vector<std::array<double, 2>> raw;
  raw.reserve(donors.size());
  for (const auto& d : donors)
    raw.push_back({static_cast<double>(d.record.age), d.record.weight_kg});

  TrainingData data{nn::fit_normalizer(raw), {}};
  data.samples.reserve(donors.size());
  for (std::size_t i = 0; i < donors.size(); ++i) {
    const auto f = nn::normalize(data.normalizer, raw[i][0], raw[i][1]);
    data.samples.push_back(nn::make_sample(f[0], f[1], donors[i].eligible));
  }
  return data;
}

TrainOutcome train_model(std::span<const registry::LabeledDonor> donors,
                         const nn::NetworkConfig& config) {
  config.validate();
  auto data = prepare_training_data(donors);

  TrainOutcome out;
  out.cv = nn::cross_validate(data.samples, config);
  out.model.config = config;
  out.model.normalizer = std::move(data.normalizer);
  out.model.network = nn::init_network(config);
  out.final_fit = nn::train(out.model.network, data.samples, config);
  // Momentum memory is optimizer state; the finished model does not carry it.
  for (double& d : out.model.network.prev_deltas.values()) d = 0.0;
  return out;
}

}  // namespace donormatch::pipeline
