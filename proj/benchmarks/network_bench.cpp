#include <benchmark/benchmark.h>

#include <array>

#include "donormatch/nn/cross_validation.hpp"
#include "donormatch/nn/training.hpp"
#include "donormatch/pipeline/model_training.hpp"
#include "donormatch/registry/synthetic.hpp"

using namespace donormatch;

static void BM_Forward(benchmark::State& state) {
  const auto net = nn::init_network({});
  const std::array<double, 2> in{0.4, 0.7};
  for (auto _ : state) benchmark::DoNotOptimize(nn::forward(net, in));
}
BENCHMARK(BM_Forward);

static void BM_Backprop(benchmark::State& state) {
  const auto net = nn::init_network({});
  const auto sample = nn::make_sample(0.4, 0.7, true);
  for (auto _ : state) benchmark::DoNotOptimize(nn::backprop(net.params, sample));
}
BENCHMARK(BM_Backprop);

static void BM_TrainEpoch(benchmark::State& state) {
  const auto donors = registry::generate_synthetic({.count = 1000, .seed = 1});
  const auto data = pipeline::prepare_training_data(donors);
  nn::NetworkConfig cfg;
  cfg.max_epochs = 1;
  cfg.error_epsilon = 0;
  auto net = nn::init_network(cfg);
  for (auto _ : state) benchmark::DoNotOptimize(nn::train(net, data.samples, cfg));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_TrainEpoch);

static void BM_CrossValidate(benchmark::State& state) {
  const auto donors = registry::generate_synthetic({.count = 1000, .seed = 1});
  const auto data = pipeline::prepare_training_data(donors);
  const nn::NetworkConfig cfg;  // 10 folds x 100 epochs
  for (auto _ : state) benchmark::DoNotOptimize(nn::cross_validate(data.samples, cfg));
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);
