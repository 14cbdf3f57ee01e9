#include "donormatch/nn/cross_validation.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>

#include "donormatch/error.hpp"

namespace donormatch::nn {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t fold_seed(std::uint64_t seed, std::size_t fold) noexcept {
  return splitmix64(seed ^ splitmix64(fold + 1));
}

std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k,
                                                 std::uint64_t seed) {
  if (k < 2) throw ValidationError("cross-validation needs at least 2 folds");
  if (n < k) throw TooFewSamples(n, k);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(splitmix64(seed));
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t next = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = n / k + (f < n % k ? 1 : 0);
    folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(next),
                    order.begin() + static_cast<std::ptrdiff_t>(next + size));
    next += size;
  }
  return folds;
}

CvReport cross_validate(std::span<const TrainingSample> samples, const NetworkConfig& config) {
  if (samples.empty()) throw EmptyDataset();
  config.validate();
  const auto folds = make_folds(samples.size(), config.folds, config.rng_seed);

  auto run_fold = [&](std::size_t f) {
    std::vector<TrainingSample> train_set;
    std::vector<TrainingSample> test_set;
    train_set.reserve(samples.size());
    for (std::size_t g = 0; g < folds.size(); ++g)
      for (auto idx : folds[g]) (g == f ? test_set : train_set).push_back(samples[idx]);

    NetworkConfig fold_config = config;
    fold_config.rng_seed = fold_seed(config.rng_seed, f);
    Network net = init_network(fold_config);
    train(net, train_set, fold_config);
    return accuracy(net.params, test_set);
  };

  // Folds share nothing mutable, so they train concurrently.
  std::vector<std::future<double>> pending;
  pending.reserve(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f)
    pending.push_back(std::async(std::launch::async, run_fold, f));

  CvReport report;
  for (auto& fut : pending) report.fold_accuracies.push_back(fut.get());
  report.mean_accuracy =
      std::accumulate(report.fold_accuracies.begin(), report.fold_accuracies.end(), 0.0) /
      static_cast<double>(report.fold_accuracies.size());
  return report;
}

}  // namespace donormatch::nn
