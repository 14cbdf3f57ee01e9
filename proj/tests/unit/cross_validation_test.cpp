#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "donormatch/error.hpp"
#include "donormatch/nn/cross_validation.hpp"

using namespace donormatch;
using namespace donormatch::nn;

TEST(Folds, TwoOnFour) {
  const auto folds = make_folds(4, 2, 1);
  ASSERT_EQ(folds.size(), 2u);
  EXPECT_EQ(folds[0].size(), 2u);
  EXPECT_EQ(folds[1].size(), 2u);
}

TEST(Folds, PartitionProperty) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(k, 300)(rng);
    const auto folds = make_folds(n, k, rng());
    ASSERT_EQ(folds.size(), k);
    std::vector<std::size_t> all;
    std::size_t lo = n, hi = 0;
    for (const auto& f : folds) {
      lo = std::min(lo, f.size());
      hi = std::max(hi, f.size());
      all.insert(all.end(), f.begin(), f.end());
    }
    ASSERT_LE(hi - lo, 1u);
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all.size(), n);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(all[i], i);
  }
}

TEST(Folds, SeededAndShuffled) {
  EXPECT_EQ(make_folds(100, 10, 5), make_folds(100, 10, 5));
  EXPECT_NE(make_folds(100, 10, 5), make_folds(100, 10, 6));
  EXPECT_THROW(make_folds(3, 4, 0), TooFewSamples);
  EXPECT_NE(fold_seed(1, 0), fold_seed(1, 1));
  EXPECT_NE(fold_seed(1, 0), fold_seed(2, 0));
}

TEST(CrossValidate, ConstantLabels) {
  std::vector<TrainingSample> data;
  for (int i = 0; i < 40; ++i) data.push_back(make_sample(i / 40.0, 0.5, true));
  NetworkConfig cfg;
  cfg.learning_rate = 0.1;
  cfg.folds = 4;
  cfg.max_epochs = 20;
  const auto report = cross_validate(data, cfg);
  ASSERT_EQ(report.fold_accuracies.size(), 4u);
  EXPECT_EQ(report.mean_accuracy, 1.0);
}

TEST(CrossValidate, Reproducible) {
  std::vector<TrainingSample> data;
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 60; ++i) {
    const double a = u(rng), b = u(rng);
    data.push_back(make_sample(a, b, a + b > 1));
  }
  NetworkConfig cfg;
  cfg.learning_rate = 0.3;
  cfg.folds = 5;
  cfg.max_epochs = 30;
  cfg.rng_seed = 77;
  const auto a = cross_validate(data, cfg);
  const auto b = cross_validate(data, cfg);
  EXPECT_EQ(a.fold_accuracies, b.fold_accuracies);
  EXPECT_EQ(a.mean_accuracy, b.mean_accuracy);
  double sum = 0;
  for (double x : a.fold_accuracies) sum += x;
  EXPECT_DOUBLE_EQ(a.mean_accuracy, sum / 5);
}

TEST(CrossValidate, TooFewSamples) {
  std::vector<TrainingSample> data{make_sample(0, 0, true)};
  EXPECT_THROW(cross_validate(data, NetworkConfig{}), TooFewSamples);
}
