#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "donormatch/error.hpp"
#include "donormatch/nn/training.hpp"

using namespace donormatch;
using namespace donormatch::nn;

namespace {
Network random_network(std::mt19937_64& rng, std::size_t in, std::size_t hid, std::size_t out) {
  auto net = make_network(in, hid, out);
  std::uniform_real_distribution<double> w(-2, 2);
  for (double& v : net.params.values()) v = w(rng);
  return net;
}

TrainingSample random_sample(std::mt19937_64& rng, std::size_t in, std::size_t out) {
  std::uniform_real_distribution<double> x(0, 1);
  TrainingSample s;
  for (std::size_t i = 0; i < in; ++i) s.features.push_back(x(rng));
  s.target.assign(out, 0.0);
  s.target[std::uniform_int_distribution<std::size_t>(0, out - 1)(rng)] = 1.0;
  return s;
}
}  // namespace

TEST(Training, MakeSampleOneHot) {
  EXPECT_EQ(make_sample(0.1, 0.2, true).target, (std::vector<double>{1, 0}));
  EXPECT_EQ(make_sample(0.1, 0.2, false).target, (std::vector<double>{0, 1}));
  EXPECT_EQ(make_sample(0.1, 0.2, false).features, (std::vector<double>{0.1, 0.2}));
}

TEST(Training, PredictedClassTie) {
  const std::vector<double> tie{0.5, 0.5};
  EXPECT_EQ(predicted_class(tie), 0u);
  const std::vector<double> second{0.2, 0.7};
  EXPECT_EQ(predicted_class(second), 1u);
}

TEST(Training, LossAndMse) {
  auto net = make_network(2, 3, 2);  // outputs are 0.5
  const auto s = make_sample(0, 0, true);
  EXPECT_DOUBLE_EQ(sample_loss(net.params, s), 0.25);
  std::vector<TrainingSample> v{s};
  EXPECT_DOUBLE_EQ(mean_squared_error(net.params, v), 0.25);
}

TEST(Training, GradientMatchesFiniteDifferences) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto net = random_network(rng, 2, 3, 2);
    const auto s = random_sample(rng, 2, 2);
    const auto g = backprop(net.params, s);
    auto p = net.params;
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double orig = p.values()[i];
      const double h = 1e-5;
      p.values()[i] = orig + h;
      const double up = sample_loss(p, s);
      p.values()[i] = orig - h;
      const double down = sample_loss(p, s);
      p.values()[i] = orig;
      const double numeric = (up - down) / (2 * h);
      const double analytic = g.values()[i];
      const double scale = std::max({std::abs(numeric), std::abs(analytic), 1e-8});
      ASSERT_LT(std::abs(numeric - analytic) / scale, 1e-4)
          << "trial " << trial << " param " << i;
    }
  }
}

TEST(Training, MomentumRecurrence) {
  std::mt19937_64 rng(8);
  auto net = random_network(rng, 2, 3, 2);
  const double lr = 0.3, mom = 0.9;
  Parameters prev = net.prev_deltas;
  for (int step = 0; step < 20; ++step) {
    const auto s = random_sample(rng, 2, 2);
    const auto g = backprop(net.params, s);
    const auto before = net.params;
    apply_update(net, g, lr, mom);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double expected = -lr * g.values()[i] + mom * prev.values()[i];
      ASSERT_EQ(net.prev_deltas.values()[i], expected);
      ASSERT_EQ(net.params.values()[i], before.values()[i] + expected);
    }
    prev = net.prev_deltas;
  }
}

TEST(Training, SmallStepsDescendOnOneSample) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    auto net = random_network(rng, 2, 3, 2);
    const auto s = random_sample(rng, 2, 2);
    double loss = sample_loss(net.params, s);
    for (int step = 0; step < 200; ++step) {
      apply_update(net, backprop(net.params, s), 0.05, 0.0);
      const double next = sample_loss(net.params, s);
      ASSERT_LE(next, loss);
      loss = next;
    }
  }
}

TEST(Training, ZeroLearningRateKeepsWeights) {
  std::mt19937_64 rng(4);
  auto net = random_network(rng, 2, 3, 2);
  const auto before = net.params;
  std::vector<TrainingSample> data;
  for (int i = 0; i < 10; ++i) data.push_back(random_sample(rng, 2, 2));
  NetworkConfig cfg;
  cfg.learning_rate = 0;
  cfg.max_epochs = 5;
  const auto report = train(net, data, cfg);
  EXPECT_EQ(net.params, before);
  EXPECT_EQ(report.epochs_run, 5u);
  EXPECT_EQ(report.mse_history.size(), 5u);
}

TEST(Training, EarlyStop) {
  std::vector<TrainingSample> data{make_sample(0, 0, true), make_sample(1, 1, false)};
  auto net = make_network(2, 3, 2);
  NetworkConfig cfg;
  cfg.learning_rate = 0.001;
  cfg.error_epsilon = 1.0;  // initial mse 0.25 is already below
  const auto report = train(net, data, cfg);
  EXPECT_EQ(report.epochs_run, 1u);
  EXPECT_LT(report.final_mse, 1.0);
}

TEST(Training, LearnsSeparableData) {
  std::vector<TrainingSample> data;
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    data.push_back(make_sample(x, 0.5, x < 0.5));
  }
  NetworkConfig cfg;
  cfg.learning_rate = 0.5;
  cfg.max_epochs = 2000;
  cfg.error_epsilon = 1e-4;
  cfg.rng_seed = 1;
  auto net = init_network(cfg);
  const auto report = train(net, data, cfg);
  EXPECT_LT(report.final_mse, report.mse_history.front());
  EXPECT_GE(accuracy(net.params, data), 0.95);
}

TEST(Training, Errors) {
  auto net = make_network(2, 3, 2);
  NetworkConfig cfg;
  std::vector<TrainingSample> none;
  EXPECT_THROW(train(net, none, cfg), EmptyDataset);
  std::vector<TrainingSample> wrong{{{1, 2, 3}, {1, 0}}};
  EXPECT_THROW(train(net, wrong, cfg), ShapeMismatch);
  std::vector<TrainingSample> ok{make_sample(0, 0, true)};
  cfg.learning_rate = -1;
  EXPECT_THROW(train(net, ok, cfg), ValidationError);
  cfg.learning_rate = 0.1;
  cfg.momentum = 1.5;
  EXPECT_THROW(train(net, ok, cfg), ValidationError);
}
