#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "donormatch/error.hpp"
#include "donormatch/pipeline/explain.hpp"
#include "donormatch/pipeline/model_training.hpp"
#include "donormatch/pipeline/ranking.hpp"
#include "donormatch/registry/synthetic.hpp"
#include "reference_fixtures.hpp"

using namespace donormatch;
using namespace donormatch::pipeline;

class Pipeline : public ::testing::Test {
 protected:
  nn::TrainedModel model = fixtures::reference_model();
  fuzzy::Catalog catalog = fuzzy::standard_catalog();
  std::vector<registry::DonorRecord> persons = fixtures::reference_donors();
};

TEST_F(Pipeline, FixtureRanking) {
  const auto ranked = rank_donors(fixtures::kReferenceQuery, persons, model, catalog);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].record.id, "p1");
  EXPECT_NEAR(ranked[0].fire_strength, 22.0 / 27.0, 1e-12);
  EXPECT_EQ(ranked[1].record.id, "p2");
  EXPECT_NEAR(ranked[1].fire_strength, 68.0 / 210.0, 1e-12);
  EXPECT_EQ(ranked[2].record.id, "p3");
  EXPECT_NEAR(ranked[2].fire_strength, 1891.0 / 9000.0, 1e-12);
  for (const auto& r : ranked) EXPECT_EQ(r.classification.verdict, nn::Verdict::Eligible);
  EXPECT_EQ(ranked[1].trace, "min(0.574, 0.667, 0.324)");
}

TEST_F(Pipeline, UnderageNeverRanked) {
  persons[0].age = 16;
  const auto stages = rank_donors_staged(fixtures::kReferenceQuery, persons, model, catalog);
  ASSERT_EQ(stages.hard_filter.rejected.size(), 1u);
  EXPECT_EQ(stages.hard_filter.rejected[0].record.id, "p1");
  for (const auto& r : stages.ranked) EXPECT_NE(r.record.id, "p1");
}

TEST_F(Pipeline, NetworkGates) {
  model.network.params.b_out(0) = -50;  // eligible output pinned near zero
  const auto stages = rank_donors_staged(fixtures::kReferenceQuery, persons, model, catalog);
  EXPECT_EQ(stages.hard_filter.eligible.size(), 3u);
  EXPECT_TRUE(stages.nn_eligible.empty());
  EXPECT_EQ(stages.nn_rejected.size(), 3u);
  EXPECT_TRUE(stages.ranked.empty());
}

TEST_F(Pipeline, TieBreakByConfidenceThenId) {
  // Same fuzzy inputs, different weights: equal fire strength.
  auto a = persons[0], b = persons[0], c = persons[0];
  a.id = "c";
  b.id = "b";
  b.weight_kg = 45;  // lower eligible confidence
  c.id = "a";
  std::vector<registry::DonorRecord> rs{a, b, c};
  const auto ranked = rank_donors(fixtures::kReferenceQuery, rs, model, catalog);
  ASSERT_EQ(ranked.size(), 3u);
  EXPECT_EQ(ranked[0].fire_strength, ranked[2].fire_strength);
  EXPECT_EQ(ranked[0].record.id, "a");
  EXPECT_EQ(ranked[1].record.id, "c");
  EXPECT_EQ(ranked[2].record.id, "b");
}

TEST_F(Pipeline, EmptyRegistry) {
  std::vector<registry::DonorRecord> none;
  EXPECT_TRUE(rank_donors(fixtures::kReferenceQuery, none, model, catalog).empty());
}

TEST_F(Pipeline, BloodTypeAndAlphaCut) {
  RankOptions opts;
  opts.blood_type = registry::BloodType{registry::AboGroup::B, registry::RhFactor::Positive};
  auto ranked = rank_donors(fixtures::kReferenceQuery, persons, model, catalog, {}, opts);
  ASSERT_EQ(ranked.size(), 1u);
  EXPECT_EQ(ranked[0].record.id, "p2");

  opts = {};
  opts.min_strength = 0.3;
  ranked = rank_donors(fixtures::kReferenceQuery, persons, model, catalog, {}, opts);
  EXPECT_EQ(ranked.size(), 2u);
}

TEST_F(Pipeline, StageTagging) {
  try {
    rank_donors("SELECT * FROM t WHERE", persons, model, catalog);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), "parse");
  }
  try {
    rank_donors(R"(SELECT * FROM t WHERE berat = "Ringan")", persons, model, catalog);
    FAIL();
  } catch (const UnknownAttribute& e) {
    EXPECT_EQ(e.stage(), "query");
    EXPECT_EQ(e.record_id(), "p1");
  }
}

TEST_F(Pipeline, QueryWithoutGate) {
  persons[0].age = 10;
  const auto rows = query_donors(R"(SELECT * FROM t WHERE usia = "Muda")", persons, catalog);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].record_id, "p1");
  EXPECT_EQ(rows[0].fire_strength, 1.0);
}

TEST_F(Pipeline, Explain) {
  const auto ranked = rank_donors(fixtures::kReferenceQuery, persons, model, catalog);
  const auto ex = explain(ranked[1]);
  EXPECT_EQ(ex.record_id, "p2");
  ASSERT_EQ(ex.entries.size(), 3u);
  EXPECT_EQ(ex.entries[0].attribute, "distance");
  EXPECT_EQ(ex.entries[0].label, "Dekat");
  EXPECT_EQ(ex.entries[0].value, 4835);
  EXPECT_EQ(ex.combination, "min(0.574, 0.667, 0.324) = 0.324");
  EXPECT_EQ(ex.fire_strength, ranked[1].fire_strength);

  const auto j = to_json(ex);
  EXPECT_EQ(j["id"], "p2");
  EXPECT_EQ(j["predicates"].size(), 3u);
  EXPECT_NE(format_explanation(ex).find("min(0.574, 0.667, 0.324) = 0.324"), std::string::npos);
}

TEST(ModelTraining, PrepareAndTrain) {
  const auto donors = registry::generate_synthetic({.count = 200, .seed = 2});
  const auto data = prepare_training_data(donors);
  ASSERT_EQ(data.samples.size(), 200u);
  for (const auto& s : data.samples)
    for (double f : s.features) {
      ASSERT_GE(f, 0.0);
      ASSERT_LE(f, 1.0);
    }
  nn::NetworkConfig cfg;
  cfg.learning_rate = 0.3;
  cfg.max_epochs = 20;
  cfg.folds = 4;
  cfg.rng_seed = 5;
  const auto out = train_model(donors, cfg);
  EXPECT_EQ(out.cv.fold_accuracies.size(), 4u);
  EXPECT_EQ(out.model.normalizer, data.normalizer);
  EXPECT_EQ(out.model.config, cfg);
  const auto again = train_model(donors, cfg);
  EXPECT_EQ(again.model, out.model);
}

TEST(ModelTraining, Errors) {
  std::vector<registry::LabeledDonor> none;
  EXPECT_THROW(prepare_training_data(none), EmptyDataset);
}

TEST(ModelTraining, ResultEqualsReloaded) {
  const auto donors = registry::generate_synthetic({.count = 100, .seed = 8});
  nn::NetworkConfig cfg;
  cfg.learning_rate = 0.3;
  cfg.max_epochs = 5;
  cfg.folds = 2;
  const auto out = train_model(donors, cfg);
  EXPECT_EQ(nn::model_from_json(nn::model_to_json(out.model)), out.model);
}
