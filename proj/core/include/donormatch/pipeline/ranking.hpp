#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "donormatch/fuzzy/catalog.hpp"
#include "donormatch/nn/model.hpp"
#include "donormatch/query/evaluator.hpp"
#include "donormatch/registry/eligibility.hpp"

namespace donormatch::pipeline {

struct RankOptions {
  /// Alpha cut: only donors with fire strength strictly above this appear.
  double min_strength = 0.0;
  /// Stand-in for days_since_donation when a donor has never donated.
  int never_donated_days = registry::kDefaultNeverDonatedDays;
  /// Optional crisp pre-filter on exact blood type.
  std::optional<registry::BloodType> blood_type;
};

struct RankedDonor {
  registry::DonorRecord record;
  std::vector<query::PredicateDegree> degrees;
  double fire_strength;
  nn::Classification classification;
  std::string trace;

  double nn_confidence() const noexcept { return classification.confidence_eligible; }
};

/// Intermediate sets, for auditing each stage.
struct RankStages {
  registry::FilterOutcome hard_filter;
  std::vector<registry::DonorRecord> nn_eligible;
  std::vector<registry::DonorRecord> nn_rejected;
  std::vector<RankedDonor> ranked;
};

/// Hard filter -> neural eligibility gate -> fuzzy ranking.
///
/// The neural network only gates (and breaks ties); the reported priority is
/// the fuzzy fire strength. Order: fire strength descending, eligible
/// confidence descending, id ascending. Errors are re-thrown with their
/// stage set ("parse", "hard_filter", "classify", "query").
RankStages rank_donors_staged(std::string_view query_text,
                              std::span<const registry::DonorRecord> records,
                              const nn::TrainedModel& model, const fuzzy::Catalog& catalog,
                              const registry::EligibilityRule& rule = {},
                              const RankOptions& options = {});

std::vector<RankedDonor> rank_donors(std::string_view query_text,
                                     std::span<const registry::DonorRecord> records,
                                     const nn::TrainedModel& model,
                                     const fuzzy::Catalog& catalog,
                                     const registry::EligibilityRule& rule = {},
                                     const RankOptions& options = {});

/// Fuzzy ranking without the hard filter or neural gate.
std::vector<query::RankedRow> query_donors(std::string_view query_text,
                                           std::span<const registry::DonorRecord> records,
                                           const fuzzy::Catalog& catalog,
                                           const RankOptions& options = {});

}  // namespace donormatch::pipeline
