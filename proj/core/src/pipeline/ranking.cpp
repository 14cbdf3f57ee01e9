#include "donormatch/pipeline/ranking.hpp"

#include <algorithm>
#include <map>

#include "donormatch/error.hpp"
#include "donormatch/query/parser.hpp"

namespace donormatch::pipeline {
namespace {

template <class F>
auto staged(const char* stage, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (Error& e) {
    if (e.stage().empty()) e.set_stage(stage);
    throw;
  }
}

std::vector<query::FuzzyRow> fuzzy_rows(std::span<const registry::DonorRecord> records,
                                        const RankOptions& options) {
  std::vector<query::FuzzyRow> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    if (options.blood_type && r.blood_type != *options.blood_type) continue;
    rows.push_back({r.id, registry::donor_attributes(r, options.never_donated_days)});
  }
  return rows;
}

}  // namespace

RankStages rank_donors_staged(std::string_view query_text,
                              std::span<const registry::DonorRecord> records,
                              const nn::TrainedModel& model, const fuzzy::Catalog& catalog,
                              const registry::EligibilityRule& rule,
                              const RankOptions& options) {
  const auto ast = staged("parse", [&] { return query::parse_query(query_text); });

  RankStages stages;
  stages.hard_filter = staged("hard_filter", [&] {
    rule.validate();
    return registry::hard_filter(records, rule);
  });

  std::map<std::string, nn::Classification, std::less<>> verdicts;
  staged("classify", [&] {
    for (const auto& r : stages.hard_filter.eligible) {
      try {
        const auto c = nn::classify(model, r.age, r.weight_kg);
        if (c.verdict == nn::Verdict::Eligible) {
          stages.nn_eligible.push_back(r);
          verdicts.emplace(r.id, c);
        } else {
          stages.nn_rejected.push_back(r);
        }
      } catch (Error& e) {
        e.set_record_id(r.id);
        throw;
      }
    }
  });

  const auto rows = fuzzy_rows(stages.nn_eligible, options);
  const auto ranked = staged("query", [&] {
    return query::run_query(ast, rows, catalog, options.min_strength);
  });

  std::map<std::string_view, const registry::DonorRecord*, std::less<>> by_id;
  for (const auto& r : stages.nn_eligible) by_id.emplace(r.id, &r);

  for (const auto& row : ranked) {
    stages.ranked.push_back({*by_id.at(row.record_id), row.per_predicate, row.fire_strength,
                             verdicts.at(row.record_id), row.trace});
  }
  std::sort(stages.ranked.begin(), stages.ranked.end(),
            [](const RankedDonor& a, const RankedDonor& b) {
              if (a.fire_strength != b.fire_strength) return a.fire_strength > b.fire_strength;
              if (a.nn_confidence() != b.nn_confidence())
                return a.nn_confidence() > b.nn_confidence();
              return a.record.id < b.record.id;
            });
  return stages;
}

std::vector<RankedDonor> rank_donors(std::string_view query_text,
                                     std::span<const registry::DonorRecord> records,
                                     const nn::TrainedModel& model,
                                     const fuzzy::Catalog& catalog,
                                     const registry::EligibilityRule& rule,
                                     const RankOptions& options) {
  return rank_donors_staged(query_text, records, model, catalog, rule, options).ranked;
}

std::vector<query::RankedRow> query_donors(std::string_view query_text,
                                           std::span<const registry::DonorRecord> records,
                                           const fuzzy::Catalog& catalog,
                                           const RankOptions& options) {
  const auto ast = staged("parse", [&] { return query::parse_query(query_text); });
  const auto rows = fuzzy_rows(records, options);
  return staged("query",
                [&] { return query::run_query(ast, rows, catalog, options.min_strength); });
}

}  // namespace donormatch::pipeline
