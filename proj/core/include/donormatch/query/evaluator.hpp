#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "donormatch/fuzzy/catalog.hpp"
#include "donormatch/query/ast.hpp"

namespace donormatch::query {

/// Crisp attribute values of one row. A catalog variable is looked up under
/// its name and then each of its aliases (case-insensitively).
using AttributeMap = std::map<std::string, double, std::less<>>;

struct PredicateDegree {
  std::string attribute;  // canonical variable name
  std::string label;      // canonical set label
  double value;           // crisp input
  double degree;

  friend bool operator==(const PredicateDegree&, const PredicateDegree&) = default;
};

/// Fire strength of `condition` for one row: predicates are membership
/// degrees, AND is min, OR is max, NOT is 1 - x.
///
/// Throws UnknownAttribute when the attribute is missing from the catalog or
/// the row, UnknownLabel when the variable has no such set.
double evaluate(const Condition& condition, const AttributeMap& attributes,
                const fuzzy::Catalog& catalog);

struct Evaluation {
  double fire_strength;
  /// One entry per distinct (attribute, label) predicate, in query order.
  std::vector<PredicateDegree> predicates;
  /// Human-readable combination, e.g. "min(0.574, 0.667, 0.324)". Degrees
  /// are rounded to three decimals here only.
  std::string trace;
};

Evaluation evaluate_detailed(const Condition& condition, const AttributeMap& attributes,
                             const fuzzy::Catalog& catalog);

struct FuzzyRow {
  std::string id;
  AttributeMap attributes;
};

struct RankedRow {
  std::string record_id;
  std::vector<PredicateDegree> per_predicate;
  double fire_strength;
  std::string trace;
};

/// Evaluates every row and keeps those with fire strength strictly above
/// `min_strength`, ordered by strength descending then id ascending.
/// Evaluation errors are re-thrown tagged with the offending row id.
std::vector<RankedRow> run_query(const QueryAst& ast, std::span<const FuzzyRow> rows,
                                 const fuzzy::Catalog& catalog, double min_strength = 0.0);

/// Formats a degree for display (three decimals).
std::string format_degree(double degree);

}  // namespace donormatch::query
