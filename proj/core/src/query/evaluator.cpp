#include "donormatch/query/evaluator.hpp"

#include <algorithm>
#include <cstdio>

#include "donormatch/error.hpp"

namespace donormatch::query {
namespace {

using Kind = Condition::Kind;

struct Resolved {
  const fuzzy::LinguisticVariable* variable;
  const fuzzy::FuzzySet* set;
  double value;
};

Resolved resolve(const Condition& pred, const AttributeMap& attributes,
                 const fuzzy::Catalog& catalog) {
  const auto* var = catalog.find(pred.attribute());
  if (var == nullptr) throw UnknownAttribute(pred.attribute());

  const auto* set = var->find_set(pred.label());
  if (set == nullptr) throw UnknownLabel(var->name, pred.label());

  auto lookup = [&](const std::string& key) -> const double* {
    for (const auto& [k, v] : attributes)
      if (fuzzy::iequals(k, key)) return &v;
    return nullptr;
  };
  const double* value = lookup(var->name);
  for (auto it = var->aliases.begin(); value == nullptr && it != var->aliases.end(); ++it)
    value = lookup(*it);
  if (value == nullptr) throw UnknownAttribute(pred.attribute());

  return {var, set, *value};
}

class DetailedEvaluator {
 public:
  DetailedEvaluator(const AttributeMap& attributes, const fuzzy::Catalog& catalog)
      : attributes_(attributes), catalog_(catalog) {}

  double run(const Condition& c, std::string& trace) {
    switch (c.kind()) {
      case Kind::Predicate: {
        const auto r = resolve(c, attributes_, catalog_);
        const double degree = r.set->curve(r.value);
        PredicateDegree entry{r.variable->name, r.set->label, r.value, degree};
        if (std::find(predicates_.begin(), predicates_.end(), entry) == predicates_.end())
          predicates_.push_back(std::move(entry));
        trace += format_degree(degree);
        return degree;
      }
      case Kind::Not: {
        trace += "1 - ";
        const bool wrap = !c.child().is(Kind::Predicate);
        if (wrap) trace += "(";
        const double inner = run(c.child(), trace);
        if (wrap) trace += ")";
        return 1.0 - inner;
      }
      case Kind::And:
      case Kind::Or: {
        trace += c.is(Kind::And) ? "min(" : "max(";
        const double result = chain(c, c.kind(), trace);
        trace += ")";
        return result;
      }
    }
    return 0.0;
  }

  std::vector<PredicateDegree> take_predicates() { return std::move(predicates_); }

 private:
  // Flattens runs of the same operator into one min(...)/max(...) term. The
  // fold order matches the tree, so the value equals plain evaluation.
  double chain(const Condition& c, Kind op, std::string& trace) {
    const auto operand = [&](const Condition& side) {
      return side.is(op) ? chain(side, op, trace) : run(side, trace);
    };
    const double lhs = operand(c.left());
    trace += ", ";
    const double rhs = operand(c.right());
    return op == Kind::And ? std::min(lhs, rhs) : std::max(lhs, rhs);
  }

  const AttributeMap& attributes_;
  const fuzzy::Catalog& catalog_;
  std::vector<PredicateDegree> predicates_;
};

}  // namespace

std::string format_degree(double degree) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", degree);
  return buf;
}

double evaluate(const Condition& c, const AttributeMap& attributes,
                const fuzzy::Catalog& catalog) {
  switch (c.kind()) {
    case Kind::Predicate: {
      const auto r = resolve(c, attributes, catalog);
      return r.set->curve(r.value);
    }
    case Kind::Not:
      return 1.0 - evaluate(c.child(), attributes, catalog);
    case Kind::And:
      return std::min(evaluate(c.left(), attributes, catalog),
                      evaluate(c.right(), attributes, catalog));
    case Kind::Or:
      return std::max(evaluate(c.left(), attributes, catalog),
                      evaluate(c.right(), attributes, catalog));
  }
  return 0.0;
}

Evaluation evaluate_detailed(const Condition& condition, const AttributeMap& attributes,
                             const fuzzy::Catalog& catalog) {
  DetailedEvaluator ev(attributes, catalog);
  Evaluation out;
  out.fire_strength = ev.run(condition, out.trace);
  out.predicates = ev.take_predicates();
  return out;
}

std::vector<RankedRow> run_query(const QueryAst& ast, std::span<const FuzzyRow> rows,
                                 const fuzzy::Catalog& catalog, double min_strength) {
  std::vector<RankedRow> ranked;
  for (const auto& row : rows) {
    Evaluation ev;
    try {
      ev = evaluate_detailed(ast.condition, row.attributes, catalog);
    } catch (Error& e) {
      e.set_record_id(row.id);
      throw;
    }
    if (ev.fire_strength > min_strength)
      ranked.push_back({row.id, std::move(ev.predicates), ev.fire_strength, std::move(ev.trace)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const RankedRow& a, const RankedRow& b) {
    if (a.fire_strength != b.fire_strength) return a.fire_strength > b.fire_strength;
    return a.record_id < b.record_id;
  });
  return ranked;
}

}  // namespace donormatch::query
