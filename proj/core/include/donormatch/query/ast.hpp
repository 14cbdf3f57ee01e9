#pragma once

#include <memory>
#include <string>

namespace donormatch::query {

/// Immutable boolean condition tree over `attribute = "label"` predicates.
///
/// Subtrees are shared, so copies are cheap and the tree is safe to read
/// from several threads.
class Condition {
 public:
  enum class Kind { Predicate, And, Or, Not };

  static Condition predicate(std::string attribute, std::string label);
  static Condition conjunction(Condition left, Condition right);
  static Condition disjunction(Condition left, Condition right);
  static Condition negation(Condition child);

  Kind kind() const noexcept { return kind_; }
  bool is(Kind k) const noexcept { return kind_ == k; }

  /// Predicate accessors.
  const std::string& attribute() const noexcept { return attribute_; }
  const std::string& label() const noexcept { return label_; }

  /// And/Or operands; `child()` is the Not operand.
  const Condition& left() const noexcept { return *left_; }
  const Condition& right() const noexcept { return *right_; }
  const Condition& child() const noexcept { return *left_; }

  std::size_t depth() const noexcept;

  friend bool operator==(const Condition& a, const Condition& b);

 private:
  Condition() = default;

  Kind kind_ = Kind::Predicate;
  std::string attribute_;
  std::string label_;
  std::shared_ptr<const Condition> left_;
  std::shared_ptr<const Condition> right_;
};

struct QueryAst {
  std::string table;
  Condition condition;

  friend bool operator==(const QueryAst&, const QueryAst&) = default;
};

}  // namespace donormatch::query
