#include "donormatch/query/parser.hpp"

#include <algorithm>

#include "donormatch/error.hpp"

namespace donormatch::query {

Condition Condition::predicate(std::string attribute, std::string label) {
  if (attribute.empty()) throw ValidationError("predicate attribute must be nonempty");
  if (label.empty()) throw ValidationError("predicate label must be nonempty");
  Condition c;
  c.kind_ = Kind::Predicate;
  c.attribute_ = std::move(attribute);
  c.label_ = std::move(label);
  return c;
}

Condition Condition::conjunction(Condition left, Condition right) {
  Condition c;
  c.kind_ = Kind::And;
  c.left_ = std::make_shared<const Condition>(std::move(left));
  c.right_ = std::make_shared<const Condition>(std::move(right));
  return c;
}

Condition Condition::disjunction(Condition left, Condition right) {
  Condition c = conjunction(std::move(left), std::move(right));
  c.kind_ = Kind::Or;
  return c;
}

Condition Condition::negation(Condition child) {
  Condition c;
  c.kind_ = Kind::Not;
  c.left_ = std::make_shared<const Condition>(std::move(child));
  return c;
}

std::size_t Condition::depth() const noexcept {
  switch (kind_) {
    case Kind::Predicate: return 1;
    case Kind::Not: return 1 + child().depth();
    default: return 1 + std::max(left().depth(), right().depth());
  }
}

bool operator==(const Condition& a, const Condition& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Condition::Kind::Predicate:
      return a.attribute_ == b.attribute_ && a.label_ == b.label_;
    case Condition::Kind::Not:
      return a.child() == b.child();
    default:
      return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

class Parser {
 public:
  Parser(std::span<const Token> tokens, std::size_t end_position)
      : tokens_(tokens), end_(end_position) {}

  QueryAst query() {
    expect(TokenKind::Select, "SELECT");
    expect(TokenKind::Star, "'*' (only SELECT * is supported)");
    expect(TokenKind::From, "FROM");
    std::string table = expect(TokenKind::Identifier, "table name").text;
    expect(TokenKind::Where, "WHERE");
    Condition condition = cond();
    if (!at_end()) fail("AND, OR or end of query");
    return {std::move(table), std::move(condition)};
  }

 private:
  Condition cond() {
    Condition lhs = term();
    while (accept(TokenKind::Or)) lhs = Condition::disjunction(std::move(lhs), term());
    return lhs;
  }

  Condition term() {
    Condition lhs = factor();
    while (accept(TokenKind::And)) lhs = Condition::conjunction(std::move(lhs), factor());
    return lhs;
  }

  Condition factor() {
    if (at_end()) fail("a condition");
    if (++nesting_ > kMaxNesting) {
      throw ParseError(position(), "at most " + std::to_string(kMaxNesting) + " nested conditions",
                       "deeper nesting");
    }
    Condition result = [&] {
      if (accept(TokenKind::Not)) return Condition::negation(factor());
      if (accept(TokenKind::LParen)) {
        Condition inner = cond();
        expect(TokenKind::RParen, "')'");
        return inner;
      }
      return predicate();
    }();
    --nesting_;
    return result;
  }

  Condition predicate() {
    const Token& attr = expect(TokenKind::Identifier, "a condition");
    expect(TokenKind::Equals, "'='");
    const Token& label = expect(TokenKind::QuotedString, "quoted label");
    if (label.text.empty()) throw ParseError(label.position, "nonempty label", "\"\"");
    return Condition::predicate(attr.text, label.text);
  }

  bool at_end() const { return pos_ >= tokens_.size(); }

  std::size_t position() const { return at_end() ? end_ : tokens_[pos_].position; }

  bool accept(TokenKind kind) {
    if (!at_end() && tokens_[pos_].kind == kind) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (at_end() || tokens_[pos_].kind != kind) fail(what);
    return tokens_[pos_++];
  }

  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = "end of query";
    if (!at_end()) {
      const Token& t = tokens_[pos_];
      found = std::string(to_string(t.kind));
      if (t.kind == TokenKind::Identifier) found += " '" + t.text + "'";
      if (t.kind == TokenKind::QuotedString) found += " \"" + t.text + "\"";
    }
    throw ParseError(position(), expected, found);
  }

  std::span<const Token> tokens_;
  std::size_t end_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
};

}  // namespace

QueryAst parse(std::span<const Token> tokens, std::size_t end_position) {
  return Parser(tokens, end_position).query();
}

QueryAst parse(std::span<const Token> tokens) {
  std::size_t end = 0;
  if (!tokens.empty()) {
    const Token& last = tokens.back();
    // Quoted strings lose their quotes (and escapes) in `text`; +2 is close
    // enough for an end-of-input marker.
    end = last.position + last.text.size() + (last.kind == TokenKind::QuotedString ? 2 : 0);
  }
  return parse(tokens, end);
}

QueryAst parse_query(std::string_view source) {
  const auto tokens = tokenize(source);
  return parse(tokens, source.size());
}

}  // namespace donormatch::query
