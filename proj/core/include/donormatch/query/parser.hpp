#pragma once

#include <span>
#include <string>
#include <string_view>

#include "donormatch/query/ast.hpp"
#include "donormatch/query/token.hpp"

namespace donormatch::query {

/// Maximum nesting of parentheses / NOT before the parser gives up.
inline constexpr std::size_t kMaxNesting = 256;

/// Recursive-descent parser for
///
///   query  := SELECT '*' FROM ident WHERE cond
///   cond   := term (OR term)*
///   term   := factor (AND factor)*
///   factor := NOT factor | '(' cond ')' | ident '=' quoted
///
/// AND binds tighter than OR and both associate left. `end_position` is used
/// as the error position when input runs out; it defaults to the end of the
/// last token. Throws ParseError.
QueryAst parse(std::span<const Token> tokens, std::size_t end_position);
QueryAst parse(std::span<const Token> tokens);

/// tokenize + parse.
QueryAst parse_query(std::string_view source);

/// Canonical text form. Predicates print as `(attr = "Label")` and
/// parentheses are added only where precedence or left-associativity would
/// otherwise change the tree, so parse(pretty_print(ast)) == ast.
std::string pretty_print(const QueryAst& ast);
std::string pretty_print(const Condition& condition);

}  // namespace donormatch::query
