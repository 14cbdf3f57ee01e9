#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace donormatch::query {

enum class TokenKind {
  Select,
  Star,
  From,
  Where,
  And,
  Or,
  Not,
  LParen,
  RParen,
  Equals,
  Identifier,
  QuotedString,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  TokenKind kind;
  std::string text;       // unquoted and unescaped for QuotedString
  std::size_t position;   // byte offset of the first character

  friend bool operator==(const Token&, const Token&) = default;
};

/// Splits query text into tokens. Keywords are case-insensitive; identifiers
/// are `[A-Za-z_][A-Za-z0-9_]*`; quoted strings use double quotes with `\"`
/// and `\\` escapes and may not hold raw control characters. Throws LexError
/// on an unterminated string or an illegal character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace donormatch::query
