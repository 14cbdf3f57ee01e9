#include <array>
#include <cctype>
#include <cstdio>
#include <utility>

#include "donormatch/error.hpp"
#include "donormatch/fuzzy/catalog.hpp"
#include "donormatch/query/token.hpp"

namespace donormatch::query {

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Select: return "SELECT";
    case TokenKind::Star: return "'*'";
    case TokenKind::From: return "FROM";
    case TokenKind::Where: return "WHERE";
    case TokenKind::And: return "AND";
    case TokenKind::Or: return "OR";
    case TokenKind::Not: return "NOT";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Equals: return "'='";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::QuotedString: return "quoted string";
  }
  return "token";
}

namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 6> kKeywords{{
    {"select", TokenKind::Select},
    {"from", TokenKind::From},
    {"where", TokenKind::Where},
    {"and", TokenKind::And},
    {"or", TokenKind::Or},
    {"not", TokenKind::Not},
}};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = source.size();

  while (i < n) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }

    const std::size_t start = i;
    switch (c) {
      case '*': tokens.push_back({TokenKind::Star, "*", start}); ++i; continue;
      case '(': tokens.push_back({TokenKind::LParen, "(", start}); ++i; continue;
      case ')': tokens.push_back({TokenKind::RParen, ")", start}); ++i; continue;
      case '=': tokens.push_back({TokenKind::Equals, "=", start}); ++i; continue;
      default: break;
    }

    if (c == '"') {
      std::string text;
      ++i;
      bool closed = false;
      while (i < n) {
        const char d = source[i];
        if (d == '"') {
          closed = true;
          ++i;
          break;
        }
        if (d == '\\') {
          if (i + 1 >= n) break;
          const char e = source[i + 1];
          if (e != '"' && e != '\\')
            throw LexError(i, "unsupported escape sequence '\\" + std::string(1, e) + "'");
          text.push_back(e);
          i += 2;
          continue;
        }
        const auto u = static_cast<unsigned char>(d);
        if (u < 0x20 || u == 0x7f) {
          char hex[8];
          std::snprintf(hex, sizeof hex, "\\x%02x", u);
          throw LexError(i, std::string("control character '") + hex + "' in quoted string");
        }
        text.push_back(d);
        ++i;
      }
      if (!closed) throw LexError(start, "unterminated quoted string");
      tokens.push_back({TokenKind::QuotedString, std::move(text), start});
      continue;
    }

    if (ident_start(c)) {
      while (i < n && ident_char(source[i])) ++i;
      std::string text(source.substr(start, i - start));
      TokenKind kind = TokenKind::Identifier;
      for (const auto& [word, k] : kKeywords) {
        if (fuzzy::iequals(text, word)) {
          kind = k;
          break;
        }
      }
      tokens.push_back({kind, std::move(text), start});
      continue;
    }

    const auto byte = static_cast<unsigned char>(c);
    std::string shown(1, c);
    if (!std::isprint(byte)) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\x%02x", byte);
      shown = buf;
    }
    throw LexError(start, "illegal character '" + shown + "'");
  }
  return tokens;
}

}  // namespace donormatch::query
