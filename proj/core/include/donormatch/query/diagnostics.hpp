#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace donormatch::query {

struct SourceLocation {
  std::size_t line;    // 1-based
  std::size_t column;  // 1-based, in bytes
};

SourceLocation locate(std::string_view source, std::size_t position) noexcept;

/// "line L, column C: message" followed by the offending source line and a
/// caret under the position.
std::string format_diagnostic(std::string_view source, std::size_t position,
                              std::string_view message);

}  // namespace donormatch::query
