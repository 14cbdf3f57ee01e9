#include "donormatch/query/diagnostics.hpp"

#include <algorithm>

namespace donormatch::query {

SourceLocation locate(std::string_view source, std::size_t position) noexcept {
  position = std::min(position, source.size());
  SourceLocation loc{1, 1};
  for (std::size_t i = 0; i < position; ++i) {
    if (source[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

std::string format_diagnostic(std::string_view source, std::size_t position,
                              std::string_view message) {
  const auto loc = locate(source, position);
  position = std::min(position, source.size());

  const std::size_t begin = position - (loc.column - 1);
  auto end = source.find('\n', begin);
  if (end == std::string_view::npos) end = source.size();

  std::string out = "line " + std::to_string(loc.line) + ", column " +
                    std::to_string(loc.column) + ": " + std::string(message) + "\n";
  out += "  ";
  out += source.substr(begin, end - begin);
  out += "\n  ";
  // Keep tabs so the caret lines up under tab-indented text.
  for (std::size_t i = begin; i < position; ++i) out.push_back(source[i] == '\t' ? '\t' : ' ');
  out += "^";
  return out;
}

}  // namespace donormatch::query
