#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

namespace donormatch::detail {

/// Throws IoError.
std::string read_file(const std::filesystem::path& path);
/// Writes via a sibling temp file and rename. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& contents);

/// Throws FormatError with the 1-based line of the syntax error.
nlohmann::json parse_json(const std::string& text, std::size_t first_line = 1);

}  // namespace donormatch::detail
