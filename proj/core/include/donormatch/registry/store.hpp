#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "donormatch/registry/donor_record.hpp"

namespace donormatch::registry {

/// An immutable set of donor records keyed by unique id, kept sorted by id.
class Registry {
 public:
  Registry() = default;
  /// Throws DuplicateId (rows are 1-based positions in `records`) or
  /// ValidationError.
  explicit Registry(std::vector<DonorRecord> records);

  const std::vector<DonorRecord>& records() const noexcept { return records_; }
  std::size_t size() const noexcept { return records_.size(); }
  bool empty() const noexcept { return records_.empty(); }
  const DonorRecord* find(std::string_view id) const;

  /// New registry with `incoming` added. Throws DuplicateId if an id is
  /// already present.
  Registry merged(std::vector<DonorRecord> incoming) const;

  friend bool operator==(const Registry&, const Registry&) = default;

 private:
  std::vector<DonorRecord> records_;
};

inline constexpr std::string_view kStoreHeader = "# donormatch store v1";

/// Newline-delimited JSON, one record per line in id order, preceded by a
/// `#` header comment.
std::string store_to_text(const Registry& registry);
/// Skips blank and `#` lines. Throws FormatError{line} on a malformed or
/// invalid record or a repeated id.
Registry store_from_text(std::string_view text);

void save_store(const std::filesystem::path& path, const Registry& registry);
Registry load_store(const std::filesystem::path& path);

}  // namespace donormatch::registry
