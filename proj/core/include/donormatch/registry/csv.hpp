#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "donormatch/registry/donor_record.hpp"

namespace donormatch::registry {

/// Columns every registry CSV must carry (in any order).
inline constexpr std::string_view kCsvColumns[] = {
    "id", "name", "blood_type", "age", "weight_kg", "distance_m", "days_since_donation", "phone",
};

/// Splits RFC 4180-style text into records of fields. Quoted fields may hold
/// commas, doubled quotes and newlines. Blank lines are dropped.
/// Throws CsvError on an unterminated quote.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Validates every row and returns all records, or throws CsvError listing
/// every bad field, or DuplicateId. An empty `days_since_donation` means the
/// donor has never donated.
std::vector<DonorRecord> ingest_csv_text(std::string_view text);
/// As above; throws IoError if the file cannot be read.
std::vector<DonorRecord> ingest_csv(const std::filesystem::path& path);

struct LabeledDonor {
  DonorRecord record;
  bool eligible;

  friend bool operator==(const LabeledDonor&, const LabeledDonor&) = default;
};

/// Registry CSV plus a `label` column (eligible/ineligible, 1/0, yes/no,
/// true/false).
std::vector<LabeledDonor> ingest_labeled_csv_text(std::string_view text);
std::vector<LabeledDonor> ingest_labeled_csv(const std::filesystem::path& path);

std::string to_csv(std::span<const DonorRecord> records);
std::string to_csv(std::span<const LabeledDonor> donors);

}  // namespace donormatch::registry
