#include "donormatch/error.hpp"

#include <utility>

namespace donormatch {

Error::Error(std::string message) : message_(std::move(message)) { rebuild(); }

void Error::set_stage(std::string stage) {
  stage_ = std::move(stage);
  rebuild();
}

void Error::set_record_id(std::string id) {
  record_id_ = std::move(id);
  rebuild();
}

void Error::rebuild() {
  what_.clear();
  if (!stage_.empty()) what_ += "[" + stage_ + "] ";
  if (!record_id_.empty()) what_ += "record '" + record_id_ + "': ";
  what_ += message_;
}

IoError::IoError(std::string path, const std::string& detail)
    : Error(path + ": " + detail), path_(std::move(path)) {}

FormatError::FormatError(std::size_t line, const std::string& detail)
    : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

VersionMismatch::VersionMismatch(int found, int expected)
    : Error("unsupported format version " + std::to_string(found) + " (expected " +
            std::to_string(expected) + ")"),
      found_(found),
      expected_(expected) {}

PositionedError::PositionedError(std::size_t position, std::string message)
    : Error(std::move(message)), position_(position) {}

ParseError::ParseError(std::size_t position, std::string expected, std::string found)
    : PositionedError(position, "expected " + expected + ", found " + found),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

UnknownAttribute::UnknownAttribute(std::string name)
    : Error("unknown attribute '" + name + "'"), name_(std::move(name)) {}

UnknownLabel::UnknownLabel(std::string attribute, std::string label)
    : Error("attribute '" + attribute + "' has no fuzzy set labelled '" + label + "'"),
      attribute_(std::move(attribute)),
      label_(std::move(label)) {}

EmptyDataset::EmptyDataset() : Error("training set is empty") {}

DegenerateFeature::DegenerateFeature(std::size_t feature, double value)
    : Error("feature " + std::to_string(feature) + " is constant (" + std::to_string(value) +
            "); cannot normalize"),
      feature_(feature) {}

TooFewSamples::TooFewSamples(std::size_t samples, std::size_t folds)
    : Error(std::to_string(samples) + " samples cannot be split into " + std::to_string(folds) +
            " folds") {}

namespace {

std::string describe(const std::vector<CsvIssue>& issues) {
  std::string out = std::to_string(issues.size()) + " invalid CSV field(s)";
  for (const auto& issue : issues) {
    out += "\n  row " + std::to_string(issue.row);
    if (!issue.column.empty()) out += ", column '" + issue.column + "'";
    out += ": " + issue.message;
  }
  return out;
}

std::string join_rows(const std::vector<std::size_t>& rows) {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(rows[i]);
  }
  return out;
}

}  // namespace

CsvError::CsvError(std::vector<CsvIssue> issues)
    : Error(describe(issues)), issues_(std::move(issues)) {}

DuplicateId::DuplicateId(std::string id, std::vector<std::size_t> rows)
    : Error("duplicate donor id '" + id + "' (rows " + join_rows(rows) + ")"),
      id_(std::move(id)),
      rows_(std::move(rows)) {}

}  // namespace donormatch
