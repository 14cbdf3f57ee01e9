#pragma once

#include <cstddef>
#include <exception>
#include <string>
#include <vector>

namespace donormatch {

/// Base of every error the library throws.
///
/// Errors can be annotated after the fact with the pipeline stage they
/// crossed (`parse`, `hard_filter`, `classify`, ...) and, where relevant, the
/// record being processed. Both annotations show up in what().
class Error : public std::exception {
 public:
  explicit Error(std::string message);

  const char* what() const noexcept override { return what_.c_str(); }

  const std::string& message() const noexcept { return message_; }
  const std::string& stage() const noexcept { return stage_; }
  const std::string& record_id() const noexcept { return record_id_; }

  void set_stage(std::string stage);
  void set_record_id(std::string id);

 private:
  void rebuild();

  std::string message_;
  std::string stage_;
  std::string record_id_;
  std::string what_;
};

/// Invalid arguments or invariant violations at construction time.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& detail);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& detail);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class VersionMismatch : public Error {
 public:
  VersionMismatch(int found, int expected);
  int found() const noexcept { return found_; }
  int expected() const noexcept { return expected_; }

 private:
  int found_;
  int expected_;
};

// --- query -----------------------------------------------------------------

/// Errors carrying a byte offset into the query text.
class PositionedError : public Error {
 public:
  PositionedError(std::size_t position, std::string message);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class LexError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

class ParseError : public PositionedError {
 public:
  ParseError(std::size_t position, std::string expected, std::string found);
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::string expected_;
  std::string found_;
};

class UnknownAttribute : public Error {
 public:
  explicit UnknownAttribute(std::string name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnknownLabel : public Error {
 public:
  UnknownLabel(std::string attribute, std::string label);
  const std::string& attribute() const noexcept { return attribute_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::string attribute_;
  std::string label_;
};

// --- neural ----------------------------------------------------------------

class EmptyDataset : public Error {
 public:
  EmptyDataset();
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateFeature : public Error {
 public:
  DegenerateFeature(std::size_t feature, double value);
  std::size_t feature() const noexcept { return feature_; }

 private:
  std::size_t feature_;
};

class TooFewSamples : public Error {
 public:
  TooFewSamples(std::size_t samples, std::size_t folds);
};

// --- registry --------------------------------------------------------------

struct CsvIssue {
  std::size_t row = 0;  // 1-based, the header is row 1
  std::string column;
  std::string message;
};

/// Every row-level problem found while ingesting a CSV file.
class CsvError : public Error {
 public:
  explicit CsvError(std::vector<CsvIssue> issues);
  const std::vector<CsvIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<CsvIssue> issues_;
};

class DuplicateId : public Error {
 public:
  DuplicateId(std::string id, std::vector<std::size_t> rows);
  const std::string& id() const noexcept { return id_; }
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }

 private:
  std::string id_;
  std::vector<std::size_t> rows_;
};

}  // namespace donormatch
