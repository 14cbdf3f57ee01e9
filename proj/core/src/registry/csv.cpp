#include "donormatch/registry/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>

#include "../io_util.hpp"
#include "donormatch/error.hpp"

namespace donormatch::registry {

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t quote_row = 0;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    const bool blank = row.size() == 1 && row[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started) {
          in_quotes = true;
          field_started = true;
          quote_row = rows.size() + 1;
        } else {
          field.push_back(c);
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        end_row();
        break;
      case '\n':
        end_row();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) throw CsvError({{quote_row, "", "unterminated quoted field"}});
  if (field_started || !row.empty()) end_row();
  return rows;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  if constexpr (std::is_floating_point_v<T>)
    if (!std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<bool> parse_label(std::string_view s) {
  std::string v;
  for (char c : trim(s)) v.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (v == "eligible" || v == "1" || v == "yes" || v == "true") return true;
  if (v == "ineligible" || v == "0" || v == "no" || v == "false") return false;
  return std::nullopt;
}

struct Ingested {
  std::vector<LabeledDonor> donors;
  std::vector<std::size_t> rows;  // source row of each donor
};

Ingested ingest(std::string_view text, bool labeled) {
  const auto table = parse_csv(text);
  if (table.empty()) throw CsvError({{1, "", "missing header row"}});

  std::map<std::string, std::size_t, std::less<>> column;
  for (std::size_t c = 0; c < table[0].size(); ++c)
    column.emplace(std::string(trim(table[0][c])), c);

  std::vector<CsvIssue> issues;
  std::vector<std::string_view> required(std::begin(kCsvColumns), std::end(kCsvColumns));
  if (labeled) required.push_back("label");
  for (auto name : required)
    if (!column.contains(name)) issues.push_back({1, std::string(name), "missing column"});
  if (!issues.empty()) throw CsvError(std::move(issues));

  Ingested out;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& fields = table[r];
    const std::size_t row_no = r + 1;
    if (fields.size() != table[0].size()) {
      issues.push_back({row_no, "",
                        "expected " + std::to_string(table[0].size()) + " fields, found " +
                            std::to_string(fields.size())});
      continue;
    }
    auto cell = [&](std::string_view name) -> std::string_view {
      return fields[column.find(name)->second];
    };
    auto bad = [&](std::string_view name, std::string message) {
      issues.push_back({row_no, std::string(name), std::move(message)});
    };

    DonorRecord rec;
    rec.id = std::string(trim(cell("id")));
    if (rec.id.empty()) bad("id", "must be nonempty");
    rec.name = std::string(trim(cell("name")));
    rec.phone = std::string(trim(cell("phone")));

    if (auto bt = BloodType::parse(cell("blood_type")))
      rec.blood_type = *bt;
    else
      bad("blood_type", "expected one of A/B/AB/O followed by + or -, got '" +
                            std::string(cell("blood_type")) + "'");

    if (auto age = parse_number<int>(cell("age")); age && *age >= 0)
      rec.age = *age;
    else
      bad("age", "expected a non-negative integer, got '" + std::string(cell("age")) + "'");

    if (auto w = parse_number<double>(cell("weight_kg")); w && *w > 0.0)
      rec.weight_kg = *w;
    else
      bad("weight_kg", "expected a positive number, got '" + std::string(cell("weight_kg")) + "'");

    if (auto d = parse_number<double>(cell("distance_m")); d && *d >= 0.0)
      rec.distance_m = *d;
    else
      bad("distance_m",
          "expected a non-negative number, got '" + std::string(cell("distance_m")) + "'");

    const auto days_text = trim(cell("days_since_donation"));
    if (!days_text.empty()) {
      if (auto d = parse_number<int>(days_text); d && *d >= 0)
        rec.days_since_donation = *d;
      else
        bad("days_since_donation",
            "expected a non-negative integer or empty, got '" + std::string(days_text) + "'");
    }

    bool eligible = false;
    if (labeled) {
      if (auto l = parse_label(cell("label")))
        eligible = *l;
      else
        bad("label", "expected eligible/ineligible, got '" + std::string(cell("label")) + "'");
    }
    out.donors.push_back({std::move(rec), eligible});
    out.rows.push_back(row_no);
  }
  if (!issues.empty()) throw CsvError(std::move(issues));

  std::map<std::string, std::vector<std::size_t>, std::less<>> seen;
  for (std::size_t i = 0; i < out.donors.size(); ++i)
    seen[out.donors[i].record.id].push_back(out.rows[i]);
  for (auto& [id, rows] : seen)
    if (rows.size() > 1) throw DuplicateId(id, rows);
  return out;
}

std::string quote_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  // Prefer the shortest representation that still round-trips.
  for (int precision = 1; precision < 17; ++precision) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", precision, v);
    if (std::strtod(shorter, nullptr) == v) return shorter;
  }
  return buf;
}

std::string csv_line(const DonorRecord& r) {
  std::string line = quote_field(r.id) + "," + quote_field(r.name) + "," +
                     r.blood_type.to_string() + "," + std::to_string(r.age) + "," +
                     format_real(r.weight_kg) + "," + format_real(r.distance_m) + ",";
  if (r.days_since_donation) line += std::to_string(*r.days_since_donation);
  line += "," + quote_field(r.phone);
  return line;
}

std::string header() {
  std::string h;
  for (auto name : kCsvColumns) {
    if (!h.empty()) h += ",";
    h += name;
  }
  return h;
}

}  // namespace

std::vector<DonorRecord> ingest_csv_text(std::string_view text) {
  auto ingested = ingest(text, false);
  std::vector<DonorRecord> records;
  records.reserve(ingested.donors.size());
  for (auto& d : ingested.donors) records.push_back(std::move(d.record));
  return records;
}

std::vector<DonorRecord> ingest_csv(const std::filesystem::path& path) {
  return ingest_csv_text(detail::read_file(path));
}

std::vector<LabeledDonor> ingest_labeled_csv_text(std::string_view text) {
  return ingest(text, true).donors;
}

std::vector<LabeledDonor> ingest_labeled_csv(const std::filesystem::path& path) {
  return ingest_labeled_csv_text(detail::read_file(path));
}

std::string to_csv(std::span<const DonorRecord> records) {
  std::string out = header() + "\n";
  for (const auto& r : records) out += csv_line(r) + "\n";
  return out;
}

std::string to_csv(std::span<const LabeledDonor> donors) {
  std::string out = header() + ",label\n";
  for (const auto& d : donors)
    out += csv_line(d.record) + "," + (d.eligible ? "eligible" : "ineligible") + "\n";
  return out;
}

}  // namespace donormatch::registry
