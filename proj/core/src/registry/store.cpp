#include "donormatch/registry/store.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "../io_util.hpp"
#include "donormatch/error.hpp"

namespace donormatch::registry {

Registry::Registry(std::vector<DonorRecord> records) : records_(std::move(records)) {
  std::map<std::string, std::vector<std::size_t>, std::less<>> positions;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    validate(records_[i]);
    positions[records_[i].id].push_back(i + 1);
  }
  for (auto& [id, rows] : positions)
    if (rows.size() > 1) throw DuplicateId(id, rows);
  std::sort(records_.begin(), records_.end(),
            [](const DonorRecord& a, const DonorRecord& b) { return a.id < b.id; });
}

const DonorRecord* Registry::find(std::string_view id) const {
  auto it = std::lower_bound(records_.begin(), records_.end(), id,
                             [](const DonorRecord& r, std::string_view key) { return r.id < key; });
  return (it != records_.end() && it->id == id) ? &*it : nullptr;
}

Registry Registry::merged(std::vector<DonorRecord> incoming) const {
  for (const auto& r : incoming)
    if (find(r.id) != nullptr) throw DuplicateId(r.id, {});
  incoming.insert(incoming.end(), records_.begin(), records_.end());
  return Registry(std::move(incoming));
}

std::string store_to_text(const Registry& registry) {
  std::string out(kStoreHeader);
  out += "\n";
  for (const auto& r : registry.records()) out += to_json(r).dump() + "\n";
  return out;
}

Registry store_from_text(std::string_view text) {
  std::vector<DonorRecord> records;
  std::map<std::string, std::size_t, std::less<>> first_line;
  std::size_t line_no = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    DonorRecord rec;
    try {
      rec = record_from_json(detail::parse_json(std::string(line), line_no));
    } catch (const ValidationError& e) {
      throw FormatError(line_no, e.message());
    }
    if (auto [it, inserted] = first_line.emplace(rec.id, line_no); !inserted)
      throw FormatError(line_no, "duplicate id '" + rec.id + "' (first seen on line " +
                                     std::to_string(it->second) + ")");
    records.push_back(std::move(rec));
  }
  return Registry(std::move(records));
}

void save_store(const std::filesystem::path& path, const Registry& registry) {
  detail::write_file(path, store_to_text(registry));
}

Registry load_store(const std::filesystem::path& path) {
  return store_from_text(detail::read_file(path));
}

}  // namespace donormatch::registry
