#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "donormatch/nn/network.hpp"

namespace donormatch::cli {

enum class OutputFormat { Table, Json };

struct CliConfig {
  std::string store_path;
  std::string model_path;
  std::string catalog_path;  // empty: built-in catalog
  double min_strength = 0.0;
  OutputFormat format = OutputFormat::Table;
  std::uint64_t seed = 0;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 1;
inline constexpr int kIoError = 2;

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_ingest(const CliConfig& cfg, const std::string& csv_path, Io io);
int cmd_train(const CliConfig& cfg, const std::string& labeled_csv_path,
              const nn::NetworkConfig& net_config, Io io);
int cmd_classify(const CliConfig& cfg, double age, double weight, Io io);
int cmd_query(const CliConfig& cfg, const std::string& query_text, Io io);

struct RankFlags {
  std::optional<std::string> blood_type;
  int never_donated_days;
  bool explain = false;
};
int cmd_rank(const CliConfig& cfg, const std::string& query_text, const RankFlags& flags, Io io);

int cmd_gen_synthetic(const CliConfig& cfg, std::size_t count, double noise,
                      const std::string& output_path, Io io);
int cmd_catalog(const CliConfig& cfg, Io io);

}  // namespace donormatch::cli
