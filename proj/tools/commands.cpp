#include "commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "donormatch/error.hpp"
#include "donormatch/fuzzy/catalog.hpp"
#include "donormatch/nn/model.hpp"
#include "donormatch/pipeline/explain.hpp"
#include "donormatch/pipeline/model_training.hpp"
#include "donormatch/pipeline/ranking.hpp"
#include "donormatch/query/diagnostics.hpp"
#include "donormatch/registry/csv.hpp"
#include "donormatch/registry/store.hpp"
#include "donormatch/registry/synthetic.hpp"

namespace donormatch::cli {
namespace {

using nlohmann::json;

/// Runs `body`, mapping library errors to the documented exit codes.
template <class F>
int guarded(const char* command, const std::string& query_text, Io io, F&& body) {
  auto report = [&](const Error& e) {
    std::string stage = e.stage().empty() ? command : e.stage();
    io.err << "error[" << stage << "]: ";
    if (!e.record_id().empty()) io.err << "record '" << e.record_id() << "': ";
    io.err << e.message() << "\n";
    if (const auto* pe = dynamic_cast<const PositionedError*>(&e); pe && !query_text.empty())
      io.err << query::format_diagnostic(query_text, pe->position(), e.message()) << "\n";
  };
  try {
    return body();
  } catch (const IoError& e) {
    report(e);
    return kIoError;
  } catch (const Error& e) {
    report(e);
    return kValidationError;
  } catch (const std::exception& e) {
    io.err << "error[" << command << "]: " << e.what() << "\n";
    return kValidationError;
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ValidationError(std::string("missing required option ") + flag);
}

fuzzy::Catalog active_catalog(const CliConfig& cfg) {
  return cfg.catalog_path.empty() ? fuzzy::standard_catalog()
                                  : fuzzy::load_catalog(cfg.catalog_path);
}

void check_min_strength(double v) {
  if (!(v >= 0.0 && v < 1.0)) throw ValidationError("--min-strength must be in [0, 1)");
}

std::string fixed(double v, int decimals) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << v;
  return s.str();
}

json predicates_json(const std::vector<query::PredicateDegree>& degrees) {
  json out = json::array();
  for (const auto& d : degrees)
    out.push_back(
        {{"attribute", d.attribute}, {"label", d.label}, {"value", d.value}, {"degree", d.degree}});
  return out;
}

/// Column headers like "distance=Dekat" for a result set.
std::vector<std::string> predicate_headers(const std::vector<query::PredicateDegree>& degrees) {
  std::vector<std::string> headers;
  for (const auto& d : degrees) headers.push_back(d.attribute + "=" + d.label);
  return headers;
}

void print_table(std::ostream& out, const std::vector<std::string>& headers,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(headers.size());
  for (std::size_t c = 0; c < headers.size(); ++c) width[c] = headers[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) out << "  ";
      out << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << "\n";
  };
  line(headers);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

}  // namespace

int cmd_ingest(const CliConfig& cfg, const std::string& csv_path, Io io) {
  return guarded("ingest", "", io, [&] {
    require(cfg.store_path, "--store");
    auto incoming = registry::ingest_csv(csv_path);
    const std::size_t added = incoming.size();

    registry::Registry current;
    if (std::filesystem::exists(cfg.store_path)) current = registry::load_store(cfg.store_path);
    const auto next = current.merged(std::move(incoming));
    registry::save_store(cfg.store_path, next);

    if (cfg.format == OutputFormat::Json)
      io.out << json{{"ingested", added}, {"total", next.size()}}.dump() << "\n";
    else
      io.out << "ingested " << added << " record(s); store now holds " << next.size() << "\n";
    return kOk;
  });
}

int cmd_train(const CliConfig& cfg, const std::string& labeled_csv_path,
              const nn::NetworkConfig& net_config, Io io) {
  return guarded("train", "", io, [&] {
    require(cfg.model_path, "--model");
    const auto donors = registry::ingest_labeled_csv(labeled_csv_path);
    const auto outcome = pipeline::train_model(donors, net_config);
    nn::save_model(cfg.model_path, outcome.model);

    if (cfg.format == OutputFormat::Json) {
      io.out << json{{"fold_accuracies", outcome.cv.fold_accuracies},
                     {"mean_accuracy", outcome.cv.mean_accuracy},
                     {"final_epochs", outcome.final_fit.epochs_run},
                     {"final_mse", outcome.final_fit.final_mse},
                     {"model", cfg.model_path}}
                    .dump()
             << "\n";
      return kOk;
    }
    io.out << outcome.cv.fold_accuracies.size() << "-fold cross-validation on " << donors.size()
           << " samples\n";
    for (std::size_t f = 0; f < outcome.cv.fold_accuracies.size(); ++f)
      io.out << "  fold " << std::setw(2) << f + 1 << "  accuracy "
             << fixed(outcome.cv.fold_accuracies[f], 4) << "\n";
    io.out << "  mean     accuracy " << fixed(outcome.cv.mean_accuracy, 4) << "\n";
    io.out << "final model: " << outcome.final_fit.epochs_run << " epoch(s), mse "
           << fixed(outcome.final_fit.final_mse, 6) << "\n";
    io.out << "saved " << cfg.model_path << "\n";
    return kOk;
  });
}

int cmd_classify(const CliConfig& cfg, double age, double weight, Io io) {
  return guarded("classify", "", io, [&] {
    require(cfg.model_path, "--model");
    const auto model = nn::load_model(cfg.model_path);
    const auto c = nn::classify(model, age, weight);
    if (cfg.format == OutputFormat::Json) {
      io.out << json{{"verdict", nn::to_string(c.verdict)},
                     {"confidence_eligible", c.confidence_eligible},
                     {"confidence_ineligible", c.confidence_ineligible}}
                    .dump()
             << "\n";
    } else {
      io.out << nn::to_string(c.verdict) << "  (eligible " << fixed(c.confidence_eligible, 4)
             << ", ineligible " << fixed(c.confidence_ineligible, 4) << ")\n";
    }
    return kOk;
  });
}

int cmd_query(const CliConfig& cfg, const std::string& query_text, Io io) {
  return guarded("query", query_text, io, [&] {
    require(cfg.store_path, "--store");
    check_min_strength(cfg.min_strength);
    const auto catalog = active_catalog(cfg);
    const auto store = registry::load_store(cfg.store_path);
    pipeline::RankOptions options;
    options.min_strength = cfg.min_strength;
    const auto rows = pipeline::query_donors(query_text, store.records(), catalog, options);

    if (cfg.format == OutputFormat::Json) {
      json out = json::array();
      for (const auto& r : rows) {
        const auto* rec = store.find(r.record_id);
        out.push_back({{"id", r.record_id},
                       {"name", rec ? rec->name : ""},
                       {"fire_strength", r.fire_strength},
                       {"predicates", predicates_json(r.per_predicate)},
                       {"trace", r.trace}});
      }
      io.out << out.dump(2) << "\n";
      return kOk;
    }

    std::vector<std::string> headers{"#", "id", "name"};
    if (!rows.empty())
      for (auto& h : predicate_headers(rows.front().per_predicate)) headers.push_back(h);
    headers.push_back("priority");
    std::vector<std::vector<std::string>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto* rec = store.find(rows[i].record_id);
      std::vector<std::string> cells{std::to_string(i + 1), rows[i].record_id,
                                     rec ? rec->name : ""};
      for (const auto& d : rows[i].per_predicate) cells.push_back(query::format_degree(d.degree));
      cells.push_back(query::format_degree(rows[i].fire_strength));
      table.push_back(std::move(cells));
    }
    print_table(io.out, headers, table);
    return kOk;
  });
}

int cmd_rank(const CliConfig& cfg, const std::string& query_text, const RankFlags& flags,
             Io io) {
  return guarded("rank", query_text, io, [&] {
    require(cfg.store_path, "--store");
    require(cfg.model_path, "--model");
    check_min_strength(cfg.min_strength);
    const auto catalog = active_catalog(cfg);
    const auto store = registry::load_store(cfg.store_path);
    const auto model = nn::load_model(cfg.model_path);

    pipeline::RankOptions options;
    options.min_strength = cfg.min_strength;
    options.never_donated_days = flags.never_donated_days;
    if (flags.blood_type) {
      options.blood_type = registry::BloodType::parse(*flags.blood_type);
      if (!options.blood_type)
        throw ValidationError("invalid --blood-type '" + *flags.blood_type + "'");
    }
    const auto ranked =
        pipeline::rank_donors(query_text, store.records(), model, catalog, {}, options);

    if (cfg.format == OutputFormat::Json) {
      json out = json::array();
      for (const auto& r : ranked) {
        json row = pipeline::to_json(pipeline::explain(r));
        row["blood_type"] = r.record.blood_type.to_string();
        out.push_back(std::move(row));
      }
      io.out << out.dump(2) << "\n";
      return kOk;
    }

    if (flags.explain) {
      for (const auto& r : ranked) io.out << pipeline::format_explanation(pipeline::explain(r));
      return kOk;
    }
    std::vector<std::string> headers{"#", "id", "name", "blood"};
    if (!ranked.empty())
      for (auto& h : predicate_headers(ranked.front().degrees)) headers.push_back(h);
    headers.push_back("priority");
    headers.push_back("nn");
    std::vector<std::vector<std::string>> table;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      const auto& r = ranked[i];
      std::vector<std::string> cells{std::to_string(i + 1), r.record.id, r.record.name,
                                     r.record.blood_type.to_string()};
      for (const auto& d : r.degrees) cells.push_back(query::format_degree(d.degree));
      cells.push_back(query::format_degree(r.fire_strength));
      cells.push_back(fixed(r.nn_confidence(), 4));
      table.push_back(std::move(cells));
    }
    print_table(io.out, headers, table);
    return kOk;
  });
}

int cmd_gen_synthetic(const CliConfig& cfg, std::size_t count, double noise,
                      const std::string& output_path, Io io) {
  return guarded("gen-synthetic", "", io, [&] {
    registry::SyntheticOptions options;
    options.count = count;
    options.seed = cfg.seed;
    options.noise = noise;
    const auto csv = registry::to_csv(registry::generate_synthetic(options));
    if (output_path.empty() || output_path == "-") {
      io.out << csv;
    } else {
      std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
      if (!file) throw IoError(output_path, "cannot open for writing");
      file << csv;
      if (!file.flush()) throw IoError(output_path, "write failed");
    }
    return kOk;
  });
}

int cmd_catalog(const CliConfig& cfg, Io io) {
  return guarded("catalog", "", io, [&] {
    io.out << fuzzy::catalog_to_json(active_catalog(cfg)).dump(2) << "\n";
    return kOk;
  });
}

}  // namespace donormatch::cli
