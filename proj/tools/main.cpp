#include <iostream>
#include <iterator>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "donormatch/registry/donor_record.hpp"

using namespace donormatch;

namespace {

std::string read_query(const std::string& arg, std::istream& in) {
  if (!arg.empty() && arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"donormatch - blood donor eligibility and fuzzy ranking"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::CliConfig cfg;
  std::string format = "table";
  app.add_option("--store", cfg.store_path, "Donor store (newline-delimited JSON)")
      ->envname("DONORMATCH_STORE");
  app.add_option("--model", cfg.model_path, "Model file (JSON)")->envname("DONORMATCH_MODEL");
  app.add_option("--catalog", cfg.catalog_path, "Fuzzy catalog JSON (default: built-in)")
      ->envname("DONORMATCH_CATALOG");
  app.add_option("--min-strength", cfg.min_strength,
                 "Alpha cut: keep rows whose fire strength exceeds this")
      ->envname("DONORMATCH_MIN_STRENGTH");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->envname("DONORMATCH_FORMAT");
  app.add_option("--seed", cfg.seed, "Random seed")->envname("DONORMATCH_SEED");

  std::string csv_path;
  auto* ingest = app.add_subcommand("ingest", "Validate a donor CSV and merge it into the store");
  ingest->add_option("csv", csv_path, "Registry CSV")->required();

  nn::NetworkConfig net;
  auto* train = app.add_subcommand("train", "Cross-validate, train and save the eligibility model");
  train->add_option("csv", csv_path, "Registry CSV with a label column")->required();
  train->add_option("--learning-rate", net.learning_rate, "Learning rate")->capture_default_str();
  train->add_option("--momentum", net.momentum, "Momentum")->capture_default_str();
  train->add_option("--epochs", net.max_epochs, "Maximum training epochs")->capture_default_str();
  train->add_option("--epsilon", net.error_epsilon, "Early-stop MSE threshold")
      ->capture_default_str();
  train->add_option("--folds", net.folds, "Cross-validation folds")->capture_default_str();
  train->add_option("--hidden", net.layer_sizes[1], "Hidden units")->capture_default_str();

  double age = 0;
  double weight = 0;
  auto* classify = app.add_subcommand("classify", "Classify one donor by age and weight");
  classify->add_option("age", age, "Age in years")->required();
  classify->add_option("weight", weight, "Body weight in kg")->required();

  std::string query_text;
  auto* query = app.add_subcommand("query", "Fuzzy-rank the whole store (no eligibility gate)");
  query->add_option("query", query_text, "Query text, or '-' / omitted to read stdin");

  cli::RankFlags rank_flags{std::nullopt, registry::kDefaultNeverDonatedDays, false};
  std::string blood_type;
  auto* rank = app.add_subcommand("rank", "Hard filter, neural gate, then fuzzy ranking");
  rank->add_option("query", query_text, "Query text, or '-' / omitted to read stdin");
  rank->add_option("--blood-type", blood_type, "Only donors of this blood type (e.g. O-)");
  rank->add_option("--never-donated-days", rank_flags.never_donated_days,
                   "Days assumed for donors who never donated")
      ->capture_default_str();
  rank->add_flag("--explain", rank_flags.explain, "Print the per-donor derivation");

  std::size_t count = 0;
  double noise = 0.0;
  std::string output;
  auto* gen = app.add_subcommand("gen-synthetic", "Write labeled synthetic donors as CSV");
  gen->add_option("n", count, "Number of donors")->required();
  gen->add_option("--noise", noise, "Label flip probability")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("DONORMATCH_NOISE");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* catalog = app.add_subcommand("catalog", "Print the active fuzzy catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return cli::kValidationError;
  }

  cfg.format = format == "json" ? cli::OutputFormat::Json : cli::OutputFormat::Table;
  net.rng_seed = cfg.seed;
  if (!blood_type.empty()) rank_flags.blood_type = blood_type;
  cli::Io io{std::cin, std::cout, std::cerr};

  if (*ingest) return cli::cmd_ingest(cfg, csv_path, io);
  if (*train) return cli::cmd_train(cfg, csv_path, net, io);
  if (*classify) return cli::cmd_classify(cfg, age, weight, io);
  if (*query) return cli::cmd_query(cfg, read_query(query_text, std::cin), io);
  if (*rank) return cli::cmd_rank(cfg, read_query(query_text, std::cin), rank_flags, io);
  if (*gen) return cli::cmd_gen_synthetic(cfg, count, noise, output, io);
  if (*catalog) return cli::cmd_catalog(cfg, io);
  return cli::kValidationError;
}
