#include <string>

#include <nlohmann/json.hpp>

#include "../io_util.hpp"
#include "donormatch/error.hpp"
#include "donormatch/nn/model.hpp"

namespace donormatch::nn {

const char* to_string(Verdict v) noexcept {
  return v == Verdict::Eligible ? "Eligible" : "Ineligible";
}

Classification classify(const Network& net, const Normalizer& normalizer, double age,
                        double weight) {
  if (net.params.inputs() != 2 || net.params.outputs() != 2)
    throw ShapeMismatch("classification needs a network with 2 inputs and 2 outputs");
  const auto features = normalize(normalizer, age, weight);
  const auto act = forward(net, features);
  const double yes = act.outputs[0];
  const double no = act.outputs[1];
  return {yes >= no ? Verdict::Eligible : Verdict::Ineligible, yes, no};
}

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "donormatch-model";

json matrix(const Parameters& p, bool input_side) {
  json rows = json::array();
  const std::size_t n_rows = input_side ? p.inputs() : p.hidden();
  const std::size_t n_cols = input_side ? p.hidden() : p.outputs();
  for (std::size_t r = 0; r < n_rows; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < n_cols; ++c)
      row.push_back(input_side ? p.w_in_hidden(r, c) : p.w_hidden_out(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> read_matrix(const json& j, std::size_t rows, std::size_t cols,
                                             const char* name) {
  auto m = j.get<std::vector<std::vector<double>>>();
  bool ok = m.size() == rows;
  for (const auto& r : m) ok = ok && r.size() == cols;
  if (!ok)
    throw ShapeMismatch(std::string(name) + " must be " + std::to_string(rows) + "x" +
                        std::to_string(cols));
  return m;
}

std::vector<double> read_vector(const json& j, std::size_t n, const char* name) {
  auto v = j.get<std::vector<double>>();
  if (v.size() != n)
    throw ShapeMismatch(std::string(name) + " must have " + std::to_string(n) + " entries");
  return v;
}

}  // namespace

json model_to_json(const TrainedModel& m) {
  const auto& c = m.config;
  const auto& p = m.network.params;
  std::vector<double> b_hidden(p.hidden());
  std::vector<double> b_out(p.outputs());
  for (std::size_t j = 0; j < p.hidden(); ++j) b_hidden[j] = p.b_hidden(j);
  for (std::size_t k = 0; k < p.outputs(); ++k) b_out[k] = p.b_out(k);

  return {
      {"format", kFormatTag},
      {"version", kModelFormatVersion},
      {"config",
       {{"layer_sizes", c.layer_sizes},
        {"learning_rate", c.learning_rate},
        {"momentum", c.momentum},
        {"max_epochs", c.max_epochs},
        {"error_epsilon", c.error_epsilon},
        {"folds", c.folds},
        {"rng_seed", c.rng_seed}}},
      {"normalizer", {{"min", m.normalizer.min}, {"max", m.normalizer.max}}},
      {"weights", {{"input_hidden", matrix(p, true)}, {"hidden_output", matrix(p, false)}}},
      {"biases", {{"hidden", b_hidden}, {"output", b_out}}},
  };
}

TrainedModel model_from_json(const json& doc) {
  try {
    if (!doc.is_object() || doc.value("format", "") != kFormatTag)
      throw FormatError(1, "not a donormatch model document");
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) throw VersionMismatch(version, kModelFormatVersion);

    TrainedModel m;
    const auto& c = doc.at("config");
    m.config.layer_sizes = c.at("layer_sizes").get<std::array<std::size_t, 3>>();
    m.config.learning_rate = c.at("learning_rate").get<double>();
    m.config.momentum = c.at("momentum").get<double>();
    m.config.max_epochs = c.at("max_epochs").get<std::size_t>();
    m.config.error_epsilon = c.at("error_epsilon").get<double>();
    m.config.folds = c.at("folds").get<std::size_t>();
    m.config.rng_seed = c.at("rng_seed").get<std::uint64_t>();
    m.config.validate();

    const std::size_t ni = m.config.inputs();
    const std::size_t nh = m.config.hidden();
    const std::size_t no = m.config.outputs();

    m.normalizer.min = read_vector(doc.at("normalizer").at("min"), ni, "normalizer.min");
    m.normalizer.max = read_vector(doc.at("normalizer").at("max"), ni, "normalizer.max");
    for (std::size_t f = 0; f < ni; ++f)
      if (!(m.normalizer.min[f] < m.normalizer.max[f]))
        throw DegenerateFeature(f, m.normalizer.min[f]);

    const auto w_ih = read_matrix(doc.at("weights").at("input_hidden"), ni, nh,
                                  "weights.input_hidden");
    const auto w_ho = read_matrix(doc.at("weights").at("hidden_output"), nh, no,
                                  "weights.hidden_output");
    const auto b_h = read_vector(doc.at("biases").at("hidden"), nh, "biases.hidden");
    const auto b_o = read_vector(doc.at("biases").at("output"), no, "biases.output");

    m.network = make_network(ni, nh, no);
    auto& p = m.network.params;
    for (std::size_t i = 0; i < ni; ++i)
      for (std::size_t j = 0; j < nh; ++j) p.w_in_hidden(i, j) = w_ih[i][j];
    for (std::size_t j = 0; j < nh; ++j) {
      p.b_hidden(j) = b_h[j];
      for (std::size_t k = 0; k < no; ++k) p.w_hidden_out(j, k) = w_ho[j][k];
    }
    for (std::size_t k = 0; k < no; ++k) p.b_out(k) = b_o[k];
    return m;
  } catch (const json::exception& e) {
    throw FormatError(1, std::string("malformed model: ") + e.what());
  }
}

void save_model(const std::filesystem::path& path, const TrainedModel& model) {
  detail::write_file(path, model_to_json(model).dump(2) + "\n");
}

TrainedModel load_model(const std::filesystem::path& path) {
  return model_from_json(detail::parse_json(detail::read_file(path)));
}

}  // namespace donormatch::nn
