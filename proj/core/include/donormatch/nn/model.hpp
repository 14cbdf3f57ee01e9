#pragma once

#include <filesystem>

#include <nlohmann/json_fwd.hpp>

#include "donormatch/nn/network.hpp"
#include "donormatch/nn/normalizer.hpp"

namespace donormatch::nn {

/// A network together with the scaling and hyperparameters it was trained
/// with: everything needed to classify raw (age, weight) pairs.
struct TrainedModel {
  NetworkConfig config;
  Normalizer normalizer;
  Network network;

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;
};

enum class Verdict { Eligible, Ineligible };

const char* to_string(Verdict v) noexcept;

struct Classification {
  Verdict verdict;
  double confidence_eligible;
  double confidence_ineligible;
};

/// Forward pass on normalized features; Eligible when the eligible output is
/// at least the ineligible one. Throws ShapeMismatch unless the network has
/// 2 inputs and 2 outputs.
Classification classify(const Network& net, const Normalizer& normalizer, double age,
                        double weight);
inline Classification classify(const TrainedModel& model, double age, double weight) {
  return classify(model.network, model.normalizer, age, weight);
}

inline constexpr int kModelFormatVersion = 1;

/// Versioned JSON document. Momentum memory is training state and is not
/// persisted; a loaded model starts with zero prev_deltas.
nlohmann::json model_to_json(const TrainedModel& model);
/// Throws FormatError, VersionMismatch or ShapeMismatch.
TrainedModel model_from_json(const nlohmann::json& doc);

/// Throws IoError.
void save_model(const std::filesystem::path& path, const TrainedModel& model);
/// Throws IoError, FormatError, VersionMismatch or ShapeMismatch.
TrainedModel load_model(const std::filesystem::path& path);

}  // namespace donormatch::nn
