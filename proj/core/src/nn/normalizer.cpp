#include "donormatch/nn/normalizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "donormatch/error.hpp"

namespace donormatch::nn {

std::vector<double> Normalizer::apply(std::span<const double> raw) const {
  if (raw.size() != min.size() || min.size() != max.size())
    throw ShapeMismatch("normalizer covers " + std::to_string(min.size()) + " features, got " +
                        std::to_string(raw.size()));
  std::vector<double> out(raw.size());
  for (std::size_t f = 0; f < raw.size(); ++f) {
    if (!(min[f] < max[f])) throw DegenerateFeature(f, min[f]);
    out[f] = std::clamp((raw[f] - min[f]) / (max[f] - min[f]), 0.0, 1.0);
  }
  return out;
}

Normalizer fit_normalizer(std::span<const std::array<double, 2>> raw) {
  if (raw.empty()) throw EmptyDataset();
  Normalizer n{{raw[0][0], raw[0][1]}, {raw[0][0], raw[0][1]}};
  for (const auto& row : raw) {
    for (std::size_t f = 0; f < 2; ++f) {
      if (!std::isfinite(row[f])) throw ValidationError("non-finite feature value");
      n.min[f] = std::min(n.min[f], row[f]);
      n.max[f] = std::max(n.max[f], row[f]);
    }
  }
  for (std::size_t f = 0; f < 2; ++f)
    if (!(n.min[f] < n.max[f])) throw DegenerateFeature(f, n.min[f]);
  return n;
}

std::array<double, 2> normalize(const Normalizer& normalizer, double age, double weight) {
  const std::array<double, 2> raw{age, weight};
  const auto v = normalizer.apply(raw);
  return {v[0], v[1]};
}

}  // namespace donormatch::nn
