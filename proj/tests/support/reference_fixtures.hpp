#pragma once

#include <string>
#include <vector>

#include "donormatch/nn/model.hpp"
#include "donormatch/registry/donor_record.hpp"

namespace fixtures {

/// Weights and biases of the reference 2-3-2 network.
inline donormatch::nn::Network reference_network() {
  auto net = donormatch::nn::make_network(2, 3, 2);
  auto& p = net.params;
  const double w_ih[2][3] = {{2.646, 2.530, 1.785}, {2.581, 2.462, 1.676}};
  const double b_h[3] = {-2.557, -2.436, -1.608};
  const double w_ho[3][2] = {{3.360, -3.327}, {3.093, -3.066}, {1.580, -1.658}};
  const double b_o[2] = {-3.690, 3.7};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) p.w_in_hidden(i, j) = w_ih[i][j];
  for (int j = 0; j < 3; ++j) {
    p.b_hidden(j) = b_h[j];
    for (int k = 0; k < 2; ++k) p.w_hidden_out(j, k) = w_ho[j][k];
  }
  for (int k = 0; k < 2; ++k) p.b_out(k) = b_o[k];
  return net;
}

/// Same network with the normalizer shipped in fixtures/reference_model.json.
inline donormatch::nn::TrainedModel reference_model() {
  return {{}, {{0.0, 30.0}, {46.0, 70.0}}, reference_network()};
}

inline std::vector<donormatch::registry::DonorRecord> reference_donors() {
  using donormatch::registry::AboGroup;
  using donormatch::registry::RhFactor;
  return {
      {"p1", "Erikson", {AboGroup::A, RhFactor::Positive}, 38, 70, 1302, 270, "081100000001"},
      {"p2", "Deddy dinpansyah", {AboGroup::B, RhFactor::Positive}, 42, 65, 4835, 158,
       "081100000002"},
      {"p3", "Yetti Sukmawati", {AboGroup::O, RhFactor::Positive}, 37, 58, 8109, 320,
       "081100000003"},
  };
}

inline const std::string kReferenceQuery =
    R"(Select * From data_pendonor Where (Jarak = "Dekat") And (Usia = "Baya") And (waktu_donor = "Lama"))";

}  // namespace fixtures
