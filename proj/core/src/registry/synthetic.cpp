#include "donormatch/registry/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "donormatch/error.hpp"

namespace donormatch::registry {

std::vector<LabeledDonor> generate_synthetic(const SyntheticOptions& options) {
  if (!(options.noise >= 0.0 && options.noise <= 1.0))
    throw ValidationError("noise must be a probability in [0, 1]");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> age(10, 75);
  std::uniform_int_distribution<int> decigrams(300, 1200);  // weight in 0.1 kg
  std::uniform_int_distribution<int> distance(0, 15000);
  std::uniform_int_distribution<int> days(0, 400);
  std::uniform_int_distribution<int> blood(0, 7);
  std::uniform_int_distribution<long long> phone(0, 9'999'999'999LL);
  std::bernoulli_distribution never_donated(0.05);
  std::bernoulli_distribution flip(options.noise);

  std::vector<LabeledDonor> out;
  out.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    char id[32];
    std::snprintf(id, sizeof id, "s%06zu", i + 1);
    char name[32];
    std::snprintf(name, sizeof name, "Donor %zu", i + 1);

    DonorRecord r;
    r.id = id;
    r.name = name;
    const int bt = blood(rng);
    r.blood_type = {static_cast<AboGroup>(bt / 2),
                    bt % 2 == 0 ? RhFactor::Positive : RhFactor::Negative};
    r.age = age(rng);
    r.weight_kg = decigrams(rng) / 10.0;
    r.distance_m = distance(rng);
    const int d = days(rng);
    if (!never_donated(rng)) r.days_since_donation = d;
    char ph[24];
    std::snprintf(ph, sizeof ph, "08%010lld", phone(rng));
    r.phone = ph;

    bool eligible = !check(r, options.rule).has_value();
    if (flip(rng)) eligible = !eligible;
    out.push_back({std::move(r), eligible});
  }
  return out;
}

}  // namespace donormatch::registry
