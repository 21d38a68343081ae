#include "isingevo/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isingevo {

void VariationParams::validate() const {
  if (!(mutation_std > 0.0) || !std::isfinite(mutation_std)) {
    throw std::invalid_argument("mutation_std must be a positive finite number");
  }
  if (!(mix_probability >= 0.0 && mix_probability <= 1.0)) {
    throw std::invalid_argument("mix_probability must lie in [0, 1]");
  }
}

std::int64_t average_mix(std::int64_t a, std::int64_t b) noexcept {
  // Floor division that stays exact for negative sums too.
  const std::int64_t sum = a + b;
  return sum >= 0 ? sum / 2 : -((-sum + 1) / 2);
}

std::int64_t normal_step(std::int64_t x, const VariationParams& params, Rng& rng,
                         const ObjectiveSpec& domain) {
  std::normal_distribution<double> dist(static_cast<double>(x), params.mutation_std);
  const double draw = std::round(dist(rng));
  const double lo = static_cast<double>(domain.lo);
  const double hi = static_cast<double>(domain.hi - 1);
  return static_cast<std::int64_t>(std::clamp(draw, lo, hi));
}

std::int64_t propose(std::int64_t site_value, std::int64_t neighbor_value,
                     const VariationParams& params, Rng& rng,
                     const ObjectiveSpec& domain) {
  if (uniform01(rng) < params.mix_probability) {
    return normal_step(site_value, params, rng, domain);
  }
  return average_mix(site_value, neighbor_value);
}

}  // namespace isingevo
