#pragma once

#include <cstdint>

#include "isingevo/objective.hpp"
#include "isingevo/random.hpp"

namespace isingevo {

struct VariationParams {
  double mutation_std = 100.0;
  // Probability that a proposal is the normal step instead of the pairwise mix.
  double mix_probability = 0.5;

  void validate() const;
};

/// floor((a + b) / 2) in exact integer arithmetic.
std::int64_t average_mix(std::int64_t a, std::int64_t b) noexcept;

/// Rounds x + N(0, mutation_std) to the nearest integer (ties away from zero)
/// and clamps the result into [lo, hi - 1].
std::int64_t normal_step(std::int64_t x, const VariationParams& params, Rng& rng,
                         const ObjectiveSpec& domain);

/// One Uniform(0,1) draw picks the branch: below mix_probability gives
/// normal_step(site_value), otherwise average_mix(site_value, neighbor_value).
std::int64_t propose(std::int64_t site_value, std::int64_t neighbor_value,
                     const VariationParams& params, Rng& rng,
                     const ObjectiveSpec& domain);

}  // namespace isingevo
