#pragma once

// Seeded random inputs for the property checks.

#include <cstdint>
#include <random>
#include <vector>

#include "coto/geometry.hpp"

namespace coto {

struct PrimeConfigurationParams {
  u64 c_max = 10000;
  std::size_t max_points = 200;
  std::size_t max_lines = 200;
  u64 coordinate_bound = 60;  // range for freshly sampled lowercase coordinates
};

/// A prime configuration with many incidences. Uniform coordinates almost
/// never meet the lines, so the generator grows the configuration from
/// existing vertices: given a point (A, a) it solves a b = -c (mod A) for b and
/// sets B = (a b + c) / A, and symmetrically for lines. Some pairs are also
/// drawn by fixing a, b and splitting a b + c into A B over its divisors.
/// Every coordinate is coprime to c.
Configuration random_prime_configuration(std::mt19937_64& rng, const PrimeConfigurationParams& params = {});

/// k values in [1, t] with k <= max_k and t <= max_t whose product fits in 64
/// bits. When a uniform draw would overflow, the draw is narrowed to the
/// remaining headroom.
struct FactorMultiset {
  std::vector<u64> values;
  u64 t = 1;
};
FactorMultiset random_factor_multiset(std::mt19937_64& rng, std::size_t max_k = 12, u64 max_t = 10000);

}  // namespace coto
