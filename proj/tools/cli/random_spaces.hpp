#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ghsimplex/metric_space.hpp"

namespace ghsimplex::cli {

// Seeded instance generators used by selfcheck and the acceptance suite.
// Both always yield valid metric spaces: unit-square draws are resampled on
// the (measure-zero) validation failures, ultrametrics are valid by
// construction.

ValidatedSpace random_unit_square_space(std::mt19937_64& rng, int n);

ValidatedSpace random_ultrametric_space(std::mt19937_64& rng, int n);

/// `count` spaces with sizes cycling over [n_min, n_max], alternating the
/// two generators. Deterministic in the seed.
std::vector<ValidatedSpace> seeded_instances(std::uint64_t seed, int count, int n_min, int n_max);

}  // namespace ghsimplex::cli
