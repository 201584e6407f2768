#pragma once

#include <cstdint>

namespace ghsimplex::cli {

struct SelfcheckReport {
  std::uint64_t seed = 0;
  int trials = 0;
  int n_max = 0;
  std::uint64_t instances = 0;
  std::uint64_t oracle_checks = 0;   // branch-and-bound vs brute force
  std::uint64_t theorem_checks = 0;  // coloring route vs simplex-distance route
  std::uint64_t mismatches = 0;
};

/// Runs the oracle-equivalence and theorem-equivalence suites on seeded
/// random instances. Single-threaded and deterministic in the seed.
SelfcheckReport run_selfcheck(std::uint64_t seed, int trials, int n_max);

}  // namespace ghsimplex::cli
