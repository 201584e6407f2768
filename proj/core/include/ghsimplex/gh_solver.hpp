#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ghsimplex/partition.hpp"

namespace ghsimplex {

/// The target simplex: m points whose non-zero distances all equal lambda.
struct SimplexSpec {
  int m = 1;
  double lambda = 1.0;
};

enum class Regime {
  Point,      // m = 1: distance to the single-point space
  LargeM,     // m > n: closed form max{lambda, diam X - lambda}
  Partition,  // m <= n: minimum of the partition objective
};

enum class Strategy { Auto, Brute, Bnb, Greedy };

/// All values carry 2 * d_GH; halve only at presentation.
struct GHResult {
  double twice_distance = 0.0;
  std::optional<Partition> witness;  // present iff regime == Partition
  Regime regime = Regime::Partition;
  bool optimal = true;
  std::uint64_t nodes_explored = 0;

  double distance() const { return twice_distance / 2.0; }
};

struct SolveOptions {
  Strategy strategy = Strategy::Auto;
  // 0 picks the per-strategy default: brute force refuses scans larger
  // than 10^6 partitions; branch-and-bound is unlimited.
  std::uint64_t budget = 0;
  // 0 resolves from GHSIMPLEX_THREADS, then hardware concurrency.
  int threads = 0;
};

inline constexpr std::uint64_t kDefaultBruteBudget = 1'000'000;

/// 2 d_GH(Delta_1, X) = diam X, halved: the distance to the one-point space.
double gh_to_point(const ValidatedSpace& space);

/// 2 d_GH(lambda Delta_m, X). Dispatches on the regime: m = 1 returns
/// diam X, m > n the closed form max{lambda, diam X - lambda}, and m <= n
/// the minimum over partitions into m blocks of
/// max{diam D, lambda - alpha(D), diam X - lambda}.
/// Exact strategies return the lexicographically smallest optimal witness.
GHResult gh_to_simplex(const ValidatedSpace& space, SimplexSpec spec,
                       const SolveOptions& options = {});

/// Exhaustive scan of all partitions of n points into m blocks. Throws
/// BudgetExceeded when S(n, m) > budget.
GHResult brute_force_min(const ValidatedSpace& space, int m, double lambda,
                         std::uint64_t budget = kDefaultBruteBudget);

/// Exact search over partial assignments in index order, with canonical
/// symmetry breaking (a point may open block k only after blocks 0..k-1).
/// Matches brute_force_min in value and witness. A node budget of 0 means
/// unlimited; when the budget is hit the best incumbent is returned with
/// optimal = false.
GHResult branch_and_bound(const ValidatedSpace& space, int m, double lambda,
                          std::uint64_t node_budget = 0, int threads = 1);

/// Deterministic heuristic: m farthest-first seeds from index 0, remaining
/// points joined greedily in index order, ties to the smallest block label.
/// The value is an upper bound on the exact minimum.
std::pair<double, Partition> greedy_upper_bound(const ValidatedSpace& space, int m,
                                                double lambda);

/// Ascending deduplicated set {0} u {distances} u {lambda - d >= 0}
/// u {diam X - lambda if >= 0}; the exact partition-regime minimum always
/// lies in this set.
std::vector<double> candidate_values(const ValidatedSpace& space, double lambda);

/// Effective thread count: explicit request, else GHSIMPLEX_THREADS, else
/// hardware concurrency.
int resolve_thread_count(int requested);

}  // namespace ghsimplex
