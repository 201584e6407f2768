#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ghsimplex/gh_solver.hpp"

namespace ghsimplex {

/// Graph on the points of a finite space whose edges are the diametral
/// pairs. A block avoiding every edge has diameter strictly below diam X.
struct DiameterGraph {
  int n = 0;
  std::vector<IndexPair> edges;  // each pair stored with i < j, sorted
};

/// Edges are the pairs with distance >= diam X - tol.
DiameterGraph diameter_graph(const ValidatedSpace& space, double tol = 0.0);

/// Proper coloring of the graph with at most m colors, or nullopt.
/// Deterministic: the returned coloring is the lexicographically smallest
/// proper one under the fixed vertex order.
std::optional<std::vector<int>> m_colorable(const DiameterGraph& graph, int m);

struct BorsukAnswer {
  bool answer = false;
  std::optional<Partition> witness;  // present iff answer
  double epsilon_margin = 0.0;       // diam X - max block diameter, > 0 when yes
  std::string certificate;           // obstruction description when no
};

/// Can the space be split into exactly m non-empty parts, each of diameter
/// strictly smaller than diam X? Decided by coloring the diameter graph;
/// color classes are padded to exactly m blocks by peeling singletons off
/// the largest class. A single-point space answers no.
BorsukAnswer borsuk_decision(const ValidatedSpace& space, int m);

/// The same question decided through the simplex distance: yes iff
/// 2 d_GH(lambda Delta_m, X) < diam X for any 0 < lambda < diam X.
bool borsuk_via_gh(const ValidatedSpace& space, int m, double lambda);

/// Whether X lies on both spheres of radius d/2 centered at the one-point
/// space and at lambda Delta_m: diam X = d and 2 d_GH(lambda Delta_m, X) = d.
/// Requires 0 < lambda < d; m may exceed the cardinality of X (the answer
/// is then no).
bool sphere_membership(const ValidatedSpace& space, double d, int m, double lambda);

}  // namespace ghsimplex
