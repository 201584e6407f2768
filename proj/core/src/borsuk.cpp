#include "ghsimplex/borsuk.hpp"

#include <algorithm>
#include <functional>

namespace ghsimplex {

namespace {

std::vector<std::vector<int>> adjacency(const DiameterGraph& graph) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(graph.n));
  for (const auto& [a, b] : graph.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  return adj;
}

// Greedy clique in the graph, grown over vertices in descending degree
// order. Its size lower-bounds the chromatic number.
std::vector<int> greedy_clique(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&adj](int a, int b) {
    return adj[static_cast<std::size_t>(a)].size() > adj[static_cast<std::size_t>(b)].size();
  });
  std::vector<int> clique;
  for (int v : order) {
    const auto& nv = adj[static_cast<std::size_t>(v)];
    const bool joined = std::all_of(clique.begin(), clique.end(), [&nv](int u) {
      return std::find(nv.begin(), nv.end(), u) != nv.end();
    });
    if (joined) clique.push_back(v);
  }
  return clique;
}

// Exact decision: is the graph properly colorable with at most m colors?
// Backtracking over vertices in saturation-degree order, opening a new
// color only when all smaller ones are in use.
bool colorable_decision(const std::vector<std::vector<int>>& adj, int m) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(m), 0);

  std::function<bool(int, int)> recurse = [&](int colored, int used) -> bool {
    if (colored == n) return true;
    // Most saturated uncolored vertex; ties to higher degree, then index.
    int pick = -1;
    int pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] != -1) continue;
      std::fill(seen.begin(), seen.end(), 0);
      int sat = 0;
      for (int u : adj[static_cast<std::size_t>(v)]) {
        const int cu = color[static_cast<std::size_t>(u)];
        if (cu >= 0 && !seen[static_cast<std::size_t>(cu)]) {
          seen[static_cast<std::size_t>(cu)] = 1;
          ++sat;
        }
      }
      if (sat > pick_sat ||
          (sat == pick_sat && adj[static_cast<std::size_t>(v)].size() >
                                  adj[static_cast<std::size_t>(pick)].size())) {
        pick = v;
        pick_sat = sat;
      }
    }
    const int cap = std::min(used, m - 1);
    for (int c = 0; c <= cap; ++c) {
      const bool clash = std::any_of(adj[static_cast<std::size_t>(pick)].begin(),
                                     adj[static_cast<std::size_t>(pick)].end(), [&](int u) {
                                       return color[static_cast<std::size_t>(u)] == c;
                                     });
      if (clash) continue;
      color[static_cast<std::size_t>(pick)] = c;
      if (recurse(colored + 1, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(pick)] = -1;
    }
    return false;
  };
  return recurse(0, 0);
}

// Lexicographically smallest proper coloring under the fixed vertex order.
// Only called once colorability is established, so the DFS always lands.
std::optional<std::vector<int>> lex_min_coloring(const std::vector<std::vector<int>>& adj, int m) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(int)> recurse = [&](int v) -> bool {
    if (v == n) return true;
    for (int c = 0; c < m; ++c) {
      const bool clash =
          std::any_of(adj[static_cast<std::size_t>(v)].begin(),
                      adj[static_cast<std::size_t>(v)].end(),
                      [&](int u) { return color[static_cast<std::size_t>(u)] == c; });
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (recurse(v + 1)) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!recurse(0)) return std::nullopt;
  return color;
}

}  // namespace

DiameterGraph diameter_graph(const ValidatedSpace& space, double tol) {
  DiameterGraph graph;
  graph.n = space.size();
  if (graph.n < 2) return graph;
  for (int i = 0; i < graph.n; ++i)
    for (int j = i + 1; j < graph.n; ++j)
      if (space.distance(i, j) >= space.diam() - tol) graph.edges.emplace_back(i, j);
  return graph;
}

std::optional<std::vector<int>> m_colorable(const DiameterGraph& graph, int m) {
  if (m < 1) throw BadBlockCount(m, graph.n);
  if (graph.n == 0) return std::vector<int>{};
  const auto adj = adjacency(graph);
  if (static_cast<int>(greedy_clique(adj).size()) > m) return std::nullopt;
  if (!colorable_decision(adj, m)) return std::nullopt;
  return lex_min_coloring(adj, m);
}

BorsukAnswer borsuk_decision(const ValidatedSpace& space, int m) {
  const int n = space.size();
  if (m < 1 || m > n) throw BadBlockCount(m, n);

  BorsukAnswer result;
  if (n == 1) {
    // The only partition is {X} itself, whose diameter equals diam X = 0.
    result.answer = false;
    result.certificate = "single-point space: the one-block partition has diameter diam X";
    return result;
  }

  DiameterGraph graph;
  graph.n = n;
  graph.edges = space.diametral_pairs();

  const auto coloring = m_colorable(graph, m);
  if (!coloring) {
    const auto clique = greedy_clique(adjacency(graph));
    result.answer = false;
    result.certificate = "diameter graph not " + std::to_string(m) + "-colorable";
    if (static_cast<int>(clique.size()) > m)
      result.certificate +=
          " (contains a clique on " + std::to_string(clique.size()) + " vertices)";
    return result;
  }

  int used = 1 + *std::max_element(coloring->begin(), coloring->end());
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(used));
  for (int i = 0; i < n; ++i)
    blocks[static_cast<std::size_t>((*coloring)[static_cast<std::size_t>(i)])].push_back(i);

  // Pad to exactly m blocks: peel the largest-index element off the largest
  // class (ties to the smallest class index). Block diameters never grow.
  while (static_cast<int>(blocks.size()) < m) {
    std::size_t largest = 0;
    for (std::size_t b = 1; b < blocks.size(); ++b)
      if (blocks[b].size() > blocks[largest].size()) largest = b;
    blocks.push_back({blocks[largest].back()});
    blocks[largest].pop_back();
  }

  Partition witness = Partition::from_blocks(blocks, n);
  const double worst_block = partition_diameter(space, witness);
  result.answer = true;
  result.witness = std::move(witness);
  result.epsilon_margin = space.diam() - worst_block;
  return result;
}

bool borsuk_via_gh(const ValidatedSpace& space, int m, double lambda) {
  const int n = space.size();
  if (m < 1 || m > n) throw BadBlockCount(m, n);
  if (!(lambda > 0.0) || !(lambda < space.diam())) throw LambdaOutOfRange(lambda, space.diam());
  const GHResult result = gh_to_simplex(space, SimplexSpec{m, lambda});
  return result.twice_distance < space.diam();
}

bool sphere_membership(const ValidatedSpace& space, double d, int m, double lambda) {
  if (!(d > 0.0)) throw NonpositiveD(d);
  if (!(lambda > 0.0) || !(lambda < d)) throw LambdaOutOfRange(lambda, d);
  if (m < 1) throw BadBlockCount(m, space.size());
  if (space.diam() != d) return false;
  const GHResult result = gh_to_simplex(space, SimplexSpec{m, lambda});
  return result.twice_distance == d;
}

}  // namespace ghsimplex
