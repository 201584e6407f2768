#include "cli/random_spaces.hpp"

#include <algorithm>

namespace ghsimplex::cli {

ValidatedSpace random_unit_square_space(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  for (;;) {
    std::vector<std::vector<double>> points(static_cast<std::size_t>(n));
    for (auto& p : points) p = {coord(rng), coord(rng)};
    try {
      return space_from_points(points, Norm::L2);
    } catch (const ValidationError&) {
      // duplicate point or a rounding-level triangle violation: resample
    }
  }
}

ValidatedSpace random_ultrametric_space(std::mt19937_64& rng, int n) {
  if (n == 1) return ValidatedSpace::validate({{0.0}});

  // Random dendrogram: merge two clusters at strictly increasing heights;
  // the distance of two points is the height of the merge joining them.
  std::vector<std::vector<int>> clusters(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) clusters[static_cast<std::size_t>(i)] = {i};
  std::vector<std::vector<double>> dist(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::uniform_real_distribution<double> step(0.1, 1.0);
  double height = 0.0;
  while (clusters.size() > 1) {
    height += step(rng);
    std::uniform_int_distribution<std::size_t> pick(0, clusters.size() - 1);
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    while (b == a) b = pick(rng);
    if (a > b) std::swap(a, b);
    for (int x : clusters[a])
      for (int y : clusters[b])
        dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
            dist[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = height;
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  return ValidatedSpace::validate(dist);
}

std::vector<ValidatedSpace> seeded_instances(std::uint64_t seed, int count, int n_min, int n_max) {
  std::mt19937_64 rng(seed);
  std::vector<ValidatedSpace> out;
  out.reserve(static_cast<std::size_t>(count));
  const int span = std::max(1, n_max - n_min + 1);
  for (int t = 0; t < count; ++t) {
    const int n = n_min + t % span;
    out.push_back(t % 2 == 0 ? random_unit_square_space(rng, n)
                             : random_ultrametric_space(rng, n));
  }
  return out;
}

}  // namespace ghsimplex::cli
