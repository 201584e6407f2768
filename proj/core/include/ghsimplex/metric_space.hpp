#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "ghsimplex/errors.hpp"

namespace ghsimplex {

/// Unordered index pair {i, j} stored with i < j.
using IndexPair = std::pair<int, int>;

struct ValidationOptions {
  bool check_triangle = true;  // off admits semimetrics
  double tol = 0.0;            // comparison slack; 0 means exact
};

/// A finite metric space given by a validated symmetric distance matrix.
///
/// Construction goes through `validate`, which enforces zero diagonal,
/// symmetry, positivity off the diagonal and (by default) the triangle
/// inequality. The diameter and the set of diametral pairs are computed
/// once and cached; instances are immutable and safe to share across
/// threads.
class ValidatedSpace {
 public:
  /// Validates a raw square matrix and builds the space.
  /// Throws ValidationError naming the first violated invariant.
  static ValidatedSpace validate(const std::vector<std::vector<double>>& raw,
                                 ValidationOptions options = {});

  int size() const { return n_; }

  double distance(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Largest pairwise distance; 0 for a single-point space.
  double diam() const { return diam_; }

  /// Every unordered pair attaining the diameter (within the construction
  /// tolerance). Empty iff the space has a single point.
  const std::vector<IndexPair>& diametral_pairs() const { return diametral_pairs_; }

  /// Smallest off-diagonal distance; +inf for a single-point space.
  double min_positive_distance() const { return min_positive_; }

  double tolerance() const { return tol_; }

  bool triangle_checked() const { return triangle_checked_; }

 private:
  ValidatedSpace(std::vector<double> dist, int n, double tol, bool triangle_checked);

  friend ValidatedSpace scale_space(const ValidatedSpace&, double);

  int n_;
  std::vector<double> dist_;  // row-major n x n
  double diam_;
  double min_positive_;
  std::vector<IndexPair> diametral_pairs_;
  double tol_;
  bool triangle_checked_;
};

/// A distance value that may be +inf (the empty-infimum convention for the
/// separation of a one-block partition). `lambda - infinity` behaves as
/// -inf and never wins a max against a finite operand.
class ExtendedDistance {
 public:
  constexpr ExtendedDistance() : value_(0.0) {}
  constexpr explicit ExtendedDistance(double value) : value_(value) {}

  static constexpr ExtendedDistance infinity() {
    return ExtendedDistance(std::numeric_limits<double>::infinity());
  }

  constexpr bool is_infinite() const {
    return value_ == std::numeric_limits<double>::infinity();
  }

  /// Underlying value; +inf when infinite.
  constexpr double value() const { return value_; }

  friend constexpr bool operator==(ExtendedDistance a, ExtendedDistance b) {
    return a.value_ == b.value_;
  }
  friend constexpr auto operator<=>(ExtendedDistance a, ExtendedDistance b) {
    return a.value_ <=> b.value_;
  }

 private:
  double value_;
};

/// Hausdorff distance between two non-empty index subsets, evaluated as
/// max{ max_{a in A} min_{b in B} d(a,b), max_{b in B} min_{a in A} d(a,b) }.
double hausdorff_distance(const ValidatedSpace& space, std::span<const int> a,
                          std::span<const int> b);

enum class Norm { L1, L2, Linf };

/// Builds the space of pairwise norm distances of a point cloud.
ValidatedSpace space_from_points(const std::vector<std::vector<double>>& points, Norm norm,
                                 ValidationOptions options = {});

/// Multiplies every distance by c > 0. The diameter scales by exactly one
/// multiplication and the diametral pairs are carried over unchanged.
ValidatedSpace scale_space(const ValidatedSpace& space, double c);

}  // namespace ghsimplex
