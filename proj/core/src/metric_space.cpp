#include "ghsimplex/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ghsimplex {

namespace {

std::string pair_msg(const char* what, int i, int j) {
  return std::string(what) + " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

double norm_distance(std::span<const double> p, std::span<const double> q, Norm norm) {
  switch (norm) {
    case Norm::L1: {
      double s = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p[k] - q[k]);
      return s;
    }
    case Norm::L2: {
      double s = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) {
        const double d = p[k] - q[k];
        s += d * d;
      }
      return std::sqrt(s);
    }
    case Norm::Linf: {
      double s = 0.0;
      for (std::size_t k = 0; k < p.size(); ++k) s = std::max(s, std::abs(p[k] - q[k]));
      return s;
    }
  }
  return 0.0;
}

}  // namespace

ValidatedSpace::ValidatedSpace(std::vector<double> dist, int n, double tol, bool triangle_checked)
    : n_(n),
      dist_(std::move(dist)),
      diam_(0.0),
      min_positive_(std::numeric_limits<double>::infinity()),
      tol_(tol),
      triangle_checked_(triangle_checked) {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const double d = distance(i, j);
      diam_ = std::max(diam_, d);
      min_positive_ = std::min(min_positive_, d);
    }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (distance(i, j) >= diam_ - tol_) diametral_pairs_.emplace_back(i, j);
  if (n_ < 2) diametral_pairs_.clear();
}

ValidatedSpace ValidatedSpace::validate(const std::vector<std::vector<double>>& raw,
                                        ValidationOptions options) {
  const std::size_t n = raw.size();
  if (n == 0)
    throw ValidationError(ValidationError::Kind::NonSquare, "matrix must have at least one row");
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw ValidationError(ValidationError::Kind::NonSquare,
                            "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                                " entries, expected " + std::to_string(n),
                            static_cast<int>(i));

  const double tol = options.tol;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!std::isfinite(raw[i][j]))
        throw ValidationError(ValidationError::Kind::NonFinite,
                              pair_msg("non-finite entry", static_cast<int>(i), static_cast<int>(j)),
                              static_cast<int>(i), static_cast<int>(j));

  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(raw[i][i]) > tol)
      throw ValidationError(ValidationError::Kind::NonzeroDiagonal,
                            "diagonal entry (" + std::to_string(i) + ", " + std::to_string(i) +
                                ") is " + std::to_string(raw[i][i]),
                            static_cast<int>(i));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(raw[i][j] - raw[j][i]) > tol)
        throw ValidationError(ValidationError::Kind::AsymmetricEntry,
                              pair_msg("asymmetric entry", static_cast<int>(i), static_cast<int>(j)),
                              static_cast<int>(i), static_cast<int>(j));
      if (raw[i][j] < -tol)
        throw ValidationError(ValidationError::Kind::NegativeEntry,
                              pair_msg("negative distance", static_cast<int>(i), static_cast<int>(j)),
                              static_cast<int>(i), static_cast<int>(j));
      if (raw[i][j] <= tol)
        throw ValidationError(ValidationError::Kind::ZeroOffDiagonal,
                              pair_msg("zero distance between distinct points", static_cast<int>(i),
                                       static_cast<int>(j)),
                              static_cast<int>(i), static_cast<int>(j));
    }

  if (options.check_triangle) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i || j == k) continue;
          if (raw[i][k] > raw[i][j] + raw[j][k] + tol)
            throw ValidationError(
                ValidationError::Kind::TriangleViolation,
                "triangle inequality violated: d(" + std::to_string(i) + ", " + std::to_string(k) +
                    ") > d(" + std::to_string(i) + ", " + std::to_string(j) + ") + d(" +
                    std::to_string(j) + ", " + std::to_string(k) + ")",
                static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
        }
  }

  // Store exactly symmetric data with a zero diagonal; under tol > 0 the
  // upper triangle is the representative.
  std::vector<double> flat(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) flat[i * n + j] = flat[j * n + i] = raw[i][j];
  return ValidatedSpace(std::move(flat), static_cast<int>(n), tol, options.check_triangle);
}

double hausdorff_distance(const ValidatedSpace& space, std::span<const int> a,
                          std::span<const int> b) {
  if (a.empty() || b.empty()) throw EmptySubset();
  for (int x : a)
    if (x < 0 || x >= space.size()) throw IndexOutOfRange(x, space.size());
  for (int x : b)
    if (x < 0 || x >= space.size()) throw IndexOutOfRange(x, space.size());

  const auto directed = [&space](std::span<const int> from, std::span<const int> to) {
    double worst = 0.0;
    for (int x : from) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int y : to) nearest = std::min(nearest, space.distance(x, y));
      worst = std::max(worst, nearest);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

ValidatedSpace space_from_points(const std::vector<std::vector<double>>& points, Norm norm,
                                 ValidationOptions options) {
  if (points.empty()) throw EmptyPointSet();
  const std::size_t dim = points[0].size();
  if (dim == 0) throw DimensionMismatch(1, 0);
  for (const auto& p : points)
    if (p.size() != dim) throw DimensionMismatch(dim, p.size());

  const std::size_t n = points.size();
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] = norm_distance(points[i], points[j], norm);
  return ValidatedSpace::validate(dist, options);
}

ValidatedSpace scale_space(const ValidatedSpace& space, double c) {
  if (!(c > 0.0)) throw NonpositiveScale(c);
  const int n = space.size();
  std::vector<double> scaled(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scaled[static_cast<std::size_t>(i) * n + j] = c * space.distance(i, j);

  // Symmetry, positivity and the triangle inequality survive a positive
  // rescale, so the validated invariants are rebuilt directly.
  ValidatedSpace result(std::move(scaled), n, space.tolerance(), space.triangle_checked());
  result.diam_ = c * space.diam();
  result.diametral_pairs_ = space.diametral_pairs();
  return result;
}

}  // namespace ghsimplex
