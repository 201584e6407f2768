#pragma once

#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

#include "ghsimplex/metric_space.hpp"

namespace ghsimplex {

/// A partition of {0..n-1} into exactly m non-empty blocks, stored as a
/// restricted growth string: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
/// The encoding is canonical, so equality of partitions is equality of
/// strings and "lexicographically smallest" is well-defined.
class Partition {
 public:
  /// Builds from a restricted growth string; throws InvalidPartition if the
  /// string is not in canonical form.
  static Partition from_rgs(std::vector<int> rgs);

  /// Builds from block lists covering {0..n-1}; blocks may arrive in any
  /// order, the result is canonical.
  static Partition from_blocks(const std::vector<std::vector<int>>& blocks, int n);

  int size() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return m_; }
  const std::vector<int>& rgs() const { return rgs_; }
  int label(int i) const { return rgs_[static_cast<std::size_t>(i)]; }

  /// Blocks as index lists; block k is the k-th by smallest member.
  std::vector<std::vector<int>> blocks() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.rgs_ == b.rgs_; }
  /// Lexicographic order on the growth strings.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.rgs_ <=> b.rgs_;
  }

 private:
  Partition(std::vector<int> rgs, int m) : rgs_(std::move(rgs)), m_(m) {}
  friend class PartitionRange;

  std::vector<int> rgs_;
  int m_;
};

/// Lazily enumerates every partition of {0..n-1} into exactly m blocks, in
/// lexicographic order of the growth strings. The stream is never
/// materialized; the total count is the Stirling number S(n, m).
class PartitionRange {
 public:
  PartitionRange(int n, int m);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    Partition operator*() const { return Partition(rgs_, m_); }
    iterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class PartitionRange;
    iterator(int n, int m);

    void advance();

    int n_;
    int m_;
    bool done_;
    std::vector<int> rgs_;
    std::vector<int> prefix_max_;  // prefix_max_[i] = max(rgs_[0..i])
  };

  iterator begin() const { return iterator(n_, m_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
  int m_;
};

/// min(S(n, m), cap) computed with saturating arithmetic.
std::uint64_t stirling_second_clamped(int n, int m, std::uint64_t cap);

/// Largest block diameter of D; 0 when every block is a singleton.
double partition_diameter(const ValidatedSpace& space, const Partition& d);

/// Smallest distance between points in distinct blocks; +inf for the
/// one-block partition (empty infimum).
ExtendedDistance separation_alpha(const ValidatedSpace& space, const Partition& d);

/// max{diam D, lambda - alpha(D), diam X - lambda}; the middle term is
/// dropped when alpha is infinite. Always >= max{0, diam X - lambda}.
double objective(const ValidatedSpace& space, const Partition& d, double lambda);

}  // namespace ghsimplex
