#include "ghsimplex/partition.hpp"

#include <algorithm>
#include <string>

namespace ghsimplex {

Partition Partition::from_rgs(std::vector<int> rgs) {
  if (rgs.empty()) throw InvalidPartition("growth string must be non-empty");
  if (rgs[0] != 0) throw InvalidPartition("growth string must start with 0");
  int max_label = 0;
  for (std::size_t i = 1; i < rgs.size(); ++i) {
    if (rgs[i] < 0 || rgs[i] > max_label + 1)
      throw InvalidPartition("entry " + std::to_string(rgs[i]) + " at position " +
                             std::to_string(i) + " breaks the growth condition");
    max_label = std::max(max_label, rgs[i]);
  }
  return Partition(std::move(rgs), max_label + 1);
}

Partition Partition::from_blocks(const std::vector<std::vector<int>>& blocks, int n) {
  if (n < 1) throw InvalidPartition("n must be positive");
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidPartition("blocks must be non-empty");
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) throw InvalidPartition("index " + std::to_string(x) + " out of range");
      if (owner[static_cast<std::size_t>(x)] != -1)
        throw InvalidPartition("index " + std::to_string(x) + " appears in two blocks");
      owner[static_cast<std::size_t>(x)] = static_cast<int>(b);
    }
  }
  for (int i = 0; i < n; ++i)
    if (owner[static_cast<std::size_t>(i)] == -1)
      throw InvalidPartition("index " + std::to_string(i) + " is not covered");

  // Relabel by first occurrence to reach the canonical growth string.
  std::vector<int> relabel(blocks.size(), -1);
  std::vector<int> rgs(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int& lab = relabel[static_cast<std::size_t>(owner[static_cast<std::size_t>(i)])];
    if (lab == -1) lab = next++;
    rgs[static_cast<std::size_t>(i)] = lab;
  }
  return Partition(std::move(rgs), next);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(m_));
  for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(rgs_[i])].push_back(i);
  return out;
}

PartitionRange::PartitionRange(int n, int m) : n_(n), m_(m) {
  if (m < 1 || m > n) throw BadBlockCount(m, n);
}

PartitionRange::iterator::iterator(int n, int m)
    : n_(n), m_(m), done_(false), rgs_(static_cast<std::size_t>(n), 0),
      prefix_max_(static_cast<std::size_t>(n), 0) {
  // Lexicographically first string with exactly m labels: zeros, then each
  // remaining position forced to open a new block.
  for (int j = 1; j < n_; ++j) {
    const int needed = (m_ - 1) - prefix_max_[j - 1];
    rgs_[j] = (n_ - j == needed) ? prefix_max_[j - 1] + 1 : 0;
    prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j]);
  }
}

void PartitionRange::iterator::advance() {
  for (int i = n_ - 1; i >= 1; --i) {
    const int cap = std::min(prefix_max_[i - 1] + 1, m_ - 1);
    for (int v = rgs_[i] + 1; v <= cap; ++v) {
      const int used = std::max(prefix_max_[i - 1], v) + 1;
      if (n_ - 1 - i < m_ - used) continue;  // too few points left to open the rest
      rgs_[i] = v;
      prefix_max_[i] = std::max(prefix_max_[i - 1], v);
      for (int j = i + 1; j < n_; ++j) {
        const int needed = (m_ - 1) - prefix_max_[j - 1];
        rgs_[j] = (n_ - j == needed) ? prefix_max_[j - 1] + 1 : 0;
        prefix_max_[j] = std::max(prefix_max_[j - 1], rgs_[j]);
      }
      return;
    }
  }
  done_ = true;
}

std::uint64_t stirling_second_clamped(int n, int m, std::uint64_t cap) {
  if (m < 1 || m > n) return 0;
  // S(i, j) = S(i-1, j-1) + j * S(i-1, j), clamped at cap.
  std::vector<std::uint64_t> row(static_cast<std::size_t>(m) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, m); j >= 1; --j) {
      const std::uint64_t keep = row[static_cast<std::size_t>(j)];
      const std::uint64_t grow =
          (keep > cap / static_cast<std::uint64_t>(j)) ? cap : keep * static_cast<std::uint64_t>(j);
      const std::uint64_t open = row[static_cast<std::size_t>(j) - 1];
      row[static_cast<std::size_t>(j)] = (grow > cap - open) ? cap : grow + open;
    }
    row[0] = 0;  // S(i, 0) = 0 for i >= 1
  }
  return std::min(row[static_cast<std::size_t>(m)], cap);
}

namespace {

void require_compatible(const ValidatedSpace& space, const Partition& d) {
  if (d.size() != space.size()) throw SizeMismatch(d.size(), space.size());
}

}  // namespace

double partition_diameter(const ValidatedSpace& space, const Partition& d) {
  require_compatible(space, d);
  double worst = 0.0;
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (d.label(i) == d.label(j)) worst = std::max(worst, space.distance(i, j));
  return worst;
}

ExtendedDistance separation_alpha(const ValidatedSpace& space, const Partition& d) {
  require_compatible(space, d);
  if (d.block_count() == 1) return ExtendedDistance::infinity();
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < space.size(); ++i)
    for (int j = i + 1; j < space.size(); ++j)
      if (d.label(i) != d.label(j)) best = std::min(best, space.distance(i, j));
  return ExtendedDistance(best);
}

double objective(const ValidatedSpace& space, const Partition& d, double lambda) {
  if (!(lambda > 0.0)) throw NonpositiveLambda(lambda);
  require_compatible(space, d);
  double value = std::max(partition_diameter(space, d), space.diam() - lambda);
  const ExtendedDistance alpha = separation_alpha(space, d);
  if (!alpha.is_infinite()) value = std::max(value, lambda - alpha.value());
  return value;  // >= 0 since diam D >= 0
}

}  // namespace ghsimplex
