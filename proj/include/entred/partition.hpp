#pragma once

#include <cstddef>
#include <vector>

#include "entred/dist.hpp"

namespace entred {

/// A partition of {0, ..., n-1} into non-empty blocks: the fibres of a
/// surjective map f onto |blocks| symbols. Indices refer to the caller's
/// original (pre-sorting) positions. Each block is kept sorted; block order is
/// preserved as given.
class Partition {
 public:
  /// Throws BadPartition unless the blocks are non-empty, disjoint and cover {0..n-1}.
  Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n);

  /// Builds the partition from a block label per element; labels must be dense in [0, m).
  static Partition from_labels(const std::vector<std::size_t>& labels, std::size_t m);
  static Partition identity(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return blocks_.size(); }
  const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
  const std::vector<std::size_t>& block(std::size_t i) const { return blocks_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// Block masses of p under the partition, in block order (unsorted).
std::vector<double> block_masses(const Dist& p, const Partition& partition);

/// Distribution of f(X): block sums re-sorted. original_index(k) of the result
/// is the block index that produced its k-th largest entry.
Dist aggregate(const Dist& p, const Partition& partition);

}  // namespace entred
