#include "entred/partition.hpp"

#include <algorithm>
#include <string>

#include "entred/error.hpp"

namespace entred {

Partition::Partition(std::vector<std::vector<std::size_t>> blocks, std::size_t n)
    : n_(n), blocks_(std::move(blocks)) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    auto& block = blocks_[b];
    if (block.empty()) throw Error(ErrorKind::BadPartition, "block " + std::to_string(b) + " is empty");
    std::sort(block.begin(), block.end());
    for (std::size_t i : block) {
      if (i >= n) {
        throw Error(ErrorKind::BadPartition,
                    "index " + std::to_string(i) + " out of range for n = " + std::to_string(n));
      }
      if (seen[i]) throw Error(ErrorKind::BadPartition, "index " + std::to_string(i) + " appears twice");
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != n) {
    throw Error(ErrorKind::BadPartition,
                "blocks cover " + std::to_string(covered) + " of " + std::to_string(n) + " indices");
  }
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels, std::size_t m) {
  std::vector<std::vector<std::size_t>> blocks(m);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] >= m) throw Error(ErrorKind::BadPartition, "label out of range");
    blocks[labels[i]].push_back(i);
  }
  return Partition(std::move(blocks), labels.size());
}

Partition Partition::identity(std::size_t n) {
  std::vector<std::vector<std::size_t>> blocks(n);
  for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
  return Partition(std::move(blocks), n);
}

std::vector<double> block_masses(const Dist& p, const Partition& partition) {
  if (partition.n() != p.size()) {
    throw Error(ErrorKind::BadPartition, "partition is over " + std::to_string(partition.n()) +
                                             " indices but the distribution has " +
                                             std::to_string(p.size()));
  }
  std::vector<double> masses;
  masses.reserve(partition.m());
  for (const auto& block : partition.blocks()) {
    double s = 0.0;
    for (std::size_t i : block) s += p.original(i);
    masses.push_back(s);
  }
  return masses;
}

Dist aggregate(const Dist& p, const Partition& partition) {
  return make_dist(block_masses(p, partition));
}

}  // namespace entred
