#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entred/dist.hpp"
#include "entred/partition.hpp"

namespace entred {

enum class Guarantee { Exact, AdditiveAlpha };

struct AggregationResult {
  Partition partition;
  Dist dist;  ///< block sums of p, sorted
  Entropy h;
  Guarantee guarantee = Guarantee::Exact;
  /// Number of candidate partitions scored (0 for closed-form constructions).
  std::uint64_t candidates_evaluated = 0;
};

/// One Huffman step. Node ids 0..n-1 are the original indices of p; the
/// merge producing step k creates node n + k.
struct MergeStep {
  std::size_t node_a = 0;
  std::size_t node_b = 0;
  double mass_a = 0.0;
  double mass_b = 0.0;
  double merged_mass = 0.0;
  std::size_t merged_node = 0;
};

struct HuffmanTrace {
  std::vector<MergeStep> merge_steps;
  /// Length of the prefix of the final sorted vector that was never produced by a merge.
  std::size_t i_q = 0;
};

struct HuffmanAggregation {
  AggregationResult result;
  HuffmanTrace trace;
};

/// Runs n - m Huffman steps on p and returns the resulting m-aggregation,
/// whose entropy is within alpha() of H(R_m(p)). O(n log n).
///
/// Ties: the merge picks the two smallest masses; among equal masses merged
/// nodes go first (newest first), then originals by lower index. In the final
/// ordering originals precede merged nodes of equal mass, so i_q is maximal.
HuffmanAggregation huffman_max_aggregation(const Dist& p, std::size_t m);

inline constexpr std::size_t kDefaultExactCap = 12;

/// Exhaustive argmax of H(f(X)) over all partitions into exactly m blocks,
/// enumerated as restricted growth strings over original indices. The
/// lexicographically smallest string wins ties. Throws TooLarge when n > cap.
AggregationResult exact_max_aggregation(const Dist& p, std::size_t m,
                                        std::size_t cap = kDefaultExactCap);

/// Closed-form minimum: the Q_m aggregation.
AggregationResult exact_min_aggregation(const Dist& p, std::size_t m);

/// Stirling number of the second kind S(n, m), saturating at UINT64_MAX.
std::uint64_t stirling2(std::size_t n, std::size_t m);

}  // namespace entred
