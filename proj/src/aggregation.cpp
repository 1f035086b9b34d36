#include "entred/aggregation.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "entred/error.hpp"
#include "entred/reduction.hpp"

namespace entred {

namespace {

struct Node {
  double mass = 0.0;
  std::size_t id = 0;  // < n for originals
  bool merged = false;
  std::size_t rank = 0;  // sorted position for originals, creation step for merged
};

// Priority for extraction: true when `a` should be popped after `b`.
struct PopLater {
  bool operator()(const Node& a, const Node& b) const {
    if (a.mass != b.mass) return a.mass > b.mass;
    if (a.merged != b.merged) return !a.merged;  // merged nodes first
    if (a.merged) return a.rank < b.rank;        // newest merged first
    return a.rank > b.rank;                      // lower original index first
  }
};

// Final non-increasing order; originals ahead of merged nodes of equal mass.
bool before_in_output(const Node& a, const Node& b) {
  if (a.mass != b.mass) return a.mass > b.mass;
  if (a.merged != b.merged) return !a.merged;
  return a.rank < b.rank;
}

}  // namespace

HuffmanAggregation huffman_max_aggregation(const Dist& p, std::size_t m) {
  check_m(p, m);
  const std::size_t n = p.size();

  // Union of original indices under each node, as a linked list over originals.
  std::vector<std::size_t> head(2 * n), tail(2 * n), next(n, n);
  for (std::size_t i = 0; i < n; ++i) head[i] = tail[i] = i;

  std::priority_queue<Node, std::vector<Node>, PopLater> heap;
  for (std::size_t k = 0; k < n; ++k) heap.push(Node{p[k], p.original_index(k), false, k});

  HuffmanTrace trace;
  trace.merge_steps.reserve(n - m);
  for (std::size_t step = 0; step < n - m; ++step) {
    Node a = heap.top();
    heap.pop();
    Node b = heap.top();
    heap.pop();
    Node merged{a.mass + b.mass, n + step, true, step};
    head[merged.id] = head[a.id];
    next[tail[a.id]] = head[b.id];
    tail[merged.id] = tail[b.id];
    trace.merge_steps.push_back({a.id, b.id, a.mass, b.mass, merged.mass, merged.id});
    heap.push(merged);
  }

  std::vector<Node> final_nodes;
  final_nodes.reserve(m);
  while (!heap.empty()) {
    final_nodes.push_back(heap.top());
    heap.pop();
  }
  std::sort(final_nodes.begin(), final_nodes.end(), before_in_output);

  while (trace.i_q < final_nodes.size() && !final_nodes[trace.i_q].merged) ++trace.i_q;

  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(m);
  for (const auto& node : final_nodes) {
    std::vector<std::size_t> block;
    for (std::size_t i = head[node.id];; i = next[i]) {
      block.push_back(i);
      if (i == tail[node.id]) break;
    }
    blocks.push_back(std::move(block));
  }
  Partition partition(std::move(blocks), n);
  Dist dist = aggregate(p, partition);
  const Entropy h = entropy(dist);
  return {AggregationResult{std::move(partition), std::move(dist), h, Guarantee::AdditiveAlpha, 0},
          std::move(trace)};
}

AggregationResult exact_max_aggregation(const Dist& p, std::size_t m, std::size_t cap) {
  check_m(p, m);
  const std::size_t n = p.size();
  if (n > cap) {
    throw Error(ErrorKind::TooLarge, "exhaustive search limited to n <= " + std::to_string(cap) +
                                         ", got n = " + std::to_string(n));
  }
  const std::vector<double> values = p.original_order();

  // Restricted growth strings a[0..n-1] with a[0] = 0, a[i] <= 1 + max(a[0..i-1]),
  // using exactly m labels, visited in lexicographic order by depth-first search.
  std::vector<std::size_t> rgs(n, 0), best_rgs;
  std::vector<double> mass(m, 0.0);
  double best_h = -1.0;
  std::uint64_t evaluated = 0;

  auto visit = [&](auto&& self, std::size_t i, std::size_t used) -> void {
    if (n - i < m - used) return;  // not enough elements left to open every block
    if (i == n) {
      ++evaluated;
      const double h = entropy(std::span<const double>(mass)).bits;
      if (h > best_h + 1e-12) {
        best_h = h;
        best_rgs = rgs;
      }
      return;
    }
    const std::size_t limit = std::min(used + 1, m);
    for (std::size_t label = 0; label < limit; ++label) {
      rgs[i] = label;
      mass[label] += values[i];
      self(self, i + 1, std::max(used, label + 1));
      mass[label] -= values[i];
    }
  };
  mass[0] = values[0];
  visit(visit, 1, 1);

  // Recompute block sums from scratch so the reported masses carry no
  // add/subtract residue from the search.
  Partition partition = Partition::from_labels(best_rgs, m);
  Dist dist = aggregate(p, partition);
  const Entropy h = entropy(dist);
  return {std::move(partition), std::move(dist), h, Guarantee::Exact, evaluated};
}

AggregationResult exact_min_aggregation(const Dist& p, std::size_t m) {
  QResult q = q_operator(p, m);
  const Entropy h = entropy(q.dist);
  return {std::move(q.partition), std::move(q.dist), h, Guarantee::Exact, 0};
}

std::uint64_t stirling2(std::size_t n, std::size_t m) {
  if (m > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  // S(i, j) = j S(i-1, j) + S(i-1, j-1)
  std::vector<std::uint64_t> row(m + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, m); j >= 1; --j) {
      const std::uint64_t prev = row[j];
      std::uint64_t term = 0;
      if (prev != 0 && j > kMax / prev) {
        term = kMax;
      } else {
        term = j * prev;
      }
      row[j] = (term > kMax - row[j - 1]) ? kMax : term + row[j - 1];
    }
    row[0] = 0;
  }
  return row[m];
}

}  // namespace entred
