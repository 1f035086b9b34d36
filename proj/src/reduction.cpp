#include "entred/reduction.hpp"

#include <string>
#include <vector>

#include "entred/error.hpp"

namespace entred {

void check_m(const Dist& p, std::size_t m) {
  if (m < 2 || m >= p.size()) {
    throw Error(ErrorKind::BadM, "need 2 <= m < n, got m = " + std::to_string(m) +
                                     ", n = " + std::to_string(p.size()));
  }
}

namespace {

// tail[i] = p_i + ... + p_{n-1}, summed from the small end.
std::vector<double> suffix_sums(const Dist& p) {
  std::vector<double> tail(p.size() + 1, 0.0);
  for (std::size_t k = p.size(); k-- > 0;) tail[k] = tail[k + 1] + p[k];
  return tail;
}

}  // namespace

std::size_t i_star(const Dist& p, std::size_t m) {
  check_m(p, m);
  if (p.front() < 1.0 / static_cast<double>(m)) {
    throw Error(ErrorKind::Unreachable, "p_1 < 1/m: R_m(p) is uniform and i* is undefined");
  }
  const auto tail = suffix_sums(p);
  std::size_t best = 1;
  for (std::size_t i = 1; i < m; ++i) {
    // 1-based i: p_i is p[i-1], the tail starts at p[i].
    const double avg = tail[i] / static_cast<double>(m - i);
    if (p[i - 1] >= avg - kEpsSum) best = i;
  }
  return best;
}

Dist r_operator(const Dist& p, std::size_t m) {
  check_m(p, m);
  if (p.front() < 1.0 / static_cast<double>(m)) return uniform_dist(m);

  const std::size_t cut = i_star(p, m);
  const auto tail = suffix_sums(p);
  std::vector<double> r(m);
  for (std::size_t k = 0; k < cut; ++k) r[k] = p[k];
  const double t = tail[cut] / static_cast<double>(m - cut);
  for (std::size_t k = cut; k < m; ++k) r[k] = t;
  return make_dist(r);
}

QResult q_operator(const Dist& p, std::size_t m) {
  check_m(p, m);
  const std::size_t n = p.size();
  const std::size_t head = n - m + 1;

  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(m);
  std::vector<std::size_t> first;
  for (std::size_t k = 0; k < head; ++k) first.push_back(p.original_index(k));
  blocks.push_back(std::move(first));
  for (std::size_t k = head; k < n; ++k) blocks.push_back({p.original_index(k)});

  Partition partition(std::move(blocks), n);
  Dist dist = aggregate(p, partition);
  return {std::move(dist), std::move(partition)};
}

BoundReport bound_report(const Dist& p, std::size_t m) {
  return BoundReport{entropy(r_operator(p, m)), entropy(q_operator(p, m).dist), alpha(), m};
}

}  // namespace entred
