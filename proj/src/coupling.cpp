#include "entred/coupling.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "entred/aggregation.hpp"
#include "entred/error.hpp"

namespace entred {

Coupling::Coupling(std::vector<double> cells, Dist q, Dist p)
    : cells_(std::move(cells)), q_(std::move(q)), p_(std::move(p)) {
  const std::size_t m = q_.size();
  const std::size_t n = p_.size();
  if (cells_.size() != m * n) {
    throw Error(ErrorKind::MarginalMismatch, "matrix has " + std::to_string(cells_.size()) +
                                                 " cells, expected " + std::to_string(m) + " x " +
                                                 std::to_string(n));
  }
  std::vector<double> col(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double x = cells_[i * n + j];
      if (!(x >= -kEpsSum)) throw Error(ErrorKind::MarginalMismatch, "negative cell");
      row += x;
      col[j] += x;
    }
    if (std::abs(row - q_[i]) > kEpsSum) {
      throw Error(ErrorKind::MarginalMismatch, "row " + std::to_string(i) + " sums to " +
                                                   std::to_string(row) + ", expected " +
                                                   std::to_string(q_[i]));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(col[j] - p_[j]) > kEpsSum) {
      throw Error(ErrorKind::MarginalMismatch, "column " + std::to_string(j) + " sums to " +
                                                   std::to_string(col[j]) + ", expected " +
                                                   std::to_string(p_[j]));
    }
  }
}

std::vector<std::vector<double>> Coupling::matrix() const {
  std::vector<std::vector<double>> out(rows(), std::vector<double>(cols()));
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols(); ++j) out[i][j] = at(i, j);
  }
  return out;
}

Entropy entropy(const Coupling& c) { return entropy(std::span<const double>(c.cells())); }

Coupling build_mq(const Dist& p, const Partition& partition) {
  Dist q = aggregate(p, partition);
  const std::size_t n = p.size();
  std::vector<double> cells(q.size() * n, 0.0);
  for (std::size_t row = 0; row < q.size(); ++row) {
    for (std::size_t orig : partition.block(q.original_index(row))) {
      cells[row * n + p.sorted_position(orig)] = p.original(orig);
    }
  }
  return Coupling(std::move(cells), std::move(q), p);
}

namespace {

constexpr std::size_t kMaxTreeNodes = 32;

struct UnionFind {
  std::array<std::uint8_t, kMaxTreeNodes> parent{};

  explicit UnionFind(std::size_t nodes) {
    for (std::size_t v = 0; v < nodes; ++v) parent[v] = static_cast<std::uint8_t>(v);
  }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = static_cast<std::uint8_t>(b);
    return true;
  }
};

// Basic feasible solutions of the transportation problem on the positive
// rows/columns of (q, p). Calls `emit` with the full rows x cols cell vector
// of each feasible spanning-tree solution (degenerate vertices repeat).
class VertexEnumerator {
 public:
  VertexEnumerator(const Dist& p, const Dist& q, std::size_t cap) : p_(p), q_(q) {
    if (p.size() + q.size() > cap) {
      throw Error(ErrorKind::TooLarge, "vertex enumeration limited to m + n <= " +
                                           std::to_string(cap) + ", got " +
                                           std::to_string(p.size() + q.size()));
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] > 0.0) rows_.push_back(i);
    }
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (p[j] > 0.0) cols_.push_back(j);
    }
    nodes_ = rows_.size() + cols_.size();
    if (nodes_ > kMaxTreeNodes) throw Error(ErrorKind::TooLarge, "too many support points");
    for (std::size_t r = 0; r < rows_.size(); ++r) mass_.push_back(q[rows_[r]]);
    for (std::size_t c = 0; c < cols_.size(); ++c) mass_.push_back(p[cols_[c]]);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_.size(); ++c) edges_.push_back({r, rows_.size() + c});
    }
  }

  void run(const std::function<void(const std::vector<double>&)>& emit) {
    emit_ = &emit;
    chosen_.clear();
    search(0, UnionFind(nodes_));
  }

 private:
  struct Edge {
    std::size_t u, v;
  };

  bool connectable(std::size_t from, UnionFind uf) const {
    std::size_t components = 0;
    for (std::size_t v = 0; v < nodes_; ++v) components += (uf.find(v) == v);
    for (std::size_t e = from; e < edges_.size() && components > 1; ++e) {
      components -= uf.unite(edges_[e].u, edges_[e].v);
    }
    return components == 1;
  }

  void search(std::size_t e, const UnionFind& uf) {
    const std::size_t need = nodes_ - 1;
    if (chosen_.size() == need) {
      solve();
      return;
    }
    if (edges_.size() - e < need - chosen_.size()) return;

    UnionFind with = uf;
    if (with.unite(edges_[e].u, edges_[e].v)) {
      chosen_.push_back(e);
      search(e + 1, with);
      chosen_.pop_back();
    }
    if (connectable(e + 1, uf)) search(e + 1, uf);
  }

  // Peel leaves: a leaf's only edge must carry its whole residual mass.
  void solve() {
    std::array<double, kMaxTreeNodes> residual{};
    std::array<std::size_t, kMaxTreeNodes> degree{};
    for (std::size_t v = 0; v < nodes_; ++v) residual[v] = mass_[v];
    for (std::size_t e : chosen_) {
      ++degree[edges_[e].u];
      ++degree[edges_[e].v];
    }
    std::vector<bool> done(chosen_.size(), false);
    std::vector<double> flow(chosen_.size(), 0.0);
    for (std::size_t step = 0; step < chosen_.size(); ++step) {
      for (std::size_t k = 0; k < chosen_.size(); ++k) {
        if (done[k]) continue;
        const Edge& edge = edges_[chosen_[k]];
        std::size_t leaf = nodes_, other = nodes_;
        if (degree[edge.u] == 1) {
          leaf = edge.u;
          other = edge.v;
        } else if (degree[edge.v] == 1) {
          leaf = edge.v;
          other = edge.u;
        } else {
          continue;
        }
        flow[k] = residual[leaf];
        if (flow[k] < -1e-12) return;
        residual[other] -= flow[k];
        residual[leaf] = 0.0;
        --degree[leaf];
        --degree[other];
        done[k] = true;
        break;
      }
    }
    const std::size_t n = p_.size();
    cells_.assign(q_.size() * n, 0.0);
    for (std::size_t k = 0; k < chosen_.size(); ++k) {
      const Edge& edge = edges_[chosen_[k]];
      const std::size_t row = rows_[edge.u];
      const std::size_t col = cols_[edge.v - rows_.size()];
      cells_[row * n + col] = std::max(flow[k], 0.0);
    }
    (*emit_)(cells_);
  }

  const Dist& p_;
  const Dist& q_;
  std::vector<std::size_t> rows_, cols_;
  std::vector<double> mass_;
  std::vector<Edge> edges_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
  std::vector<double> cells_;
  const std::function<void(const std::vector<double>&)>* emit_ = nullptr;
};

bool same_cells(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-12) return false;
  }
  return true;
}

}  // namespace

std::vector<Coupling> transportation_vertices(const Dist& p, const Dist& q, std::size_t cap) {
  std::vector<std::vector<double>> found;
  VertexEnumerator(p, q, cap).run([&](const std::vector<double>& cells) {
    for (const auto& f : found) {
      if (same_cells(f, cells)) return;
    }
    found.push_back(cells);
  });
  std::sort(found.begin(), found.end());
  std::vector<Coupling> out;
  out.reserve(found.size());
  for (auto& cells : found) out.emplace_back(std::move(cells), q, p);
  return out;
}

ExactCoupling min_entropy_coupling_exact(const Dist& p, const Dist& q, std::size_t cap) {
  std::vector<double> best;
  double best_h = std::numeric_limits<double>::infinity();
  VertexEnumerator(p, q, cap).run([&](const std::vector<double>& cells) {
    const double h = entropy(std::span<const double>(cells)).bits;
    if (h < best_h - 1e-12 || (h <= best_h + 1e-12 && cells < best)) {
      best_h = std::min(best_h, h);
      best = cells;
    }
  });
  Coupling coupling(std::move(best), q, p);
  const Entropy w = entropy(coupling);
  const double d = 2.0 * w.bits - entropy(p).bits - entropy(q).bits;
  return {std::move(coupling), DivergenceReport{w, d, true}};
}

double d_upper_via_mq(const Dist& p, const Partition& partition) {
  return entropy(p).bits - entropy(aggregate(p, partition)).bits;
}

Approximation approx_best_approximation(const Dist& p, std::size_t m) {
  HuffmanAggregation huff = huffman_max_aggregation(p, m);
  const double bound = d_upper_via_mq(p, huff.result.partition);
  return {std::move(huff.result.dist), bound, std::move(huff.result.partition)};
}

}  // namespace entred
