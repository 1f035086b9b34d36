#pragma once

#include <cstddef>
#include <vector>

#include "entred/dist.hpp"
#include "entred/partition.hpp"

namespace entred {

/// A joint distribution with prescribed marginals. Rows follow the sorted
/// order of q, columns the sorted order of p.
class Coupling {
 public:
  /// Throws MarginalMismatch unless the row sums match q and the column sums
  /// match p within kEpsSum, and every cell is non-negative.
  Coupling(std::vector<double> cells, Dist q, Dist p);

  std::size_t rows() const noexcept { return q_.size(); }
  std::size_t cols() const noexcept { return p_.size(); }
  double at(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
  const std::vector<double>& cells() const noexcept { return cells_; }
  std::vector<std::vector<double>> matrix() const;
  const Dist& row_marginal() const noexcept { return q_; }
  const Dist& col_marginal() const noexcept { return p_; }

 private:
  std::vector<double> cells_;
  Dist q_;
  Dist p_;
};

Entropy entropy(const Coupling& c);

struct DivergenceReport {
  Entropy w;       ///< minimum coupling entropy W(p, q), or an upper bound when !exact
  double d = 0.0;  ///< 2W - H(p) - H(q)
  bool exact = false;
};

struct ExactCoupling {
  Coupling coupling;
  DivergenceReport report;
};

inline constexpr std::size_t kDefaultCouplingCap = 10;

/// The coupling that puts p_j in row i for every j in block I_i, where q is
/// the aggregation of p under the partition. Its entropy equals H(p).
Coupling build_mq(const Dist& p, const Partition& partition);

/// Every vertex of the transportation polytope C(p, q), deduplicated. Each
/// vertex is the basic solution supported on a spanning tree of the bipartite
/// graph rows x columns (zero-mass rows and columns stripped). Throws TooLarge
/// when rows + cols > cap.
std::vector<Coupling> transportation_vertices(const Dist& p, const Dist& q,
                                              std::size_t cap = kDefaultCouplingCap);

/// Minimum-entropy coupling by vertex enumeration; entropy is concave so the
/// minimum over the polytope sits at a vertex. Ties go to the lexicographically
/// smallest matrix.
ExactCoupling min_entropy_coupling_exact(const Dist& p, const Dist& q,
                                         std::size_t cap = kDefaultCouplingCap);

/// H(p) - H(aggregate(p, partition)), an upper bound on D(p, q) witnessed by M_q.
double d_upper_via_mq(const Dist& p, const Partition& partition);

struct Approximation {
  Dist q_bar;
  double d_upper = 0.0;  ///< certified upper bound on D(p, q_bar)
  Partition partition;
};

/// An m-symbol approximation of p whose divergence D(p, q_bar) is within
/// alpha() of the best achievable over all m-component distributions.
Approximation approx_best_approximation(const Dist& p, std::size_t m);

}  // namespace entred
