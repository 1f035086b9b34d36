#pragma once

#include <cstddef>

#include "entred/dist.hpp"
#include "entred/partition.hpp"

namespace entred {

/// Bracket on the entropy achievable by mapping p onto m symbols.
/// The maximum lies in [h_upper - alpha, h_upper]; the minimum equals
/// h_lower_achievable.
struct BoundReport {
  Entropy h_upper;             ///< H(R_m(p))
  Entropy h_lower_achievable;  ///< H(Q_m(p))
  double alpha = 0.0;
  std::size_t m = 0;
};

struct QResult {
  Dist dist;
  Partition partition;
};

/// Throws BadM unless 2 <= m < n.
void check_m(const Dist& p, std::size_t m);

/// Largest i in {1, ..., m-1} (1-based) with p_i >= (p_{i+1} + ... + p_n) / (m - i).
/// Requires p_1 >= 1/m, otherwise throws Unreachable.
std::size_t i_star(const Dist& p, std::size_t m);

/// The entropy-maximal envelope R_m(p): keeps the i* largest masses and spreads
/// the remaining mass evenly over the other m - i* symbols (uniform when p_1 < 1/m).
Dist r_operator(const Dist& p, std::size_t m);

/// The entropy-minimal aggregation Q_m(p): the n - m + 1 largest masses
/// merged into one block, everything else kept as singletons.
QResult q_operator(const Dist& p, std::size_t m);

BoundReport bound_report(const Dist& p, std::size_t m);

}  // namespace entred
