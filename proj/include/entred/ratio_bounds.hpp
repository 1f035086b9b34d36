#pragma once

#include <cstddef>

#include "entred/dist.hpp"

namespace entred {

/// Entropy lower bound for distributions whose max/min probability ratio is at most rho.
struct RatioBound {
  std::size_t n = 0;
  double rho = 1.0;
  double gap_bits = 0.0;
  double lower_bound_bits = 0.0;  ///< log2(n) - gap_bits
};

/// (g - 1 - ln g) / ln 2 with g = rho ln rho / (rho - 1); 0 at rho = 1.
double theorem2_gap(double rho);

RatioBound ratio_bound(std::size_t n, double rho);

struct ZRho {
  Dist z;
  std::size_t leading = 0;  ///< number of entries equal to rho * p_n
  double middle = 0.0;      ///< the single entry in [p_n, rho * p_n]
};

/// The extremal majorant of p with every mass in {p_n, rho p_n} except one.
/// Requires p_n > 0 (ZeroMinimum) and p_1 / p_n <= rho (RatioViolated).
ZRho z_rho_detail(const Dist& p, double rho);
inline Dist z_rho(const Dist& p, double rho) { return z_rho_detail(p, rho).z; }

/// The entropy gap guaranteed by the older ratio bound: the epsilon with
/// 1 + 2(e^eps - 1) + 2 sqrt(e^{2 eps} - e^eps) = rho, found by bisection.
double prior_bound_epsilon(double rho);

}  // namespace entred
