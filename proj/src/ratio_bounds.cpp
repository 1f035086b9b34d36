#include "entred/ratio_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "entred/error.hpp"

namespace entred {

namespace {

void check_rho(double rho) {
  if (!(rho >= 1.0) || !std::isfinite(rho)) {
    throw Error(ErrorKind::BadRho, "need rho >= 1, got " + std::to_string(rho));
  }
}

}  // namespace

double theorem2_gap(double rho) {
  check_rho(rho);
  if (rho == 1.0) return 0.0;
  const double g = rho * std::log(rho) / (rho - 1.0);
  // g - 1 - ln g, written through log1p to keep precision near rho = 1
  const double u = g - 1.0;
  return std::max(0.0, u - std::log1p(u)) / std::log(2.0);
}

RatioBound ratio_bound(std::size_t n, double rho) {
  if (n == 0) throw Error(ErrorKind::Empty, "n must be positive");
  const double gap = theorem2_gap(rho);
  return {n, rho, gap, std::log2(static_cast<double>(n)) - gap};
}

ZRho z_rho_detail(const Dist& p, double rho) {
  check_rho(rho);
  const std::size_t n = p.size();
  const double pmin = p.back();
  if (!(pmin > 0.0)) throw Error(ErrorKind::ZeroMinimum, "smallest probability is zero");
  const double ratio = p.front() / pmin;
  if (ratio > rho + kEpsSum) {
    throw Error(ErrorKind::RatioViolated,
                "p_1/p_n = " + std::to_string(ratio) + " exceeds rho = " + std::to_string(rho));
  }
  if (rho == 1.0 || n == 1) return {p, 0, p.front()};

  const double dn = static_cast<double>(n);
  const double raw = (1.0 - dn * pmin) / (pmin * (rho - 1.0));
  // A quotient landing just below an integer is a rounding artefact.
  double fl = std::floor(raw + kEpsSum);
  fl = std::clamp(fl, 0.0, dn - 1.0);
  const auto leading = static_cast<std::size_t>(fl);

  const double middle = 1.0 - (dn + fl * (rho - 1.0) - 1.0) * pmin;
  if (middle < pmin - kEpsSum || middle > rho * pmin + kEpsSum) {
    throw Error(ErrorKind::RatioViolated, "middle entry " + std::to_string(middle) +
                                              " outside [p_n, rho p_n]");
  }

  std::vector<double> z;
  z.reserve(n);
  z.insert(z.end(), leading, rho * pmin);
  z.push_back(std::clamp(middle, 0.0, rho * pmin));
  z.insert(z.end(), n - leading - 1, pmin);
  return {make_dist(z), leading, middle};
}

double prior_bound_epsilon(double rho) {
  check_rho(rho);
  if (rho == 1.0) return 0.0;
  auto lhs = [](double eps) {
    const double e1 = std::exp(eps);
    return 1.0 + 2.0 * (e1 - 1.0) + 2.0 * std::sqrt(e1 * e1 - e1);
  };
  double lo = 0.0;
  double hi = 1.0;
  while (lhs(hi) < rho) hi *= 2.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (lhs(mid) < rho ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace entred
