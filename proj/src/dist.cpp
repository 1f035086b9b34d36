#include "entred/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "entred/error.hpp"

namespace entred {

std::vector<double> Dist::original_order() const {
  std::vector<double> out(probs_.size());
  for (std::size_t k = 0; k < probs_.size(); ++k) out[order_[k]] = probs_[k];
  return out;
}

Dist make_dist(std::span<const double> raw) {
  if (raw.empty()) throw Error(ErrorKind::Empty, "distribution has no entries");

  std::vector<double> vals(raw.begin(), raw.end());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!std::isfinite(vals[i]) || vals[i] < -kEpsSum) {
      throw Error(ErrorKind::NegativeMass,
                  "entry " + std::to_string(i) + " = " + std::to_string(vals[i]));
    }
    if (vals[i] < 0.0) vals[i] = 0.0;
  }
  double total = std::accumulate(vals.begin(), vals.end(), 0.0);
  if (std::abs(total - 1.0) > kEpsSum) {
    throw Error(ErrorKind::NotNormalized, "entries sum to " + std::to_string(total));
  }

  Dist d;
  d.order_.resize(vals.size());
  std::iota(d.order_.begin(), d.order_.end(), std::size_t{0});
  std::stable_sort(d.order_.begin(), d.order_.end(),
                   [&](std::size_t a, std::size_t b) { return vals[a] > vals[b]; });
  d.probs_.resize(vals.size());
  d.rank_.resize(vals.size());
  for (std::size_t k = 0; k < vals.size(); ++k) {
    d.probs_[k] = vals[d.order_[k]];
    d.rank_[d.order_[k]] = k;
  }
  return d;
}

Entropy entropy(std::span<const double> masses) {
  double h = 0.0;
  for (double x : masses) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  // -0.0 and tiny negative rounding residue for point masses
  return Entropy{std::max(h, 0.0)};
}

Entropy entropy(const Dist& d) { return entropy(d.probs()); }

double alpha() {
  static const double value = 1.0 - (1.0 + std::log(std::log(2.0))) / std::log(2.0);
  return value;
}

Dist uniform_dist(std::size_t n) {
  std::vector<double> v(n, 1.0 / static_cast<double>(n));
  return make_dist(v);
}

Dist sample_dist(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : v) x /= total;
  return make_dist(v);
}

}  // namespace entred
