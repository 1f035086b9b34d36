#pragma once

#include <compare>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace entred {

/// Tolerance for normalization and for every probability comparison.
inline constexpr double kEpsSum = 1e-9;

/// Shannon entropy in bits.
struct Entropy {
  double bits = 0.0;

  friend auto operator<=>(const Entropy&, const Entropy&) = default;
};

/// A finite probability distribution stored sorted non-increasing.
///
/// The stable-sort permutation is kept so that results expressed over sorted
/// positions (partitions, couplings) can be mapped back to the caller's
/// original indices. Ties keep their input order.
class Dist {
 public:
  std::size_t size() const noexcept { return probs_.size(); }
  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t k) const { return probs_[k]; }
  double front() const { return probs_.front(); }
  double back() const { return probs_.back(); }

  /// Original (input) index of the k-th largest entry.
  std::size_t original_index(std::size_t k) const { return order_[k]; }
  /// Sorted position of the entry given at input index `orig`.
  std::size_t sorted_position(std::size_t orig) const { return rank_[orig]; }
  /// Probability of the entry given at input index `orig`.
  double original(std::size_t orig) const { return probs_[rank_[orig]]; }
  /// The probabilities in their input order (zero-clamped).
  std::vector<double> original_order() const;

  friend bool operator==(const Dist& a, const Dist& b) { return a.probs_ == b.probs_; }

 private:
  friend Dist make_dist(std::span<const double> raw);

  std::vector<double> probs_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

/// Validates and canonicalizes raw probabilities. Entries in (-kEpsSum, 0]
/// are clamped to zero; zero entries are kept.
Dist make_dist(std::span<const double> raw);
inline Dist make_dist(std::initializer_list<double> raw) {
  return make_dist(std::span<const double>(raw.begin(), raw.size()));
}

Entropy entropy(const Dist& d);
/// Entropy of an arbitrary non-negative mass vector (order irrelevant, 0 log 0 = 0).
Entropy entropy(std::span<const double> masses);

/// The additive approximation constant 1 - (1 + ln ln 2) / ln 2.
double alpha();

Dist uniform_dist(std::size_t n);

/// Uniform sample from the probability simplex on n points (flat Dirichlet).
Dist sample_dist(std::size_t n, std::mt19937_64& rng);

}  // namespace entred
