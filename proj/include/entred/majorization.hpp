#pragma once

#include <cstddef>
#include <optional>

#include "entred/dist.hpp"

namespace entred {

struct MajorizationVerdict {
  bool majorized = true;
  /// Length (1-based) of the first prefix whose sum under `a` exceeds the one under `b`.
  std::optional<std::size_t> first_violating_prefix;

  explicit operator bool() const noexcept { return majorized; }
};

/// Tests a ⪯ b: every prefix sum of a is at most the matching prefix sum of b
/// (within kEpsSum). The shorter distribution is padded with zeros.
MajorizationVerdict majorizes(const Dist& a, const Dist& b);

}  // namespace entred
