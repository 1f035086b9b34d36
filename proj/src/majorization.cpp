#include "entred/majorization.hpp"

#include <algorithm>

namespace entred {

MajorizationVerdict majorizes(const Dist& a, const Dist& b) {
  const std::size_t len = std::max(a.size(), b.size());
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < a.size()) sa += a[k];
    if (k < b.size()) sb += b[k];
    if (sa > sb + kEpsSum) return {false, k + 1};
  }
  return {};
}

}  // namespace entred
