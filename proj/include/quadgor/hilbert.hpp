#pragma once

#include <map>
#include <utility>
#include <vector>

#include "quadgor/rational.hpp"

namespace qg {

// Dimension sequence of a graded algebra slice by slice, h[k] = dim A_k,
// with the bigraded refinement keyed by (x-degree, u-degree).
struct HilbertVector {
  std::vector<BigInt> h;
  std::map<std::pair<int, int>, BigInt> bigraded;

  int d() const { return static_cast<int>(h.size()) - 1; }
  const BigInt& at(std::size_t k) const { return h[k]; }
};

}  // namespace qg
