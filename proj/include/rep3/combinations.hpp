#pragma once

#include <vector>

#include "rep3/graph.hpp"

namespace rep3 {

/// Calls visit(subset) for every k-subset of pool in lexicographic order of
/// the ascending index lists. Stops early and returns true as soon as visit
/// returns true.
template <typename Visit>
bool for_each_combination(VertexSet pool, int k, Visit&& visit) {
  const std::vector<int> items = pool.to_vector();
  const int m = static_cast<int>(items.size());
  if (k < 0 || k > m) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet subset;
    for (int i : idx) subset.insert(items[i]);
    if (visit(subset)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace rep3
