#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

#include "rep3/graph.hpp"

namespace rep3 {

using Triple = std::array<int, 3>;

struct DegreeProfile {
  std::map<int, int> histogram;  // degree -> multiplicity
  int rep = 0;
  std::vector<int> s_set;  // degrees in [1, n-1] held by exactly two vertices
  std::vector<int> t_set;  // degrees in [1, n-1] held by no vertex

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// Largest number of vertices sharing one degree.
inline int rep(const Graph& g) {
  std::array<int, kMaxOrder> count{};
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, ++count[g.degree(v)]);
  return best;
}

inline DegreeProfile profile(const Graph& g) {
  DegreeProfile p;
  for (int v = 0; v < g.order(); ++v) ++p.histogram[g.degree(v)];
  for (const auto& [degree, mult] : p.histogram) p.rep = std::max(p.rep, mult);
  for (int d = 1; d <= g.order() - 1; ++d) {
    const auto it = p.histogram.find(d);
    const int mult = it == p.histogram.end() ? 0 : it->second;
    if (mult == 2) p.s_set.push_back(d);
    if (mult == 0) p.t_set.push_back(d);
  }
  return p;
}

/// Three distinct vertices of equal degree, if any. Picks the smallest such
/// degree and, within it, the three smallest vertex indices.
inline std::optional<Triple> has_three_equal(const Graph& g) {
  std::array<Triple, kMaxOrder> first{};
  std::array<int, kMaxOrder> count{};
  std::optional<Triple> best;
  int best_degree = kMaxOrder;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (count[d] < 3) first[d][count[d]] = v;
    if (++count[d] == 3 && d < best_degree) {
      best_degree = d;
      best = first[d];
    }
  }
  return best;
}

}  // namespace rep3
