#pragma once

// Brute-force reference implementations used only by the tests. They work on
// plain adjacency matrices and share no code with the library's search
// paths.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "rep3/graph.hpp"

namespace rep3::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

/// Labeled graph whose edge set is the bit pattern `mask` over pairs (i, j),
/// i < j, in graph6 order.
inline Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((mask >> k) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const Matrix ma = matrix_of(a), mb = matrix_of(b);
  const int n = a.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u) {
      for (int v = u + 1; v < n && ok; ++v) ok = ma[u][v] == mb[p[u]][p[v]];
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<int> sorted_degrees(const Graph& g) {
  auto d = g.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Condition numbers 1..8 met by some degree-sorted labeling of {a, b, c}.
inline std::set<int> brute_conditions(const Graph& g, int a, int b, int c) {
  const Matrix m = matrix_of(g);
  const int n = g.order();
  std::vector<int> deg(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) deg[u] += m[u][v];
  }
  // Does some w lie in N(s) but not in N(t) (closed: also w != t)?
  const auto exists_outside = [&](int s, int t, bool closed) {
    for (int w = 0; w < n; ++w) {
      if (m[s][w] && !m[t][w] && !(closed && w == t)) return true;
    }
    return false;
  };
  std::set<int> met;
  std::array<int, 3> l{a, b, c};
  std::sort(l.begin(), l.end());
  do {
    const int x = l[0], y = l[1], z = l[2];
    if (!(deg[x] <= deg[y] && deg[y] <= deg[z])) continue;
    const int pattern = (m[x][y] ? 1 : 0) | (m[x][z] ? 2 : 0) | (m[y][z] ? 4 : 0);
    if (pattern == 0) met.insert(1);
    if (pattern == 7) met.insert(2);
    if (pattern == 1) met.insert(3);
    if (pattern == 3) met.insert(4);
    if (pattern == 2 && exists_outside(y, z, false)) met.insert(5);
    if (pattern == 5 && exists_outside(x, y, true)) met.insert(6);
    if (pattern == 4 && exists_outside(x, y, false) && exists_outside(x, z, false)) met.insert(7);
    if (pattern == 6 && exists_outside(x, z, true) && exists_outside(y, z, true)) met.insert(8);
  } while (std::next_permutation(l.begin(), l.end()));
  return met;
}

/// Minimum |D| <= max_k with three equal degrees in g - D, by scanning every
/// subset mask; -1 if none.
inline int brute_min_deletion(const Graph& g, int max_k) {
  const Matrix m = matrix_of(g);
  const int n = g.order();
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size > max_k || (best >= 0 && size >= best)) continue;
    std::vector<int> count(n, 0);
    bool hit = false;
    for (int v = 0; v < n && !hit; ++v) {
      if ((mask >> v) & 1U) continue;
      int d = 0;
      for (int u = 0; u < n; ++u) d += m[v][u] && !((mask >> u) & 1U);
      hit = ++count[d] >= 3;
    }
    if (hit) best = size;
  }
  return best;
}

/// Number of isomorphism classes on n vertices: every labeled graph is
/// compared against the representatives found so far (same degree sequence)
/// by trying all vertex permutations.
inline std::size_t brute_class_count(int n) {
  std::vector<std::pair<std::vector<int>, Graph>> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
    const Graph g = labeled_graph(n, mask);
    const auto degrees = sorted_degrees(g);
    bool seen = false;
    for (const auto& [d, r] : reps) {
      if (d == degrees && brute_isomorphic(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) reps.emplace_back(degrees, g);
  }
  return reps.size();
}

// Named graphs.
inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return Graph::from_edges(n, e);
}
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}
inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}
inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}
/// Triangle a=0, b=1, c=2 with pendant d=3 on a.
inline Graph paw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }
/// a..e = 0..4 with edges ab, ac, ad, ae, bc, bd; degrees (4, 3, 2, 2, 1).
inline Graph antiregular5() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}});
}

}  // namespace rep3::testing
