#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>

#include "rep3/combinations.hpp"
#include "rep3/error.hpp"
#include "rep3/graph.hpp"
#include "rep3/repetition.hpp"

namespace rep3 {

/// A deletion set plus three surviving vertices that share a degree in the
/// reduced graph. All indices refer to the original graph.
struct DeletionCertificate {
  int original_order = 0;
  VertexSet deleted;
  Triple witness{};
  int witness_degree = 0;

  friend bool operator==(const DeletionCertificate&, const DeletionCertificate&) = default;
};

namespace detail {

/// Equal-degree triple among the survivors of g - del, smallest degree first
/// and then smallest indices.
inline std::optional<DeletionCertificate> try_deletion(const Graph& g, VertexSet del) {
  std::array<std::uint8_t, kMaxOrder> count{};
  std::array<Triple, kMaxOrder> first{};
  std::optional<DeletionCertificate> best;
  for (int v : g.vertices() - del) {
    const int d = (g.neighbors(v) - del).size();
    if (count[d] < 3) first[d][count[d]] = v;
    if (++count[d] == 3 && (!best || d < best->witness_degree)) {
      best = DeletionCertificate{g.order(), del, first[d], d};
    }
  }
  return best;
}

/// Vertices worth deleting first: for each equal-degree pair {u, v} and each
/// w whose degree is within `reach` of theirs, the vertices whose removal
/// lowers the larger side but not the smaller. Isolated vertices are never
/// useful and are left out.
inline VertexSet candidate_pool(const Graph& g, int reach) {
  VertexSet pool;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int d = g.degree(u);
      if (g.degree(v) != d) continue;
      const VertexSet pair{u, v};
      for (int w = 0; w < n; ++w) {
        const int gap = g.degree(w) - d;
        if (gap == 0 || std::abs(gap) > reach) continue;
        if (gap > 0) {
          pool = pool | (g.neighbors(w) - g.neighbors(u) - g.neighbors(v) - pair);
        } else {
          pool = pool | ((g.neighbors(u) & g.neighbors(v)) - g.neighbors(w) - VertexSet{w});
        }
      }
    }
  }
  VertexSet isolated;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 0) isolated.insert(v);
  }
  return pool - isolated;
}

inline std::optional<DeletionCertificate> sweep(const Graph& g, VertexSet pool, int k) {
  std::optional<DeletionCertificate> found;
  for_each_combination(pool, k, [&](VertexSet del) {
    found = try_deletion(g, del);
    return found.has_value();
  });
  return found;
}

}  // namespace detail

/// Exact brute-force search for the smallest D, |D| <= max_k, such that
/// g - D has three vertices of equal degree. Sizes 0, 1, 2, ... are tried in
/// turn and sets of one size in lexicographic order.
inline std::optional<DeletionCertificate> min_deletion_for_rep3(const Graph& g, int max_k) {
  if (max_k < 0 || max_k > g.order() - 3) {
    throw Error(ErrorCode::BudgetExceedsOrder,
                "budget " + std::to_string(max_k) + " exceeds n-3 for n=" + std::to_string(g.order()));
  }
  for (int k = 0; k <= max_k; ++k) {
    if (auto c = detail::sweep(g, g.vertices(), k)) return c;
  }
  return std::nullopt;
}

/// Size of the smallest deletion set within max_k, or -1.
inline int min_deletion_size(const Graph& g, int max_k) {
  const auto c = min_deletion_for_rep3(g, max_k);
  return c ? c->deleted.size() : -1;
}

/// Deletes at most min(3, n-3) vertices to leave three vertices of equal
/// degree. Exact: the returned set has the oracle's minimum size. Within a
/// size, sets drawn from near-tied degree pairs are tried before the full
/// sweep.
inline DeletionCertificate solve3(const Graph& g) {
  const int n = g.order();
  if (n < 5) throw Error(ErrorCode::OrderTooSmall, "need at least 5 vertices, got " + std::to_string(n));
  const int limit = std::min(3, n - 3);
  if (auto c = detail::try_deletion(g, VertexSet{})) return *c;
  for (int k = 1; k <= limit; ++k) {
    const VertexSet pool = detail::candidate_pool(g, k);
    if (pool.size() >= k) {
      if (auto c = detail::sweep(g, pool, k)) return *c;
    }
    if (auto c = detail::sweep(g, g.vertices(), k)) return *c;
  }
  throw Error(ErrorCode::TheoremViolation, "no deletion set of size <= " + std::to_string(limit));
}

/// Independent check of a certificate: rebuilds the reduced graph and reads
/// the witness degrees off it.
inline bool check_certificate(const Graph& g, const DeletionCertificate& c) {
  const int n = g.order();
  if (c.original_order != n) return false;
  if (!c.deleted.is_subset_of(g.vertices())) return false;
  const auto [a, b, w] = c.witness;
  for (int v : c.witness) {
    if (v < 0 || v >= n || c.deleted.contains(v)) return false;
  }
  if (a == b || a == w || b == w) return false;
  if (c.deleted.size() >= n) return false;
  const InducedSubgraph reduced = delete_vertices(g, c.deleted);
  for (int v : c.witness) {
    if (reduced.graph.degree(reduced.index_map[v]) != c.witness_degree) return false;
  }
  return true;
}

}  // namespace rep3
