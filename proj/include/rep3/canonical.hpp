#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rep3/error.hpp"
#include "rep3/graph.hpp"
#include "rep3/graph6.hpp"

namespace rep3 {

inline constexpr int kMaxCanonicalOrder = 10;

/// Permutation-invariant encoding of a graph on at most 10 vertices: the
/// upper triangle (graph6 bit order) of the lexicographically least
/// adjacency matrix among vertex orderings that list colour-refinement
/// classes in ascending order. `code` holds those n(n-1)/2 bits with the
/// first bit most significant, so comparing codes compares the bit strings.
struct CanonicalForm {
  int order = 0;
  std::uint64_t code = 0;

  /// The canonically labelled graph.
  Graph graph() const {
    std::vector<Edge> edges;
    int shift = order * (order - 1) / 2;
    for (int j = 1; j < order; ++j) {
      for (int i = 0; i < j; ++i) {
        if ((code >> --shift) & 1U) edges.emplace_back(i, j);
      }
    }
    return Graph::from_edges(order, edges);
  }

  /// graph6 bytes of the canonically labelled graph.
  std::string bytes() const { return write_graph6(graph()); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

using Colouring = std::array<int, kMaxCanonicalOrder>;

/// Iterated colour refinement starting from degrees. New colours are ranks
/// of (old colour, sorted neighbour colours), so the result is invariant
/// under relabelling and consistent with degree order.
inline Colouring refine_colours(const Graph& g) {
  const int n = g.order();
  Colouring colour{};
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  int classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colour[v]};
      for (int u : g.neighbors(v)) s.push_back(colour[u]);
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::vector<std::vector<int>> distinct;
    distinct.reserve(n);
    for (const auto& [s, v] : sig) distinct.push_back(s);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) -
                                   distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) break;
    classes = now;
  }
  return colour;
}

struct Partial {
  std::array<std::int8_t, kMaxCanonicalOrder> order{};
  std::uint64_t placed = 0;
};

inline bool twins(const Graph& g, int u, int v) {
  const std::uint64_t bu = std::uint64_t{1} << u;
  const std::uint64_t bv = std::uint64_t{1} << v;
  return (g.row(u) & ~bv) == (g.row(v) & ~bu);
}

/// Returns the canonical code and the ordering (position -> vertex) that
/// produced it.
inline std::pair<std::uint64_t, std::array<std::int8_t, kMaxCanonicalOrder>> canonical_search(const Graph& g) {
  const int n = g.order();
  const Colouring colour = refine_colours(g);
  std::array<int, kMaxCanonicalOrder> by_colour{};
  for (int v = 0; v < n; ++v) by_colour[v] = v;
  std::sort(by_colour.begin(), by_colour.begin() + n,
            [&](int a, int b) { return colour[a] < colour[b]; });
  std::array<std::uint64_t, kMaxCanonicalOrder> cell{};
  for (int j = 0; j < n; ++j) {
    for (int v = 0; v < n; ++v) {
      if (colour[v] == colour[by_colour[j]]) cell[j] |= std::uint64_t{1} << v;
    }
  }

  std::vector<Partial> frontier(1), next;
  std::uint64_t code = 0;
  for (int j = 0; j < n; ++j) {
    std::uint64_t best = ~std::uint64_t{0};
    next.clear();
    for (const Partial& p : frontier) {
      const VertexSet cand(cell[j] & ~p.placed);
      for (int w : cand) {
        // Swapping twins is an automorphism fixing everything placed so
        // far, so only the smallest twin of each class needs a branch.
        bool shadowed = false;
        for (int v : cand) {
          if (v >= w) break;
          if (twins(g, v, w)) {
            shadowed = true;
            break;
          }
        }
        if (shadowed) continue;
        std::uint64_t col = 0;
        for (int i = 0; i < j; ++i) col = (col << 1) | ((g.row(w) >> p.order[i]) & 1U);
        if (col > best) continue;
        if (col < best) {
          best = col;
          next.clear();
        }
        Partial q = p;
        q.order[j] = static_cast<std::int8_t>(w);
        q.placed |= std::uint64_t{1} << w;
        next.push_back(q);
      }
    }
    code = (code << j) | best;
    std::swap(frontier, next);
  }
  return {code, frontier.front().order};
}

inline void check_canonical_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::OrderTooLarge,
                "canonical forms support n <= 10, got " + std::to_string(g.order()));
  }
}

}  // namespace detail

inline CanonicalForm canonical_form(const Graph& g) {
  detail::check_canonical_order(g);
  return {g.order(), detail::canonical_search(g).first};
}

/// Canonical labelling as a permutation: result[v] is v's new index.
inline std::vector<int> canonical_labelling(const Graph& g) {
  detail::check_canonical_order(g);
  const auto order = detail::canonical_search(g).second;
  std::vector<int> label(g.order());
  for (int j = 0; j < g.order(); ++j) label[order[j]] = j;
  return label;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

}  // namespace rep3
