#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rep3/error.hpp"

namespace rep3 {

inline constexpr int kMaxOrder = 64;

/// A subset of vertex indices {0..63} stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet from(std::span<const int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }
  constexpr int min() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices. Row v of the
/// adjacency matrix is the neighbourhood N(v) as a bit mask.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate pairs collapse to one edge.
  static Graph from_edges(int n, std::span<const Edge> edges) {
    check_order(n);
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw Error(ErrorCode::EndpointOutOfRange,
                    "edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (u == v) {
        throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
      }
      g.link(u, v);
    }
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  static Graph empty(int n) {
    check_order(n);
    return Graph(n);
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(rows_[v] | (std::uint64_t{1} << v)); }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
  std::uint64_t row(int v) const { return rows_[v]; }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /// Edges as (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : VertexSet(rows_[u]) - VertexSet::range(u + 1)) out.emplace_back(u, v);
    }
    return out;
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.link(u, v);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v) {
      if (a.rows_[v] != b.rows_[v]) return false;
    }
    return true;
  }

 private:
  explicit Graph(int n) : n_(n) {}

  static void check_order(int n) {
    if (n < 1 || n > kMaxOrder) {
      throw Error(ErrorCode::OrderOutOfRange,
                  "order " + std::to_string(n) + " outside [1,64]");
    }
  }

  void link(int u, int v) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxOrder> rows_{};

  friend Graph complement(const Graph& g);
  friend struct InducedSubgraph delete_vertices(const Graph& g, VertexSet deleted);
};

inline Graph from_edge_list(int n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

struct InducedSubgraph {
  Graph graph;
  /// index_map[old] is the new index of a survivor, or -1 if deleted.
  std::vector<int> index_map;
};

/// G[V \ deleted]. Survivors keep their relative order.
inline InducedSubgraph delete_vertices(const Graph& g, VertexSet deleted) {
  const int n = g.order();
  deleted = deleted & g.vertices();
  if (deleted.size() == n) {
    throw Error(ErrorCode::EmptyResult, "deletion set covers every vertex");
  }
  std::vector<int> index_map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!deleted.contains(v)) index_map[v] = next++;
  }
  Graph h(next);
  for (int v = 0; v < n; ++v) {
    if (index_map[v] < 0) continue;
    std::uint64_t row = 0;
    for (int u : g.neighbors(v) - deleted) row |= std::uint64_t{1} << index_map[u];
    h.rows_[index_map[v]] = row;
  }
  return {std::move(h), std::move(index_map)};
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  const std::uint64_t all = g.vertices().bits();
  for (int v = 0; v < g.order(); ++v) {
    h.rows_[v] = ~g.rows_[v] & all & ~(std::uint64_t{1} << v);
  }
  return h;
}

/// e(a, b): each unordered edge {u, v} is counted once when u is in a and
/// v is in b, or the other way round.
inline int edges_between(const Graph& g, VertexSet a, VertexSet b) {
  int count = 0;
  for (int u : (a | b) & g.vertices()) {
    std::uint64_t partners = 0;
    if (a.contains(u)) partners |= b.bits();
    if (b.contains(u)) partners |= a.bits();
    const std::uint64_t above = g.row(u) & ~VertexSet::range(u + 1).bits();
    count += std::popcount(above & partners);
  }
  return count;
}

}  // namespace rep3
