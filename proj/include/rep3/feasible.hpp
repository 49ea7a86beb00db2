#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rep3/combinations.hpp"
#include "rep3/error.hpp"
#include "rep3/graph.hpp"
#include "rep3/repetition.hpp"

namespace rep3 {

/// Conditions on a degree-sorted triple (x, y, z), d(x) <= d(y) <= d(z).
/// C1-C4 make the triple balanceable, C5-C8 accessible.
enum class Condition { C1 = 1, C2, C3, C4, C5, C6, C7, C8 };

inline constexpr std::array<Condition, 8> kAllConditions = {
    Condition::C1, Condition::C2, Condition::C3, Condition::C4,
    Condition::C5, Condition::C6, Condition::C7, Condition::C8};

inline std::string to_string(Condition c) {
  return "C" + std::to_string(static_cast<int>(c));
}

inline bool is_balanceable(Condition c) { return static_cast<int>(c) <= 4; }

struct TripleClassification {
  std::optional<Condition> condition;
  std::optional<Triple> labeling;  // (x, y, z) that satisfied the condition
  bool balanceable = false;
  bool accessible = false;
  int p = 0;  // d(z) - d(y)
  int q = 0;  // d(y) - d(x)

  bool feasible() const { return balanceable || accessible; }
  friend bool operator==(const TripleClassification&, const TripleClassification&) = default;
};

namespace detail {

inline Triple checked_triple(const Graph& g, std::span<const int> s) {
  if (s.size() != 3) {
    throw Error(ErrorCode::NotATriple, "expected 3 vertices, got " + std::to_string(s.size()));
  }
  Triple t{s[0], s[1], s[2]};
  for (int v : t) {
    if (v < 0 || v >= g.order()) {
      throw Error(ErrorCode::NotATriple, "vertex " + std::to_string(v) + " out of range");
    }
  }
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
    throw Error(ErrorCode::NotATriple, "triple vertices must be distinct");
  }
  return t;
}

inline bool nonempty(VertexSet s) { return !s.empty(); }

/// Does the labeled triple (x, y, z) meet condition c? Degree order is the
/// caller's responsibility.
inline bool satisfies(const Graph& g, Condition c, int x, int y, int z) {
  const bool xy = g.adjacent(x, y);
  const bool xz = g.adjacent(x, z);
  const bool yz = g.adjacent(y, z);
  switch (c) {
    case Condition::C1: return !xy && !xz && !yz;
    case Condition::C2: return xy && xz && yz;
    case Condition::C3: return xy && !xz && !yz;
    case Condition::C4: return xy && xz && !yz;
    case Condition::C5:
      return !xy && xz && !yz && nonempty(g.neighbors(y) - g.neighbors(z));
    case Condition::C6:
      return xy && !xz && yz && nonempty(g.neighbors(x) - g.closed_neighbors(y));
    case Condition::C7:
      return !xy && !xz && yz && nonempty(g.neighbors(x) - g.neighbors(y)) &&
             nonempty(g.neighbors(x) - g.neighbors(z));
    case Condition::C8:
      return !xy && xz && yz && nonempty(g.neighbors(x) - g.closed_neighbors(z)) &&
             nonempty(g.neighbors(y) - g.closed_neighbors(z));
  }
  return false;
}

}  // namespace detail

/// All orderings (x, y, z) of s with d(x) <= d(y) <= d(z), in lexicographic
/// order of the vertex indices.
inline std::vector<Triple> degree_labelings(const Graph& g, Triple s) {
  std::sort(s.begin(), s.end());
  std::vector<Triple> out;
  do {
    if (g.degree(s[0]) <= g.degree(s[1]) && g.degree(s[1]) <= g.degree(s[2])) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

/// Classifies a 3-set. Conditions are tried in order C1..C8; for each, every
/// degree-consistent labeling is tried in lexicographic order, and the first
/// hit wins. A triple meets a condition if any such labeling does.
inline TripleClassification classify_triple(const Graph& g, std::span<const int> s) {
  const Triple t = detail::checked_triple(g, s);
  std::array<int, 3> d{g.degree(t[0]), g.degree(t[1]), g.degree(t[2])};
  std::sort(d.begin(), d.end());

  TripleClassification out;
  out.p = d[2] - d[1];
  out.q = d[1] - d[0];
  const std::vector<Triple> labelings = degree_labelings(g, t);
  for (Condition c : kAllConditions) {
    for (const Triple& l : labelings) {
      if (detail::satisfies(g, c, l[0], l[1], l[2])) {
        out.condition = c;
        out.labeling = l;
        out.balanceable = is_balanceable(c);
        out.accessible = !out.balanceable;
        return out;
      }
    }
  }
  return out;
}

inline TripleClassification classify_triple(const Graph& g, const Triple& s) {
  return classify_triple(g, std::span<const int>(s));
}

inline bool is_feasible(const Graph& g, const Triple& s) { return classify_triple(g, s).feasible(); }
inline bool is_balanceable(const Graph& g, const Triple& s) { return classify_triple(g, s).balanceable; }

/// Deletion budget p + q + max(p, q) of a feasible triple.
inline int budget(const TripleClassification& tc) {
  if (!tc.condition) throw Error(ErrorCode::NotFeasible, "budget of an infeasible triple");
  return tc.p + tc.q + std::max(tc.p, tc.q);
}

/// Smallest set D, disjoint from s with |D| <= max_delete, after whose
/// deletion the three vertices of s share one degree. Sizes are tried in
/// increasing order and sets of one size lexicographically.
inline std::optional<VertexSet> equalize_triple(const Graph& g, std::span<const int> s, int max_delete) {
  const Triple t = detail::checked_triple(g, s);
  const VertexSet pool = g.vertices() - VertexSet{t[0], t[1], t[2]};
  std::optional<VertexSet> found;
  for (int k = 0; k <= std::min(max_delete, pool.size()) && !found; ++k) {
    for_each_combination(pool, k, [&](VertexSet del) {
      const int d0 = (g.neighbors(t[0]) - del).size();
      if ((g.neighbors(t[1]) - del).size() == d0 && (g.neighbors(t[2]) - del).size() == d0) {
        found = del;
        return true;
      }
      return false;
    });
  }
  return found;
}

inline std::optional<VertexSet> equalize_triple(const Graph& g, const Triple& s, int max_delete) {
  return equalize_triple(g, std::span<const int>(s), max_delete);
}

namespace detail {
template <std::size_t N>
std::array<int, N> checked_subset(const Graph& g, std::span<const int> xs) {
  if (xs.size() != N) {
    throw Error(ErrorCode::InvalidSubset, "expected " + std::to_string(N) + " vertices, got " +
                                              std::to_string(xs.size()));
  }
  std::array<int, N> out{};
  VertexSet seen;
  for (std::size_t i = 0; i < N; ++i) {
    const int v = xs[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) {
      throw Error(ErrorCode::InvalidSubset, "vertices must be distinct and in range");
    }
    seen.insert(v);
    out[i] = v;
  }
  return out;
}

/// Sorts by (degree, index).
template <std::size_t N>
void sort_by_degree(const Graph& g, std::array<int, N>& vs) {
  std::sort(vs.begin(), vs.end(), [&](int a, int b) {
    return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
  });
}
}  // namespace detail

struct FeasibleInFive {
  Triple triple;  // in degree-sorted position order
  TripleClassification classification;
};

/// Finds a feasible triple inside a 5-set that contains its median-degree
/// vertex (degree ties broken by index). Candidates are scanned in
/// lexicographic order of their positions in the degree sort.
inline FeasibleInFive find_feasible_in_five(const Graph& g, std::span<const int> five) {
  auto u = detail::checked_subset<5>(g, five);
  detail::sort_by_degree(g, u);
  static constexpr std::array<std::array<int, 3>, 6> kPositions = {
      {{0, 1, 2}, {0, 2, 3}, {0, 2, 4}, {1, 2, 3}, {1, 2, 4}, {2, 3, 4}}};
  for (const auto& pos : kPositions) {
    const Triple t{u[pos[0]], u[pos[1]], u[pos[2]]};
    TripleClassification tc = classify_triple(g, t);
    if (tc.feasible()) return {t, tc};
  }
  throw Error(ErrorCode::NoFeasibleTriple,
              "no feasible triple through the median vertex " + std::to_string(u[2]));
}

enum class FourSetVerdict { HasBalanceable, InducedPathOK, Violation };

inline std::string_view to_string(FourSetVerdict v) {
  switch (v) {
    case FourSetVerdict::HasBalanceable: return "HasBalanceable";
    case FourSetVerdict::InducedPathOK: return "InducedPathOK";
    case FourSetVerdict::Violation: return "Violation";
  }
  return "Unknown";
}

struct FourSetResult {
  FourSetVerdict verdict;
  std::optional<Triple> balanceable;  // set for HasBalanceable
};

/// A 4-set with no balanceable triple must induce a path whose two ends are
/// its two lowest-degree vertices (ties by index).
inline FourSetResult p4_structure(const Graph& g, std::span<const int> four) {
  auto x = detail::checked_subset<4>(g, four);
  std::array<int, 4> asc = x;
  std::sort(asc.begin(), asc.end());
  for (const auto& skip : {3, 2, 1, 0}) {
    Triple t{};
    int k = 0;
    for (int i = 0; i < 4; ++i) {
      if (i != skip) t[k++] = asc[i];
    }
    if (is_balanceable(g, t)) return {FourSetVerdict::HasBalanceable, t};
  }

  detail::sort_by_degree(g, x);
  const VertexSet set{x[0], x[1], x[2], x[3]};
  std::array<int, 4> inner{};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    inner[i] = (g.neighbors(x[i]) & set).size();
    edges += inner[i];
  }
  edges /= 2;
  const bool path = edges == 3 && inner[0] == 1 && inner[1] == 1 && inner[2] == 2 && inner[3] == 2;
  return {path ? FourSetVerdict::InducedPathOK : FourSetVerdict::Violation, std::nullopt};
}

}  // namespace rep3
