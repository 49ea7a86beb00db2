#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "rep3/canonical.hpp"
#include "rep3/error.hpp"
#include "rep3/graph.hpp"
#include "rep3/graph6.hpp"

namespace rep3 {

inline constexpr int kMaxEnumerationOrder = 9;

/// One representative per isomorphism class, stored as canonical codes.
/// Graphs are materialised on access.
class GraphCatalogue {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Graph;

    iterator() = default;
    iterator(const GraphCatalogue* cat, std::size_t i) : cat_(cat), i_(i) {}
    Graph operator*() const { return (*cat_)[i_]; }
    iterator& operator++() {
      ++i_;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++i_;
      return t;
    }
    bool operator==(const iterator& o) const { return i_ == o.i_; }

   private:
    const GraphCatalogue* cat_ = nullptr;
    std::size_t i_ = 0;
  };

  GraphCatalogue(int order, std::vector<std::uint64_t> codes) : order_(order), codes_(std::move(codes)) {}

  int order() const { return order_; }
  std::size_t size() const { return codes_.size(); }
  CanonicalForm form(std::size_t i) const { return {order_, codes_[i]}; }
  Graph operator[](std::size_t i) const { return form(i).graph(); }
  const std::vector<std::uint64_t>& codes() const { return codes_; }

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, codes_.size()}; }

 private:
  int order_;
  std::vector<std::uint64_t> codes_;
};

/// All graphs of order n up to isomorphism, by edge augmentation: the
/// classes with m + 1 edges are the canonical forms of every class with m
/// edges plus one missing edge. Output is ordered by edge count, then code.
inline GraphCatalogue enumerate_graphs(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error(n < 1 ? ErrorCode::OrderOutOfRange : ErrorCode::OrderTooLarge,
                "enumeration supports 1 <= n <= 9, got " + std::to_string(n));
  }
  const int max_edges = n * (n - 1) / 2;
  std::vector<std::uint64_t> all{0};
  std::vector<std::uint64_t> level{0};
  std::vector<std::uint64_t> grown;
  for (int m = 0; m < max_edges; ++m) {
    grown.clear();
    for (std::uint64_t code : level) {
      const Graph g = CanonicalForm{n, code}.graph();
      for (int v = 1; v < n; ++v) {
        for (int u : VertexSet::range(v) - g.neighbors(v)) {
          grown.push_back(canonical_form(g.with_edge(u, v)).code);
        }
      }
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    all.insert(all.end(), grown.begin(), grown.end());
    std::swap(level, grown);
  }
  return {n, std::move(all)};
}

/// Reads newline-separated graph6 records. Blank lines are skipped; a
/// ">>graph6<<" header may precede any record. Errors carry the 1-based
/// line number.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kGraph6Header) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedRecord, "line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

}  // namespace rep3
