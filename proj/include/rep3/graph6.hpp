#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "rep3/error.hpp"
#include "rep3/graph.hpp"

namespace rep3 {

// graph6: one byte (63 + n) for the order, then the upper triangle of the
// adjacency matrix in column-major order, x(0,1) x(0,2) x(1,2) x(0,3) ...,
// packed six bits per byte (most significant first, zero padded) plus 63.
// Only the single-byte order form is supported, so 1 <= n <= 62.

inline constexpr int kMaxGraph6Order = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {
inline constexpr std::size_t graph6_data_bytes(int n) {
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  return (bits + 5) / 6;
}
}  // namespace detail

inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::UnsupportedOrder,
                "graph6 output supports n <= 62, got " + std::to_string(n));
  }
  std::string out;
  out.reserve(1 + detail::graph6_data_bytes(n));
  out.push_back(static_cast<char>(63 + n));
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + value));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (value << (6 - filled))));
  return out;
}

/// Parses one graph6 record. A leading ">>graph6<<" header and one trailing
/// newline (LF or CRLF) are tolerated; anything else is malformed, including
/// nonzero padding bits.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::MalformedRecord, "empty graph6 record");

  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Error(ErrorCode::MalformedRecord,
                  "byte " + std::to_string(b) + " outside the graph6 range [63,126]");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n == 63) {
    throw Error(ErrorCode::UnsupportedOrder, "multi-byte graph6 order (n > 62) is not supported");
  }
  if (n == 0) throw Error(ErrorCode::OrderOutOfRange, "graph6 record has order 0");
  const std::string_view data = text.substr(1);
  if (data.size() != detail::graph6_data_bytes(n)) {
    throw Error(ErrorCode::MalformedRecord,
                "expected " + std::to_string(detail::graph6_data_bytes(n)) +
                    " data bytes for n=" + std::to_string(n) + ", got " +
                    std::to_string(data.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(data[k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = static_cast<unsigned char>(data.back()) - 63;
    if ((last & ((1 << (6 - k % 6)) - 1)) != 0) {
      throw Error(ErrorCode::MalformedRecord, "nonzero graph6 padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace rep3
