#pragma once

// graph6 short form (n <= 62): one byte n + 63, then the upper triangle in
// column order, six bits per byte, most significant first, each byte + 63.

#include "canonical.hpp"
#include "graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace cospec {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int graph6_max_vertices = 62;

inline auto parse_graph6(std::string_view line) -> Graph {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty())
    throw ParseError("empty graph6 line");
  for (char ch : line)
    if (ch < 63 || ch > 126)
      throw ParseError("graph6 byte outside printable range 63..126");
  if (line[0] == 126)
    throw ParseError("graph6 long form (n > 62) not supported");
  const int n = line[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - 1 != bytes)
    throw ParseError("graph6 body has " + std::to_string(line.size() - 1) + " bytes, expected " +
                     std::to_string(bytes) + " for n = " + std::to_string(n));
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1)
        g.add_edge(i, j);
    }
  // padding bits must be zero
  for (; k < bytes * 6; ++k)
    if (((line[1 + k / 6] - 63) >> (5 - k % 6)) & 1)
      throw ParseError("nonzero graph6 padding bits");
  return g;
}

inline auto write_graph6(const Graph& g) -> std::string {
  if (g.order() > graph6_max_vertices)
    throw std::length_error("graph6 short form limited to 62 vertices");
  std::string out(1, static_cast<char>(g.order() + 63));
  for (std::uint8_t b : pack_upper_triangle(g))
    out.push_back(static_cast<char>(b + 63));
  return out;
}

/// graph6 text of the canonical form; equal strings mean isomorphic graphs.
inline auto write_graph6(const CanonicalForm& f) -> std::string {
  std::string out(1, static_cast<char>(f.n + 63));
  for (std::uint8_t b : f.code)
    out.push_back(static_cast<char>(b + 63));
  return out;
}

} // namespace cospec
