#pragma once

/**
 * Simple undirected graphs on at most 64 vertices, stored as one adjacency
 * bitset row per vertex, plus constructors for the named families used by
 * the toolkit and the structural queries they need.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cospec {

inline constexpr int max_vertices = 64;

/// Subset of {0..63}; bit i set means vertex i is a member.
using VertexSet = std::uint64_t;

constexpr auto bit(int v) -> VertexSet { return VertexSet{1} << v; }

constexpr auto low_mask(int n) -> VertexSet {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr auto popcount(VertexSet s) -> int { return std::popcount(s); }

constexpr auto lowest(VertexSet s) -> int { return std::countr_zero(s); }

/// Calls f(v) for every member of s in ascending order.
template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

inline auto members(VertexSet s) -> std::vector<int> {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > max_vertices)
      throw std::length_error("graph order " + std::to_string(n) + " outside [0, 64]");
  }

  auto order() const -> int { return n_; }
  auto row(int v) const -> VertexSet { return adj_[v]; }
  auto adjacent(int u, int v) const -> bool { return (adj_[u] >> v) & 1U; }
  auto degree(int v) const -> int { return popcount(adj_[v]); }
  auto vertices() const -> VertexSet { return low_mask(n_); }

  auto edge_count() const -> int {
    int twice = 0;
    for (int v = 0; v < n_; ++v)
      twice += degree(v);
    return twice / 2;
  }

  auto edges() const -> std::vector<std::pair<int, int>> {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for_each_vertex(adj_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  /// Vertices of degree zero.
  auto isolated() const -> VertexSet {
    VertexSet s = 0;
    for (int v = 0; v < n_; ++v)
      if (adj_[v] == 0)
        s |= bit(v);
    return s;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  friend auto operator==(const Graph& a, const Graph& b) -> bool {
    if (a.n_ != b.n_)
      return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw std::out_of_range("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
  }

  int n_ = 0;
  std::array<VertexSet, max_vertices> adj_{};
};

inline auto make_graph(int n, const std::vector<std::pair<int, int>>& edges) -> Graph {
  Graph g(n);
  for (auto [u, v] : edges)
    g.add_edge(u, v);
  return g;
}

// ---------------------------------------------------------------------------
// Named families. Labelings are fixed so fixtures are reproducible.

inline auto empty_graph(int n) -> Graph { return Graph(n); }

inline auto path_graph(int n) -> Graph {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i)
    g.add_edge(i, i + 1);
  return g;
}

inline auto cycle_graph(int n) -> Graph {
  if (n < 3)
    throw std::invalid_argument("cycle length must be at least 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline auto complete_graph(int n) -> Graph {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

/// K_{m,k} with partite sets {0..m-1} and {m..m+k-1}.
inline auto complete_bipartite(int m, int k) -> Graph {
  if (m < 0 || k < 0)
    throw std::invalid_argument("negative part size");
  Graph g(m + k);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < m + k; ++v)
      g.add_edge(u, v);
  return g;
}

/// K_{1,k}: center 0, leaves 1..k.
inline auto star_graph(int k) -> Graph { return complete_bipartite(1, k); }

/// P_2(a,b): centers 0 and 1, leaves 2..a+1 on center 0, a+2..a+b+1 on center 1.
inline auto double_star(int a, int b) -> Graph {
  if (a < 0 || b < 0)
    throw std::invalid_argument("negative leaf count");
  Graph g(a + b + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < a; ++i)
    g.add_edge(0, 2 + i);
  for (int i = 0; i < b; ++i)
    g.add_edge(1, 2 + a + i);
  return g;
}

/// Graph of any order as an edge list. Used where the bitset limit is too
/// small, which only happens for the construction identities at large a.
struct EdgeListGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline auto to_graph(const EdgeListGraph& e) -> Graph { return make_graph(e.n, e.edges); }

/// K_{2,a} with two pendant vertices on one vertex of the part of order two,
/// followed by k isolated vertices.
/// Labels: v1 = 0, v2 = 1, u1 = 2, u2 = 3, w_i = 3 + i. Pendants hang on v2.
inline auto construction_a_edges(int a, int k = 0) -> EdgeListGraph {
  if (a < 1 || k < 0)
    throw std::invalid_argument("construction A needs a >= 1");
  EdgeListGraph e{a + 4 + k, {}};
  for (int i = 0; i < a; ++i) {
    e.edges.emplace_back(0, 4 + i);
    e.edges.emplace_back(1, 4 + i);
  }
  e.edges.emplace_back(1, 2);
  e.edges.emplace_back(1, 3);
  return e;
}

/// K_{4,a} plus a vertex joined to two vertices of the part of order four,
/// followed by k isolated vertices.
/// Labels: v = 0, w = 1, y = 2, c = 3, d = 4, u_i = 4 + i. v is joined to c and d.
inline auto construction_b_edges(int a, int k = 0) -> EdgeListGraph {
  if (a < 1 || k < 0)
    throw std::invalid_argument("construction B needs a >= 1");
  EdgeListGraph e{a + 5 + k, {}};
  for (int side = 1; side <= 4; ++side)
    for (int i = 0; i < a; ++i)
      e.edges.emplace_back(side, 5 + i);
  e.edges.emplace_back(0, 3);
  e.edges.emplace_back(0, 4);
  return e;
}

inline auto gen_A_construction(int a) -> Graph { return to_graph(construction_a_edges(a)); }

inline auto gen_B_construction(int a) -> Graph { return to_graph(construction_b_edges(a)); }

/// C_4 (0-1-2-3) with pendant 4 on vertex 0 and pendant 5 on vertex 1.
inline auto gen_R() -> Graph {
  return make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
}

enum class BasicKind { empty, path, cycle, star, complete, complete_bipartite };

/// One entry point for the basic families; star(k) is K_{1,k} and
/// complete_bipartite takes (m, k). Other kinds take the order.
inline auto gen_basic(BasicKind kind, std::initializer_list<int> params) -> Graph {
  const std::vector<int> p(params);
  const std::size_t want = kind == BasicKind::complete_bipartite ? 2 : 1;
  if (p.size() != want)
    throw std::invalid_argument("wrong parameter count for graph family");
  for (int v : p)
    if (v < 0)
      throw std::invalid_argument("negative family parameter");
  switch (kind) {
  case BasicKind::empty: return empty_graph(p[0]);
  case BasicKind::path: return path_graph(p[0]);
  case BasicKind::cycle: return cycle_graph(p[0]);
  case BasicKind::star: return star_graph(p[0]);
  case BasicKind::complete: return complete_graph(p[0]);
  case BasicKind::complete_bipartite: return complete_bipartite(p[0], p[1]);
  }
  return {};
}

inline auto gen_double_star(int a, int b) -> Graph { return double_star(a, b); }

// ---------------------------------------------------------------------------
// Combinators.

inline auto disjoint_union(const Graph& g, const Graph& h) -> Graph {
  if (g.order() + h.order() > max_vertices)
    throw std::length_error("disjoint union exceeds 64 vertices");
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges())
    out.add_edge(u, v);
  for (auto [u, v] : h.edges())
    out.add_edge(g.order() + u, g.order() + v);
  return out;
}

/// g plus k isolated vertices.
inline auto add_isolated(const Graph& g, int k) -> Graph { return disjoint_union(g, empty_graph(k)); }

/// Induced subgraph on the vertices in keep, relabeled by ascending index.
inline auto induced_subgraph(const Graph& g, VertexSet keep) -> Graph {
  keep &= g.vertices();
  std::array<int, max_vertices> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(g.row(u) & keep & ~low_mask(u + 1), [&](int v) { out.add_edge(index[u], index[v]); });
  });
  return out;
}

inline auto delete_vertices(const Graph& g, VertexSet removed) -> Graph {
  return induced_subgraph(g, g.vertices() & ~removed);
}

/// Applies a vertex permutation: vertex v of g becomes perm[v].
inline auto relabel(const Graph& g, const std::vector<int>& perm) -> Graph {
  Graph out(g.order());
  for (auto [u, v] : g.edges())
    out.add_edge(perm[u], perm[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Structural queries.

inline auto components(const Graph& g) -> std::vector<VertexSet> {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (unseen) {
    VertexSet comp = bit(lowest(unseen));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

inline auto is_connected(const Graph& g) -> bool { return components(g).size() <= 1; }

struct Bipartition {
  VertexSet left = 0;
  VertexSet right = 0;
};

/// Two-coloring by BFS. The lowest vertex of each component goes left.
inline auto is_bipartite(const Graph& g) -> std::optional<Bipartition> {
  Bipartition parts;
  for (VertexSet comp : components(g)) {
    VertexSet side[2] = {bit(lowest(comp)), 0};
    VertexSet frontier = side[0];
    int colour = 0;
    while (frontier) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
      if (next & side[colour])
        return std::nullopt;
      colour ^= 1;
      frontier = next & ~side[colour];
      side[colour] |= next;
      if (side[0] & side[1])
        return std::nullopt;
    }
    parts.left |= side[0];
    parts.right |= side[1];
  }
  return parts;
}

inline constexpr int infinite_distance = std::numeric_limits<int>::max();

/// BFS eccentricities; infinite_distance when g is disconnected.
inline auto diameter(const Graph& g) -> int {
  if (!is_connected(g))
    return infinite_distance;
  int best = 0;
  for (int s = 0; s < g.order(); ++s) {
    VertexSet seen = bit(s);
    VertexSet frontier = seen;
    int depth = 0;
    while (true) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.row(v); });
      next &= ~seen;
      if (!next)
        break;
      seen |= next;
      frontier = next;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

/// Degrees sorted in non-increasing order.
inline auto degree_sequence(const Graph& g) -> std::vector<int> {
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace detail {

// Simple-path dynamic program over subsets of the k candidate vertices.
inline auto cycles_through_dp(const Graph& g, int v, const std::vector<int>& others)
    -> std::vector<std::pair<VertexSet, std::uint64_t>> {
  const int k = static_cast<int>(others.size());
  std::array<std::uint32_t, max_vertices> nbr{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (g.adjacent(others[i], others[j]))
        nbr[i] |= std::uint32_t{1} << j;
  const std::size_t full = std::size_t{1} << k;
  // paths[mask * k + j]: simple paths from v whose other vertices are exactly
  // mask (indices into others) and which end at others[j]
  std::vector<std::uint64_t> paths(full * k, 0);
  for (int j = 0; j < k; ++j)
    if (g.adjacent(v, others[j]))
      paths[(std::size_t{1} << j) * k + j] = 1;
  std::vector<std::uint64_t> closing(full, 0);
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (int j = 0; j < k; ++j) {
      const std::uint64_t count = paths[mask * k + j];
      if (!count)
        continue;
      if (std::popcount(mask) >= 2 && g.adjacent(v, others[j]))
        closing[mask] += count;
      std::uint32_t ext = nbr[j] & ~static_cast<std::uint32_t>(mask);
      while (ext) {
        const int t = std::countr_zero(ext);
        ext &= ext - 1;
        paths[(mask | (std::size_t{1} << t)) * k + t] += count;
      }
    }
  }
  std::vector<std::pair<VertexSet, std::uint64_t>> out;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!closing[mask])
      continue;
    VertexSet z = bit(v);
    for (int j = 0; j < k; ++j)
      if ((mask >> j) & 1U)
        z |= bit(others[j]);
    out.emplace_back(z, closing[mask] / 2);
  }
  return out;
}

// Depth-first path enumeration; cost proportional to the number of paths.
inline auto cycles_through_dfs(const Graph& g, int v, VertexSet within)
    -> std::vector<std::pair<VertexSet, std::uint64_t>> {
  std::unordered_map<VertexSet, std::uint64_t> found;
  std::function<void(int, VertexSet, int)> walk = [&](int end, VertexSet used, int length) {
    if (length >= 3 && g.adjacent(end, v))
      ++found[used];
    for_each_vertex(g.row(end) & within & ~used, [&](int next) { walk(next, used | bit(next), length + 1); });
  };
  walk(v, bit(v), 1);
  std::vector<std::pair<VertexSet, std::uint64_t>> out;
  for (auto [z, count] : found)
    out.emplace_back(z, count / 2);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace detail

inline constexpr int cycle_dp_max_candidates = 16;

/// For each vertex set Z containing v that is the vertex set of at least one
/// cycle through v (using only vertices in within), the number of such
/// cycles, sorted by Z. Small candidate sets use a subset dynamic program,
/// larger ones a depth-first path enumeration.
inline auto cycles_through(const Graph& g, int v, VertexSet within) -> std::vector<std::pair<VertexSet, std::uint64_t>> {
  within &= g.vertices() & ~bit(v);
  std::vector<int> others = members(within);
  if (others.size() < 2)
    return {};
  if (static_cast<int>(others.size()) <= cycle_dp_max_candidates)
    return detail::cycles_through_dp(g, v, others);
  return detail::cycles_through_dfs(g, v, within);
}

} // namespace cospec
