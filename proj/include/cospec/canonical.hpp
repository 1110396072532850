#pragma once

/**
 * Canonical labeling by colour refinement and individualization.
 *
 * The search tree is the usual one: refine the ordered colouring to an
 * equitable one, branch on every vertex of the first non-singleton cell,
 * and keep the leaf whose relabeled adjacency rows are lexicographically
 * smallest. Two pruning rules keep symmetric graphs cheap; both only skip
 * subtrees that are images of explored ones under an automorphism fixing
 * the current path, so the minimum is unchanged:
 *
 *   - twins (vertices with equal neighborhoods apart from each other) in
 *     the target cell are explored once;
 *   - automorphisms discovered at equal leaves are kept, and a child is
 *     skipped when it shares an orbit with an explored sibling under the
 *     ones that fix the path pointwise.
 */

#include "graph.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace cospec {

/// Packed upper triangle of the canonically relabeled adjacency matrix.
/// Equal forms mean isomorphic graphs.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint8_t> code;

  friend auto operator==(const CanonicalForm&, const CanonicalForm&) -> bool = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  auto operator()(const CanonicalForm& f) const noexcept -> std::size_t {
    std::size_t h = static_cast<std::size_t>(f.n) * 0x9E3779B97F4A7C15ULL;
    for (std::uint8_t b : f.code)
      h = (h ^ b) * 0x100000001B3ULL;
    return h;
  }
};

/// Bits in column order (0,1),(0,2),(1,2),(0,3),... packed six per byte,
/// most significant first, zero padded. This is the graph6 body without
/// the +63 offset.
inline auto pack_upper_triangle(const Graph& g) -> std::vector<std::uint8_t> {
  const int n = g.order();
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<std::uint8_t> out((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.adjacent(i, j))
        out[k / 6] |= static_cast<std::uint8_t>(1U << (5 - k % 6));
  return out;
}

struct CanonicalLabeling {
  /// position[v] is the canonical index of vertex v.
  std::vector<int> position;
  CanonicalForm form;
  /// Automorphisms met during the search (vertex maps), not necessarily a
  /// full generating set.
  std::vector<std::vector<int>> automorphisms;
};

namespace detail {

class Canonizer {
public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  auto run() -> CanonicalLabeling {
    std::vector<int> colour(n_, 0);
    refine(colour);
    std::vector<int> path;
    search(colour, path);
    CanonicalLabeling out;
    out.position = best_colour_;
    out.form.n = n_;
    out.form.code = pack_upper_triangle(relabel(g_, best_colour_));
    out.automorphisms = std::move(automorphisms_);
    return out;
  }

private:
  static auto cell_count(const std::vector<int>& colour) -> int {
    return colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
  }

  // Iterated colour refinement. New colours are ranks of the signature
  // (old colour, neighbour counts per colour), so the result is a
  // refinement of the input and commutes with relabeling.
  void refine(std::vector<int>& colour) const {
    if (n_ == 0)
      return;
    int cells = cell_count(colour);
    std::vector<int> sig(static_cast<std::size_t>(n_) * (n_ + 1));
    std::vector<int> order(n_);
    while (cells < n_) {
      const int width = cells + 1;
      for (int v = 0; v < n_; ++v) {
        int* s = &sig[static_cast<std::size_t>(v) * width];
        std::fill(s, s + width, 0);
        s[0] = colour[v];
        for_each_vertex(g_.row(v), [&](int u) { ++s[1 + colour[u]]; });
      }
      std::iota(order.begin(), order.end(), 0);
      auto less = [&](int a, int b) {
        const int* sa = &sig[static_cast<std::size_t>(a) * width];
        const int* sb = &sig[static_cast<std::size_t>(b) * width];
        return std::lexicographical_compare(sa, sa + width, sb, sb + width);
      };
      std::sort(order.begin(), order.end(), less);
      int next = 0;
      colour[order[0]] = 0;
      for (int i = 1; i < n_; ++i) {
        if (less(order[i - 1], order[i]))
          ++next;
        colour[order[i]] = next;
      }
      if (next + 1 == cells)
        break;
      cells = next + 1;
    }
  }

  auto twins(int u, int w) const -> bool { return (g_.row(u) & ~bit(w)) == (g_.row(w) & ~bit(u)); }

  void leaf(const std::vector<int>& colour) {
    std::vector<VertexSet> rows(n_, 0);
    for (int v = 0; v < n_; ++v)
      for_each_vertex(g_.row(v), [&](int u) { rows[colour[v]] |= bit(colour[u]); });
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_colour_ = colour;
      return;
    }
    if (rows == best_rows_) {
      // maps the best leaf's labeling onto this one
      std::vector<int> inverse(n_);
      for (int v = 0; v < n_; ++v)
        inverse[colour[v]] = v;
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v)
        gamma[v] = inverse[best_colour_[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  auto find(std::vector<int>& parent, int v) const -> int {
    while (parent[v] != v)
      v = parent[v] = parent[parent[v]];
    return v;
  }

  void search(const std::vector<int>& colour, std::vector<int>& path) {
    const int cells = cell_count(colour);
    if (cells == n_) {
      leaf(colour);
      return;
    }
    std::vector<int> size(cells, 0);
    for (int c : colour)
      ++size[c];
    int target = 0;
    while (size[target] == 1)
      ++target;
    std::vector<int> cell;
    for (int v = 0; v < n_; ++v)
      if (colour[v] == target)
        cell.push_back(v);

    std::vector<int> explored;
    for (int w : cell) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](int e) { return twins(e, w); });
      if (!skip && !explored.empty() && !automorphisms_.empty()) {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
          bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return gamma[p] == p; });
          if (!fixes)
            continue;
          for (int v = 0; v < n_; ++v)
            parent[find(parent, v)] = find(parent, gamma[v]);
        }
        int root = find(parent, w);
        skip = std::any_of(explored.begin(), explored.end(), [&](int e) { return find(parent, e) == root; });
      }
      if (skip)
        continue;
      std::vector<int> child = colour;
      for (int v = 0; v < n_; ++v)
        if (child[v] > target || (child[v] == target && v != w))
          ++child[v];
      refine(child);
      path.push_back(w);
      search(child, path);
      path.pop_back();
      explored.push_back(w);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<VertexSet> best_rows_;
  std::vector<int> best_colour_;
  std::vector<std::vector<int>> automorphisms_;
};

} // namespace detail

inline auto canonical_labeling(const Graph& g) -> CanonicalLabeling { return detail::Canonizer(g).run(); }

inline auto canonical_form(const Graph& g) -> CanonicalForm { return canonical_labeling(g).form; }

/// The canonically relabeled copy of g.
inline auto canonical_graph(const Graph& g) -> Graph { return relabel(g, canonical_labeling(g).position); }

inline auto is_isomorphic(const Graph& a, const Graph& b) -> bool {
  if (a.order() != b.order() || a.edge_count() != b.edge_count())
    return false;
  if (degree_sequence(a) != degree_sequence(b))
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace cospec
