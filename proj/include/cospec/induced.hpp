#pragma once

// Induced-subgraph detection and the forbidden-pattern report used for
// graphs cospectral to P_2(1,n).

#include "graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace cospec {

namespace detail {

class InducedMatcher {
public:
  InducedMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    order_.resize(pattern.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    image_.assign(pattern.order(), -1);
  }

  auto run() -> std::optional<VertexSet> {
    if (pattern_.order() > host_.order())
      return std::nullopt;
    if (!extend(0, 0))
      return std::nullopt;
    VertexSet used = 0;
    for (int h : image_)
      used |= bit(h);
    return used;
  }

private:
  auto extend(int depth, VertexSet used) -> bool {
    if (depth == pattern_.order())
      return true;
    const int p = order_[depth];
    VertexSet candidates = host_.vertices() & ~used;
    // forced adjacency pattern against already mapped vertices
    for (int i = 0; i < depth; ++i) {
      const int q = order_[i];
      const VertexSet nbrs = host_.row(image_[q]);
      candidates &= pattern_.adjacent(p, q) ? nbrs : ~nbrs;
    }
    bool found = false;
    for_each_vertex(candidates, [&](int h) {
      if (found || host_.degree(h) < pattern_.degree(p))
        return;
      image_[p] = h;
      if (extend(depth + 1, used | bit(h)))
        found = true;
    });
    return found;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  std::vector<int> image_;
};

} // namespace detail

/// A vertex set of host inducing a copy of pattern, if one exists.
inline auto induced_contains(const Graph& host, const Graph& pattern) -> std::optional<VertexSet> {
  return detail::InducedMatcher(host, pattern).run();
}

enum class ForbiddenPattern { two_k2, r, double_star_2_2, p4_plus_k1, p5 };

inline constexpr std::array<ForbiddenPattern, 5> all_forbidden_patterns = {
    ForbiddenPattern::two_k2, ForbiddenPattern::r, ForbiddenPattern::double_star_2_2,
    ForbiddenPattern::p4_plus_k1, ForbiddenPattern::p5};

inline auto pattern_name(ForbiddenPattern p) -> std::string {
  switch (p) {
  case ForbiddenPattern::two_k2: return "2K2";
  case ForbiddenPattern::r: return "R";
  case ForbiddenPattern::double_star_2_2: return "P2(2,2)";
  case ForbiddenPattern::p4_plus_k1: return "P4+K1";
  case ForbiddenPattern::p5: return "P5";
  }
  return "?";
}

inline auto pattern_graph(ForbiddenPattern p) -> Graph {
  switch (p) {
  case ForbiddenPattern::two_k2: return disjoint_union(path_graph(2), path_graph(2));
  case ForbiddenPattern::r: return gen_R();
  case ForbiddenPattern::double_star_2_2: return double_star(2, 2);
  case ForbiddenPattern::p4_plus_k1: return add_isolated(path_graph(4), 1);
  case ForbiddenPattern::p5: return path_graph(5);
  }
  return {};
}

struct ForbiddenReport {
  std::array<std::optional<VertexSet>, all_forbidden_patterns.size()> witness;

  auto present(ForbiddenPattern p) const -> bool { return witness[static_cast<std::size_t>(p)].has_value(); }

  /// True when none of 2K2, R, P2(2,2) occurs.
  auto clears_core_patterns() const -> bool {
    return !present(ForbiddenPattern::two_k2) && !present(ForbiddenPattern::r) &&
           !present(ForbiddenPattern::double_star_2_2);
  }

  auto clear() const -> bool {
    return std::none_of(witness.begin(), witness.end(), [](const auto& w) { return w.has_value(); });
  }
};

inline auto forbidden_report(const Graph& g) -> ForbiddenReport {
  ForbiddenReport report;
  for (auto p : all_forbidden_patterns)
    report.witness[static_cast<std::size_t>(p)] = induced_contains(g, pattern_graph(p));
  return report;
}

} // namespace cospec
