#pragma once

/**
 * Isomorph-free exhaustive generation and the cospectral-mate search built
 * on it, plus the A/B/C/D decomposition used to classify mates of P_2(1,n).
 *
 * Generation adds one edge at a time to a graph on a fixed vertex set. A
 * child G' = G + e is accepted when deleting the canonical last edge of G'
 * (the edge whose endpoints sit highest in G''s canonical order) gives a
 * graph isomorphic to G; children of one parent are deduplicated by
 * canonical form. Every class then has exactly one accepted construction
 * path, so each class is visited once.
 */

#include "canonical.hpp"
#include "charpoly.hpp"
#include "graph.hpp"
#include "induced.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cospec {

inline constexpr int exhaustive_max_vertices = 16;

struct EnumSpec {
  int n = 0;
  /// Exact edge count; when absent every edge count is visited.
  std::optional<int> edges;
  bool bipartite_only = false;
  bool connected_only = false;
  std::optional<int> max_degree;
};

inline void validate(const EnumSpec& spec) {
  if (spec.n < 0 || spec.n > exhaustive_max_vertices)
    throw std::length_error("exhaustive enumeration limited to 16 vertices");
  const int most = spec.n * (spec.n - 1) / 2;
  if (spec.edges && (*spec.edges < 0 || *spec.edges > most))
    throw std::length_error("edge count " + std::to_string(*spec.edges) + " impossible on " +
                            std::to_string(spec.n) + " vertices");
}

namespace detail {

struct GenNode {
  Graph graph;
  CanonicalForm form;
};

class OrderlyGenerator {
public:
  explicit OrderlyGenerator(const EnumSpec& spec) : spec_(spec) {
    validate(spec);
    const int most = spec.n * (spec.n - 1) / 2;
    target_edges_ = spec.edges.value_or(most);
  }

  auto root() const -> GenNode {
    Graph g(spec_.n);
    return {g, canonical_form(g)};
  }

  auto wants(const GenNode& node) const -> bool {
    const int m = node.graph.edge_count();
    if (spec_.edges && m != *spec_.edges)
      return false;
    if (spec_.connected_only && !is_connected(node.graph))
      return false;
    return true;
  }

  auto is_final_level(const GenNode& node) const -> bool { return node.graph.edge_count() >= target_edges_; }

  auto children(const GenNode& node) const -> std::vector<GenNode> {
    std::vector<GenNode> out;
    if (is_final_level(node))
      return out;
    const Graph& g = node.graph;
    const int n = g.order();
    std::array<int, max_vertices> comp{};
    std::array<int, max_vertices> side{};
    if (spec_.bipartite_only) {
      int id = 0;
      for (VertexSet c : components(g)) {
        for_each_vertex(c, [&](int v) { comp[v] = id; });
        ++id;
      }
      auto parts = is_bipartite(g);
      for_each_vertex(parts->right, [&](int v) { side[v] = 1; });
    }
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (g.adjacent(i, j))
          continue;
        if (spec_.bipartite_only && comp[i] == comp[j] && side[i] == side[j])
          continue;
        if (spec_.max_degree && (g.degree(i) >= *spec_.max_degree || g.degree(j) >= *spec_.max_degree))
          continue;
        Graph child = g;
        child.add_edge(i, j);
        CanonicalLabeling lab = canonical_labeling(child);
        if (seen.count(lab.form))
          continue;
        if (!accepts(child, lab, i, j, node.form))
          continue;
        seen.insert(lab.form);
        out.push_back({child, std::move(lab.form)});
      }
    }
    return out;
  }

private:
  static auto accepts(const Graph& child, const CanonicalLabeling& lab, int i, int j, const CanonicalForm& parent)
      -> bool {
    // canonical last edge: lexicographically largest (high, low) position pair
    std::pair<int, int> best{-1, -1};
    std::pair<int, int> best_edge{-1, -1};
    for (auto [u, v] : child.edges()) {
      std::pair<int, int> key{std::max(lab.position[u], lab.position[v]), std::min(lab.position[u], lab.position[v])};
      if (key > best) {
        best = key;
        best_edge = {u, v};
      }
    }
    if (best_edge == std::pair{i, j} || best_edge == std::pair{j, i})
      return true;
    Graph reduced = child;
    reduced.remove_edge(best_edge.first, best_edge.second);
    return canonical_form(reduced) == parent;
  }

  EnumSpec spec_;
  int target_edges_ = 0;
};

template <typename Visit>
void depth_first(const OrderlyGenerator& gen, const GenNode& node, Visit& visit, std::uint64_t& count) {
  if (gen.wants(node)) {
    ++count;
    visit(node.graph, node.form);
  }
  for (const auto& child : gen.children(node))
    depth_first(gen, child, visit, count);
}

} // namespace detail

/// Visits one representative per isomorphism class meeting spec, in a fixed
/// depth-first order. visit(graph, canonical_form). Returns the visit count.
template <typename Visit>
auto enumerate_graphs(const EnumSpec& spec, Visit&& visit) -> std::uint64_t {
  detail::OrderlyGenerator gen(spec);
  std::uint64_t count = 0;
  detail::depth_first(gen, gen.root(), visit, count);
  return count;
}

template <typename T>
struct ParallelResult {
  std::vector<T> selected;
  std::uint64_t visited = 0;
};

/// Runs select(graph, form) -> optional<T> over every class meeting spec with
/// the given number of worker threads. Subtrees below a shallow frontier are
/// the work units; results are concatenated in unit order, so the output is
/// the same for every worker count. select must be safe to call concurrently.
template <typename T, typename Select>
auto enumerate_parallel(const EnumSpec& spec, int workers, Select select) -> ParallelResult<T> {
  detail::OrderlyGenerator gen(spec);
  workers = std::max(workers, 1);
  ParallelResult<T> result;

  auto take = [&](const detail::GenNode& node, std::vector<T>& sink, std::uint64_t& visited) {
    if (!gen.wants(node))
      return;
    ++visited;
    if (auto value = select(node.graph, node.form))
      sink.push_back(std::move(*value));
  };

  // Fixed frontier depth so that the split, and hence the output order, does
  // not depend on the worker count.
  constexpr std::size_t frontier_target = 64;
  std::vector<detail::GenNode> frontier{gen.root()};
  while (frontier.size() < frontier_target) {
    std::vector<detail::GenNode> next;
    bool grew = false;
    for (const auto& node : frontier) {
      auto kids = gen.children(node);
      if (!kids.empty())
        grew = true;
      take(node, result.selected, result.visited);
      for (auto& k : kids)
        next.push_back(std::move(k));
    }
    frontier = std::move(next);
    if (!grew || frontier.empty())
      break;
  }

  std::vector<std::vector<T>> unit_results(frontier.size());
  std::vector<std::uint64_t> unit_visits(frontier.size(), 0);
  std::atomic<std::size_t> next_unit{0};
  auto work = [&] {
    for (std::size_t u = next_unit++; u < frontier.size(); u = next_unit++) {
      std::vector<T>& sink = unit_results[u];
      auto collect = [&](const Graph& g, const CanonicalForm& f) {
        if (auto value = select(g, f))
          sink.push_back(std::move(*value));
      };
      detail::depth_first(gen, frontier[u], collect, unit_visits[u]);
    }
  };
  if (workers == 1 || frontier.size() <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(work);
    for (auto& t : pool)
      t.join();
  }
  for (std::size_t u = 0; u < frontier.size(); ++u) {
    result.visited += unit_visits[u];
    for (auto& v : unit_results[u])
      result.selected.push_back(std::move(v));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Structure of mates of P_2(1,n).

struct AbcdPartition {
  VertexSet a = 0, b = 0, c = 0, d = 0;
  /// Induced path u-x-v-y with u in A, x in B, v in C, y in D.
  std::array<int, 4> path{};

  auto sizes() const -> std::array<int, 4> { return {popcount(a), popcount(b), popcount(c), popcount(d)}; }
};

namespace detail {

inline auto complete_between(const Graph& g, VertexSet s, VertexSet t) -> bool {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (g.row(v) & t) == t; });
  return ok;
}

inline auto no_edges_between(const Graph& g, VertexSet s, VertexSet t) -> bool {
  bool ok = true;
  for_each_vertex(s, [&](int v) { ok = ok && (g.row(v) & t) == 0; });
  return ok;
}

inline auto try_anchor(const Graph& g, int u, int x, int v, int y) -> std::optional<AbcdPartition> {
  AbcdPartition p;
  p.path = {u, x, v, y};
  const VertexSet on_path = bit(u) | bit(x) | bit(v) | bit(y);
  bool ok = true;
  for_each_vertex(g.vertices() & ~g.isolated(), [&](int w) {
    const VertexSet seen = g.row(w) & on_path;
    if (seen == bit(x))
      p.a |= bit(w);
    else if (seen == (bit(u) | bit(v)))
      p.b |= bit(w);
    else if (seen == (bit(x) | bit(y)))
      p.c |= bit(w);
    else if (seen == bit(v))
      p.d |= bit(w);
    else
      ok = false;
  });
  if (!ok)
    return std::nullopt;
  const VertexSet sets[4] = {p.a, p.b, p.c, p.d};
  for (VertexSet s : sets)
    if (!no_edges_between(g, s, s))
      return std::nullopt;
  if (!complete_between(g, p.a, p.b) || !complete_between(g, p.b, p.c) || !complete_between(g, p.c, p.d))
    return std::nullopt;
  if (!no_edges_between(g, p.a, p.c) || !no_edges_between(g, p.a, p.d) || !no_edges_between(g, p.b, p.d))
    return std::nullopt;
  return p;
}

inline auto reversed(const AbcdPartition& p) -> AbcdPartition {
  AbcdPartition r;
  r.a = p.d;
  r.b = p.c;
  r.c = p.b;
  r.d = p.a;
  r.path = {p.path[3], p.path[2], p.path[1], p.path[0]};
  return r;
}

} // namespace detail

/// Tries every induced P4 u-x-v-y in a fixed order and returns the first
/// anchor whose neighbourhood classes form a valid partition, oriented so
/// that |A| <= |D| (and |B| <= |C| on ties).
inline auto abcd_decompose(const Graph& g) -> std::optional<AbcdPartition> {
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int v : members(g.row(x))) {
      const VertexSet left = g.row(x) & ~g.row(v) & ~bit(v);
      const VertexSet right = g.row(v) & ~g.row(x) & ~bit(x);
      for (int u : members(left)) {
        for (int y : members(right & ~g.row(u) & ~bit(u))) {
          auto p = detail::try_anchor(g, u, x, v, y);
          if (!p)
            continue;
          auto s = p->sizes();
          if (s[0] > s[3] || (s[0] == s[3] && s[1] > s[2]))
            return detail::reversed(*p);
          return p;
        }
      }
    }
  }
  return std::nullopt;
}

/// x^N - (ab + bc + cd) x^{N-2} + abcd x^{N-4}, N = a + b + c + d.
inline auto gprime_charpoly_formula(int a, int b, int c, int d) -> IntPolynomial {
  if (a < 1 || b < 1 || c < 1 || d < 1)
    throw std::invalid_argument("all four part sizes must be positive");
  const int total = a + b + c + d;
  return IntPolynomial::monomial(total) - IntPolynomial::monomial(total - 2, BigInt(a) * b + BigInt(b) * c + BigInt(c) * d) +
         IntPolynomial::monomial(total - 4, BigInt(a) * b * c * d);
}

enum class MateClass { double_star, form_i, form_ii, unknown, unclassified };

inline auto to_string(MateClass c) -> std::string {
  switch (c) {
  case MateClass::double_star: return "DOUBLE_STAR";
  case MateClass::form_i: return "FORM_I";
  case MateClass::form_ii: return "FORM_II";
  case MateClass::unknown: return "UNKNOWN";
  case MateClass::unclassified: return "UNCLASSIFIED";
  }
  return "?";
}

struct DecompositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps the A/B/C/D sizes of a graph cospectral to P_2(1,n) onto the known
/// shapes: (1,1,1,n), (1,b,1,2) with n = 2b, (1,2,c,2) with n = 4c.
inline auto classify_mate(const Graph& g, int n) -> MateClass {
  auto p = abcd_decompose(g);
  if (!p)
    throw DecompositionError("no valid A/B/C/D partition");
  const auto [a, b, c, d] = p->sizes();
  if (a == 1 && b == 1 && c == 1 && d == n)
    return MateClass::double_star;
  if (a == 1 && c == 1 && d == 2 && 2 * b == n)
    return MateClass::form_i;
  if (a == 1 && b == 2 && d == 2 && 4 * c == n)
    return MateClass::form_ii;
  return MateClass::unknown;
}

/// K_{x,y} + (x-1)(y-1) K_1, cospectral with K_{1,xy}.
inline auto star_mate(int x, int y) -> Graph {
  if (x < 1 || y < 1)
    throw std::invalid_argument("star mate needs x, y >= 1");
  return add_isolated(complete_bipartite(x, y), (x - 1) * (y - 1));
}

// ---------------------------------------------------------------------------
// Mate search.

struct Mate {
  CanonicalForm form;
  Graph graph;
  MateClass classification = MateClass::unclassified;
};

struct MateReport {
  Graph target;
  IntPolynomial target_poly;
  std::vector<Mate> mates;
  bool exhaustive = true;
  EnumSpec scope;
  std::uint64_t candidates_visited = 0;

  auto determined_by_spectrum() const -> bool { return mates.empty(); }
};

/// When target is isomorphic to P_2(1,k), returns k.
inline auto as_one_leaf_double_star(const Graph& target) -> std::optional<int> {
  const int k = target.order() - 3;
  if (k < 1 || target.edge_count() != k + 2)
    return std::nullopt;
  if (!is_isomorphic(target, double_star(1, k)))
    return std::nullopt;
  return k;
}

inline auto cospectral_mates(const Graph& target, int workers = 1) -> MateReport {
  if (target.order() > exhaustive_max_vertices)
    throw std::length_error("mate search limited to 16 vertices");
  MateReport report;
  report.target = target;
  report.target_poly = charpoly_exact(target);
  const bool bipartite = is_bipartite(target).has_value();
  report.scope.n = target.order();
  report.scope.edges = target.edge_count();
  report.scope.bipartite_only = bipartite;
  const CanonicalForm own = canonical_form(target);
  const std::optional<int> one_leaf = as_one_leaf_double_star(target);

  auto select = [&](const Graph& g, const CanonicalForm& form) -> std::optional<Mate> {
    if (!bipartite && is_bipartite(g))
      return std::nullopt;
    if (form == own)
      return std::nullopt;
    if (charpoly_exact(g) != report.target_poly)
      return std::nullopt;
    Mate m{form, g, MateClass::unclassified};
    if (one_leaf && *one_leaf >= 3)
      m.classification = classify_mate(g, *one_leaf);
    return m;
  };
  auto found = enumerate_parallel<Mate>(report.scope, workers, select);
  report.mates = std::move(found.selected);
  report.candidates_visited = found.visited;
  std::sort(report.mates.begin(), report.mates.end(), [](const Mate& x, const Mate& y) { return x.form < y.form; });
  return report;
}

struct DsVerdict {
  bool ds = false;
  MateReport report;
};

inline auto ds_verdict(const Graph& target, int workers = 1) -> DsVerdict {
  DsVerdict v;
  v.report = cospectral_mates(target, workers);
  v.ds = v.report.determined_by_spectrum();
  return v;
}

} // namespace cospec
