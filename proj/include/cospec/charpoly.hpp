#pragma once

/**
 * Characteristic polynomials det(xI - A) of adjacency matrices.
 *
 * Three independent routes are provided and are expected to agree exactly:
 *
 *   charpoly_exact   - Faddeev-LeVerrier trace recursion; every division is
 *                      exact for integer matrices. Runs in checked 128-bit
 *                      arithmetic and falls back to big integers on overflow.
 *   charpoly_sachs   - signed sum over elementary subgraphs (components are
 *                      edges or cycles), organised as a subset recursion on
 *                      the lowest uncovered vertex.
 *   charpoly_schwenk - vertex-deletion recursion over the pivot's edges and
 *                      cycles, memoized on canonical forms.
 *
 * Closed forms for double stars live here as well.
 */

#include "canonical.hpp"
#include "graph.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cospec {

// ---------------------------------------------------------------------------
// Faddeev-LeVerrier.

namespace detail {

struct CheckedInt128 {
  using value_type = __int128;
  static auto add(value_type a, value_type b, value_type& out) -> bool { return !__builtin_add_overflow(a, b, &out); }
};

struct UncheckedBig {
  using value_type = BigInt;
  static auto add(const value_type& a, const value_type& b, value_type& out) -> bool {
    out = a + b;
    return true;
  }
};

inline auto to_big(__int128 v) -> BigInt {
  const bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? BigInt(-out) : out;
}

inline auto to_big(const BigInt& v) -> BigInt { return v; }

using AdjacencyLists = std::vector<std::vector<int>>;

inline auto adjacency_lists(const Graph& g) -> AdjacencyLists {
  AdjacencyLists adj(g.order());
  for (int v = 0; v < g.order(); ++v)
    adj[v] = members(g.row(v));
  return adj;
}

/// Returns coefficients c[0..n] (c[k] multiplies x^k), or nothing on overflow.
/// Each step multiplies by A through the neighbour lists, so the cost is
/// O(n^2 m) rather than O(n^4).
template <typename Ops>
auto faddeev_leverrier(const AdjacencyLists& adj) -> std::optional<std::vector<typename Ops::value_type>> {
  using T = typename Ops::value_type;
  const int n = static_cast<int>(adj.size());
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  if (n == 0)
    return c;
  const auto at = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };
  std::vector<T> m(static_cast<std::size_t>(n) * n, T(0));
  std::vector<T> am(static_cast<std::size_t>(n) * n, T(0));
  for (int k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        T sum(0);
        bool ok = true;
        for (int l : adj[i])
          ok = ok && Ops::add(sum, m[at(l, j)], sum);
        if (!ok)
          return std::nullopt;
        am[at(i, j)] = sum;
      }
    for (int i = 0; i < n; ++i)
      if (!Ops::add(am[at(i, i)], c[n - k + 1], am[at(i, i)]))
        return std::nullopt;
    std::swap(m, am);
    // c_{n-k} = -tr(A M_k) / k
    T trace(0);
    for (int i = 0; i < n; ++i) {
      bool ok = true;
      for (int l : adj[i])
        ok = ok && Ops::add(trace, m[at(l, i)], trace);
      if (!ok)
        return std::nullopt;
    }
    if (trace % T(k) != T(0))
      throw std::logic_error("inexact trace division");
    c[n - k] = -(trace / T(k));
  }
  return c;
}

template <typename Ops>
auto faddeev_leverrier(const Graph& g) -> std::optional<std::vector<typename Ops::value_type>> {
  return faddeev_leverrier<Ops>(adjacency_lists(g));
}

inline auto charpoly_lists(const AdjacencyLists& adj) -> IntPolynomial {
  std::vector<BigInt> out;
  if (auto fast = faddeev_leverrier<CheckedInt128>(adj)) {
    for (auto v : *fast)
      out.push_back(to_big(v));
  } else {
    out = *faddeev_leverrier<UncheckedBig>(adj);
  }
  return IntPolynomial(std::move(out));
}

} // namespace detail

inline auto charpoly_exact(const Graph& g) -> IntPolynomial { return detail::charpoly_lists(detail::adjacency_lists(g)); }

/// Same recursion for edge-list graphs of any order. Isolated vertices are
/// split off first, each contributing a factor x.
inline auto charpoly_exact(const EdgeListGraph& e) -> IntPolynomial {
  std::vector<int> degree(e.n, 0);
  for (auto [u, v] : e.edges) {
    if (u < 0 || v < 0 || u >= e.n || v >= e.n || u == v)
      throw std::invalid_argument("edge endpoint out of range");
    ++degree[u];
    ++degree[v];
  }
  std::vector<int> index(e.n, -1);
  int kept = 0;
  for (int v = 0; v < e.n; ++v)
    if (degree[v] > 0)
      index[v] = kept++;
  detail::AdjacencyLists adj(kept);
  for (auto [u, v] : e.edges) {
    adj[index[u]].push_back(index[v]);
    adj[index[v]].push_back(index[u]);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end())
      throw std::invalid_argument("repeated edge");
  }
  return detail::charpoly_lists(adj).shifted(e.n - kept);
}

// ---------------------------------------------------------------------------
// Sachs.

inline constexpr int sachs_max_vertices = 24;

namespace detail {

class SachsExpansion {
public:
  explicit SachsExpansion(const Graph& g) : g_(g), n_(g.order()), cycles_(n_) {
    for (int v = 0; v < n_; ++v)
      cycles_[v] = cycle_table(v);
  }

  /// coefficient index = number of covered vertices
  auto run() -> std::vector<__int128> { return solve(g_.vertices()); }

private:
  // Cycles whose minimum vertex is v, as a dense table indexed by the
  // higher vertices (z >> (v + 1)) when that is small, else as a list.
  struct CycleIndex {
    std::vector<std::uint64_t> dense;
    std::vector<std::pair<VertexSet, std::uint64_t>> sparse;
  };

  auto cycle_table(int v) const -> CycleIndex {
    CycleIndex index;
    auto list = cycles_through(g_, v, g_.vertices() & ~low_mask(v + 1));
    const int width = n_ - 1 - v;
    if (width <= dense_width) {
      index.dense.assign(std::size_t{1} << std::max(width, 0), 0);
      for (auto [z, count] : list)
        index.dense[z >> (v + 1)] = count;
    } else {
      index.sparse = std::move(list);
    }
    return index;
  }

  static constexpr int dense_width = 16;

  auto solve(VertexSet s) -> std::vector<__int128> {
    if (s == 0) {
      std::vector<__int128> unit(n_ + 1, 0);
      unit[0] = 1;
      return unit;
    }
    if (auto it = memo_.find(s); it != memo_.end())
      return it->second;
    const int v = lowest(s);
    const VertexSet rest = s & ~bit(v);
    // v uncovered
    std::vector<__int128> out = solve(rest);
    // v on a K2 component: one component, no cycle
    for_each_vertex(g_.row(v) & rest, [&](int u) {
      accumulate(out, solve(rest & ~bit(u)), 2, -1);
    });
    // v the minimum of a cycle component: sign -1, weight 2 per cycle
    const auto& index = cycles_[v];
    if (!index.dense.empty()) {
      const VertexSet high = rest >> (v + 1);
      for (VertexSet sub = high; sub; sub = (sub - 1) & high) {
        const std::uint64_t count = index.dense[sub];
        if (!count)
          continue;
        const VertexSet z = (sub << (v + 1)) | bit(v);
        accumulate(out, solve(s & ~z), popcount(z), -2 * static_cast<__int128>(count));
      }
    } else {
      for (auto [z, count] : index.sparse)
        if ((z & ~s) == 0)
          accumulate(out, solve(s & ~z), popcount(z), -2 * static_cast<__int128>(count));
    }
    memo_.emplace(s, out);
    return out;
  }

  static void accumulate(std::vector<__int128>& out, const std::vector<__int128>& inner, int covered,
                         __int128 weight) {
    for (std::size_t i = 0; i + covered < out.size(); ++i)
      out[i + covered] += weight * inner[i];
  }

  const Graph& g_;
  int n_;
  std::vector<CycleIndex> cycles_;
  std::unordered_map<VertexSet, std::vector<__int128>> memo_;
};

} // namespace detail

/// Each entry is bounded by the number of elementary subgraphs times 2^(n/3),
/// well inside 128 bits for n <= 24.
inline auto charpoly_sachs(const Graph& g) -> IntPolynomial {
  if (g.order() > sachs_max_vertices)
    throw std::length_error("Sachs expansion limited to 24 vertices");
  const int n = g.order();
  std::vector<__int128> a = detail::SachsExpansion(g).run();
  std::vector<BigInt> c(n + 1);
  for (int i = 0; i <= n; ++i)
    c[n - i] = detail::to_big(a[i]);
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Schwenk.

using PivotRule = std::function<int(const Graph&)>;

namespace pivot {

/// Highest degree, lowest index among ties.
inline auto max_degree(const Graph& g) -> int {
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(best))
      best = v;
  return best;
}

/// Lowest positive degree, lowest index among ties.
inline auto min_degree(const Graph& g) -> int {
  int best = -1;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0 && (best < 0 || g.degree(v) < g.degree(best)))
      best = v;
  return best < 0 ? 0 : best;
}

inline auto lowest_index(const Graph& g) -> int {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0)
      return v;
  return 0;
}

} // namespace pivot

enum class SchwenkTerm { vertex, edge, cycle };

/// The first expansion step: which vertex sets were deleted and why.
struct SchwenkTrace {
  int root_vertex = -1;
  struct Subcall {
    VertexSet deleted = 0;
    SchwenkTerm term = SchwenkTerm::vertex;
    std::uint64_t multiplicity = 1;
  };
  std::vector<Subcall> subcalls;
  std::size_t memo_hits = 0;
};

/// Shared cache of polynomials by isomorphism class; safe across threads.
class SchwenkMemo {
public:
  auto find(const CanonicalForm& key) const -> std::optional<IntPolynomial> {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }

  void insert(const CanonicalForm& key, const IntPolynomial& value) {
    std::unique_lock lock(mutex_);
    table_.try_emplace(key, value);
  }

  auto size() const -> std::size_t {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalForm, IntPolynomial, CanonicalFormHash> table_;
};

namespace detail {

class SchwenkExpansion {
public:
  SchwenkExpansion(const PivotRule& rule, SchwenkMemo& memo, SchwenkTrace* trace)
      : rule_(rule), memo_(memo), trace_(trace) {}

  auto run(const Graph& g) -> IntPolynomial { return expand(g, true); }

private:
  auto expand(const Graph& g, bool top) -> IntPolynomial {
    const int n = g.order();
    if (n == 0)
      return IntPolynomial{1};
    if (g.edge_count() == 0)
      return IntPolynomial::monomial(n);
    // an isolated vertex contributes x * phi(G - v) with no other terms
    if (const VertexSet iso = g.isolated(); iso && !top)
      return expand(delete_vertices(g, iso), false).shifted(popcount(iso));

    std::optional<CanonicalForm> key;
    if (!top) {
      key = canonical_form(g);
      if (auto hit = memo_.find(*key)) {
        ++hits_;
        return *hit;
      }
    }

    const int v = rule_(g);
    auto record = [&](VertexSet deleted, SchwenkTerm term, std::uint64_t mult) {
      if (top && trace_)
        trace_->subcalls.push_back({deleted, term, mult});
    };

    record(bit(v), SchwenkTerm::vertex, 1);
    IntPolynomial result = expand(delete_vertices(g, bit(v)), false).shifted(1);
    for_each_vertex(g.row(v), [&](int u) {
      record(bit(v) | bit(u), SchwenkTerm::edge, 1);
      result = result - expand(delete_vertices(g, bit(v) | bit(u)), false);
    });
    for (auto [z, count] : cycles_through(g, v, g.vertices())) {
      record(z, SchwenkTerm::cycle, count);
      result = result - expand(delete_vertices(g, z), false).scaled(BigInt(2) * count);
    }

    if (top && trace_) {
      trace_->root_vertex = v;
      trace_->memo_hits = hits_;
    }
    if (key)
      memo_.insert(*key, result);
    return result;
  }

  const PivotRule& rule_;
  SchwenkMemo& memo_;
  SchwenkTrace* trace_;
  std::size_t hits_ = 0;
};

} // namespace detail

inline auto charpoly_schwenk(const Graph& g, const PivotRule& rule, SchwenkMemo& memo,
                             SchwenkTrace* trace = nullptr) -> IntPolynomial {
  if (trace)
    *trace = SchwenkTrace{};
  return detail::SchwenkExpansion(rule, memo, trace).run(g);
}

inline auto charpoly_schwenk(const Graph& g, const PivotRule& rule = pivot::max_degree,
                             SchwenkTrace* trace = nullptr) -> IntPolynomial {
  SchwenkMemo memo;
  return charpoly_schwenk(g, rule, memo, trace);
}

// ---------------------------------------------------------------------------
// Double stars and related closed forms.

/// x^{a+b+2} - (a+b+1) x^{a+b} + ab x^{a+b-2}; tiny cases computed directly.
inline auto double_star_charpoly(int a, int b) -> IntPolynomial {
  if (a < 0 || b < 0)
    throw std::invalid_argument("negative leaf count");
  if (a + b < 2)
    return charpoly_exact(double_star(a, b));
  const int s = a + b;
  return IntPolynomial::monomial(s + 2) - IntPolynomial::monomial(s, s + 1) +
         IntPolynomial::monomial(s - 2, BigInt(a) * b);
}

struct ExtremeEigenvalues {
  double largest = 0;
  double second = 0;
};

/// The two largest eigenvalues of P_2(a,b). The second uses
/// (s - sqrt(D)) / 2 = 2ab / (s + sqrt(D)) to avoid cancellation.
inline auto double_star_extreme_eigs(int a, int b) -> ExtremeEigenvalues {
  if (a < 0 || b < 0 || a + b < 1)
    throw std::invalid_argument("double star needs a + b >= 1");
  const double s = a + b + 1.0;
  const double diff = static_cast<double>(a) - b;
  const double root = std::sqrt(diff * diff + 2.0 * (a + b) + 1.0);
  const double product = static_cast<double>(a) * b;
  return {std::sqrt((s + root) / 2.0), std::sqrt(2.0 * product / (s + root))};
}

/// Pairs of vertex-disjoint edges whose four endpoints do not induce C4.
inline auto count_non_c4_two_matchings(const Graph& g) -> std::uint64_t {
  const auto edges = g.edges();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d)
        continue;
      const bool ac = g.adjacent(a, c), ad = g.adjacent(a, d);
      const bool bc = g.adjacent(b, c), bd = g.adjacent(b, d);
      const bool c4 = (ac && bd && !ad && !bc) || (ad && bc && !ac && !bd);
      if (!c4)
        ++count;
    }
  }
  return count;
}

inline constexpr double interlacing_slack = 1e-7;

/// Checks lambda_i(G) >= theta_i(G - S) >= lambda_{n-m+i}(G) on numeric spectra.
inline auto interlacing_check(const Graph& g, VertexSet removed) -> bool {
  removed &= g.vertices();
  if (removed == 0 || removed == g.vertices())
    throw std::invalid_argument("interlacing needs a nonempty proper subset");
  auto lambda = numeric_roots(charpoly_exact(g));
  auto theta = numeric_roots(charpoly_exact(delete_vertices(g, removed)));
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  std::sort(theta.begin(), theta.end(), std::greater<>());
  const std::size_t n = lambda.size(), m = theta.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (lambda[i] + interlacing_slack < theta[i])
      return false;
    if (theta[i] + interlacing_slack < lambda[n - m + i])
      return false;
  }
  return true;
}

} // namespace cospec
