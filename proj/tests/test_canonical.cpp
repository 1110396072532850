#include <cospec/canonical.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <unordered_set>

using namespace cospec;
using cospec::testing::random_graph;
using cospec::testing::random_permutation;

namespace {

auto petersen() -> Graph {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

auto hypercube(int d) -> Graph {
  Graph g(1 << d);
  for (int v = 0; v < (1 << d); ++v)
    for (int k = 0; k < d; ++k)
      if (v < (v ^ (1 << k)))
        g.add_edge(v, v ^ (1 << k));
  return g;
}

auto rook_4x4() -> Graph {
  Graph g(16);
  for (int u = 0; u < 16; ++u)
    for (int v = u + 1; v < 16; ++v)
      if (u / 4 == v / 4 || u % 4 == v % 4)
        g.add_edge(u, v);
  return g;
}

// Cayley graph on Z4 x Z4 with connection set +-(1,0), +-(0,1), +-(1,1)
auto shrikhande() -> Graph {
  Graph g(16);
  const int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (const auto& s : steps) {
        const int u = 4 * x + y;
        const int v = 4 * ((x + s[0]) % 4) + (y + s[1]) % 4;
        if (!g.adjacent(u, v))
          g.add_edge(u, v);
      }
  return g;
}

auto paley(int q) -> Graph {
  std::set<int> squares;
  for (int i = 1; i < q; ++i)
    squares.insert(i * i % q);
  Graph g(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (squares.count((v - u) % q))
        g.add_edge(u, v);
  return g;
}

auto symmetric_fixtures() -> std::vector<Graph> {
  return {
      Graph(0),
      Graph(1),
      Graph(7),
      complete_graph(9),
      cycle_graph(12),
      disjoint_union(cycle_graph(6), cycle_graph(6)),
      disjoint_union(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6)),
      complete_bipartite(5, 6),
      petersen(),
      hypercube(4),
      rook_4x4(),
      shrikhande(),
      paley(13),
      paley(17),
      star_graph(20),
      double_star(7, 7),
      add_isolated(complete_bipartite(3, 3), 4),
  };
}

} // namespace

TEST(Canonical, PackUsesColumnOrder) {
  // K3: bits (0,1),(0,2),(1,2) = 111000
  EXPECT_EQ(pack_upper_triangle(complete_graph(3)), (std::vector<std::uint8_t>{56}));
  EXPECT_TRUE(pack_upper_triangle(Graph(1)).empty());
}

TEST(Canonical, FormIsInvariantUnderRelabeling) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 20;
    const Graph g = random_graph(rng, n, 0.1 + 0.1 * (trial % 8));
    const CanonicalForm f = canonical_form(g);
    for (int k = 0; k < 3; ++k)
      ASSERT_EQ(canonical_form(relabel(g, random_permutation(rng, n))), f) << trial;
  }
}

TEST(Canonical, SymmetricGraphsAreHandled) {
  std::mt19937_64 rng(61);
  for (const Graph& g : symmetric_fixtures()) {
    const CanonicalForm f = canonical_form(g);
    for (int k = 0; k < 5; ++k)
      ASSERT_EQ(canonical_form(relabel(g, random_permutation(rng, g.order()))), f);
  }
}

TEST(Canonical, DistinguishesRefinementEquivalentGraphs) {
  // both strongly regular (16,6,2,2); colour refinement alone cannot split them
  EXPECT_FALSE(is_isomorphic(rook_4x4(), shrikhande()));
  EXPECT_NE(canonical_form(rook_4x4()), canonical_form(shrikhande()));
  EXPECT_FALSE(is_isomorphic(disjoint_union(cycle_graph(3), cycle_graph(3)), cycle_graph(6)));
}

TEST(Canonical, LabelingProducesTheForm) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 2 + trial % 15, 0.3);
    const CanonicalLabeling lab = canonical_labeling(g);
    std::vector<int> sorted = lab.position;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.order(); ++i)
      ASSERT_EQ(sorted[i], i);
    ASSERT_EQ(pack_upper_triangle(relabel(g, lab.position)), lab.form.code);
    ASSERT_EQ(canonical_graph(g), relabel(g, lab.position));
  }
}

TEST(Canonical, ReportedAutomorphismsPreserveAdjacency) {
  for (const Graph& g : symmetric_fixtures()) {
    for (const auto& perm : canonical_labeling(g).automorphisms)
      ASSERT_EQ(relabel(g, perm), g);
  }
}

TEST(Canonical, FormsMatchBruteForceOnAllSmallGraphs) {
  // exhaustive over labeled graphs on six vertices
  const int n = 6;
  const int pairs = n * (n - 1) / 2;
  std::unordered_map<std::uint64_t, CanonicalForm> by_brute;
  std::set<CanonicalForm> forms;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = cospec::testing::graph_from_mask(n, mask);
    const std::uint64_t brute = cospec::testing::brute_canonical_mask(g);
    const CanonicalForm f = canonical_form(g);
    auto [it, fresh] = by_brute.try_emplace(brute, f);
    ASSERT_EQ(it->second, f) << mask;
    forms.insert(f);
  }
  EXPECT_EQ(by_brute.size(), 156U);
  EXPECT_EQ(forms.size(), 156U);
}

TEST(Canonical, IsIsomorphicMatchesBruteForce) {
  std::mt19937_64 rng(71);
  int positive = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + trial % 7;
    const Graph a = random_graph(rng, n, 0.5);
    const Graph b = trial % 3 ? random_graph(rng, n, 0.5) : relabel(a, random_permutation(rng, n));
    const bool expected = cospec::testing::brute_isomorphic(a, b);
    positive += expected;
    ASSERT_EQ(is_isomorphic(a, b), expected) << trial;
  }
  EXPECT_GT(positive, 600);
  EXPECT_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST(Canonical, HashIsConsistentWithEquality) {
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::mt19937_64 rng(73);
  const Graph g = petersen();
  for (int k = 0; k < 10; ++k)
    seen.insert(canonical_form(relabel(g, random_permutation(rng, 10))));
  EXPECT_EQ(seen.size(), 1U);
}

TEST(Canonical, ConstructionIdentities) {
  EXPECT_EQ(canonical_form(gen_A_construction(2)), canonical_form(gen_B_construction(1)));
  EXPECT_TRUE(is_isomorphic(double_star(1, 1), path_graph(4)));
  EXPECT_TRUE(is_isomorphic(complete_bipartite(2, 2), cycle_graph(4)));
  for (int n = 0; n <= 6; ++n)
    EXPECT_TRUE(is_isomorphic(double_star(0, n), star_graph(n + 1)));
}
