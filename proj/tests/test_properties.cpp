// Properties checked over every isomorphism class on at most eight vertices.

#include <cospec/charpoly.hpp>
#include <cospec/graph6.hpp>
#include <cospec/induced.hpp>
#include <cospec/search.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace cospec;

namespace {

auto classes_up_to(int max_n) -> std::vector<Graph> {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n)
    enumerate_graphs(EnumSpec{.n = n}, [&](const Graph& g, const CanonicalForm&) { out.push_back(g); });
  return out;
}

const std::vector<Graph>& corpus() {
  static const std::vector<Graph> all = classes_up_to(8);
  return all;
}

} // namespace

TEST(Properties, ClassCountsMatchBurnsidePerEdgeCount) {
  for (int n = 1; n <= 8; ++n) {
    const auto expected = cospec::testing::burnside_class_counts(n);
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      const auto got = enumerate_graphs(EnumSpec{.n = n, .edges = m}, [](const Graph&, const CanonicalForm&) {});
      ASSERT_EQ(BigInt(got), expected[m]) << n << " " << m;
    }
  }
}

TEST(Properties, BipartiteSpectraAreSymmetric) {
  std::size_t bipartite = 0;
  for (const Graph& g : corpus()) {
    if (!is_bipartite(g))
      continue;
    ++bipartite;
    const IntPolynomial p = charpoly_exact(g);
    for (int k = 0; k <= g.order(); ++k)
      if ((g.order() - k) % 2 == 1) {
        ASSERT_EQ(p[k], 0) << write_graph6(g);
      }
  }
  EXPECT_EQ(bipartite, 1U + 1 + 2 + 3 + 7 + 13 + 35 + 88 + 303);
}

TEST(Properties, SturmCountsAgreeWithNumericRoots) {
  const double thresholds[] = {-2.5, -1, -0.5, 0, 0.3, 1, 1.5, 2};
  for (const Graph& g : corpus()) {
    if (g.order() == 0)
      continue;
    const IntPolynomial p = charpoly_exact(g);
    const auto roots = numeric_roots(p);
    ASSERT_EQ(roots.size(), static_cast<std::size_t>(g.order()));
    for (double t : thresholds) {
      // skip thresholds within the guard of a root; the numeric side is not exact there
      bool guarded = false;
      std::vector<double> distinct;
      for (double r : roots) {
        if (std::abs(r - t) < 1e-6)
          guarded = true;
        if (r > t && (distinct.empty() || r - distinct.back() > 1e-6))
          distinct.push_back(r);
      }
      if (guarded)
        continue;
      const Rational exact_t = Rational(static_cast<long>(std::lround(t * 10)), 10);
      ASSERT_EQ(count_distinct_roots_above(p, exact_t).distinct_above, static_cast<int>(distinct.size()))
          << write_graph6(g) << " t=" << t;
    }
  }
}

TEST(Properties, BipartiteForbiddenPatternImplication) {
  // connected bipartite graphs free of 2K2 and R are also free of P4+K1
  std::size_t checked = 0;
  for (const Graph& g : corpus()) {
    if (!is_connected(g) || !is_bipartite(g))
      continue;
    const ForbiddenReport r = forbidden_report(g);
    if (r.present(ForbiddenPattern::two_k2) || r.present(ForbiddenPattern::r))
      continue;
    ++checked;
    ASSERT_FALSE(r.present(ForbiddenPattern::p4_plus_k1)) << write_graph6(g);
  }
  EXPECT_GT(checked, 20U);
}

TEST(Properties, InducedWitnessesInterlace) {
  std::size_t checked = 0;
  for (const Graph& g : corpus()) {
    if (g.order() < 6)
      continue;
    for (auto p : all_forbidden_patterns) {
      const auto w = induced_contains(g, pattern_graph(p));
      if (!w || *w == g.vertices())
        continue;
      ++checked;
      ASSERT_TRUE(interlacing_check(g, g.vertices() & ~*w)) << write_graph6(g);
    }
    if (checked > 3000)
      break;
  }
  EXPECT_GT(checked, 1000U);
}

TEST(Properties, CharpolyMultiplicative) {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = cospec::testing::random_graph(rng, 1 + trial % 9, 0.4);
    const Graph h = cospec::testing::random_graph(rng, 1 + trial % 7, 0.5);
    ASSERT_EQ(charpoly_exact(disjoint_union(g, h)), charpoly_exact(g) * charpoly_exact(h));
  }
}

TEST(Properties, MatesOfOneLeafDoubleStars) {
  for (int n = 1; n <= 8; ++n) {
    const Graph target = double_star(1, n);
    const MateReport report = cospectral_mates(target);
    for (const Mate& m : report.mates) {
      EXPECT_EQ(charpoly_exact(m.graph), report.target_poly);
      EXPECT_FALSE(is_isomorphic(m.graph, target));
      EXPECT_TRUE(forbidden_report(m.graph).clears_core_patterns()) << n;
      const Graph core = induced_subgraph(m.graph, m.graph.vertices() & ~m.graph.isolated());
      EXPECT_TRUE(is_connected(core));
      EXPECT_EQ(diameter(core), 3);
      EXPECT_TRUE(forbidden_report(core).clear());
      EXPECT_TRUE(m.classification == MateClass::form_i || m.classification == MateClass::form_ii) << n;
      const auto p = abcd_decompose(m.graph);
      ASSERT_TRUE(p);
      const auto s = p->sizes();
      EXPECT_EQ(gprime_charpoly_formula(s[0], s[1], s[2], s[3]).shifted(popcount(m.graph.isolated())),
                report.target_poly);
    }
    for (std::size_t i = 1; i < report.mates.size(); ++i)
      EXPECT_LT(report.mates[i - 1].form, report.mates[i].form);
  }
}
