#include <cospec/canonical.hpp>
#include <cospec/induced.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cospec;
using cospec::testing::brute_isomorphic;
using cospec::testing::random_graph;

namespace {

// Tries every vertex subset of the pattern's order.
auto brute_contains(const Graph& host, const Graph& pattern) -> bool {
  const int k = pattern.order();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << host.order()); ++s)
    if (std::popcount(s) == k && brute_isomorphic(induced_subgraph(host, s), pattern))
      return true;
  return false;
}

} // namespace

TEST(Induced, PatternGraphsHaveExpectedShape) {
  EXPECT_EQ(pattern_name(ForbiddenPattern::two_k2), "2K2");
  EXPECT_EQ(pattern_name(ForbiddenPattern::double_star_2_2), "P2(2,2)");
  EXPECT_TRUE(is_isomorphic(pattern_graph(ForbiddenPattern::two_k2), disjoint_union(path_graph(2), path_graph(2))));
  EXPECT_TRUE(is_isomorphic(pattern_graph(ForbiddenPattern::r), gen_R()));
  EXPECT_TRUE(is_isomorphic(pattern_graph(ForbiddenPattern::double_star_2_2), double_star(2, 2)));
  EXPECT_TRUE(is_isomorphic(pattern_graph(ForbiddenPattern::p4_plus_k1), add_isolated(path_graph(4), 1)));
  EXPECT_TRUE(is_isomorphic(pattern_graph(ForbiddenPattern::p5), path_graph(5)));
}

TEST(Induced, InducedNotMerelySubgraph) {
  // C4 contains P3 as a subgraph and as an induced subgraph, but not 2K2 induced
  EXPECT_TRUE(induced_contains(cycle_graph(4), path_graph(3)));
  EXPECT_FALSE(induced_contains(cycle_graph(4), pattern_graph(ForbiddenPattern::two_k2)));
  EXPECT_FALSE(induced_contains(complete_graph(5), path_graph(3)));
  EXPECT_TRUE(induced_contains(cycle_graph(6), pattern_graph(ForbiddenPattern::two_k2)));
  EXPECT_TRUE(induced_contains(Graph(3), Graph(0)));
  EXPECT_FALSE(induced_contains(Graph(2), Graph(3)));
}

TEST(Induced, WitnessInducesThePattern) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph host = random_graph(rng, 5 + trial % 8, 0.3);
    for (auto p : all_forbidden_patterns) {
      const Graph pattern = pattern_graph(p);
      if (auto w = induced_contains(host, pattern)) {
        ASSERT_EQ(popcount(*w), pattern.order());
        ASSERT_TRUE(is_isomorphic(induced_subgraph(host, *w), pattern));
      }
    }
  }
}

TEST(Induced, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph host = random_graph(rng, 5 + trial % 5, 0.2 + 0.1 * (trial % 5));
    for (auto p : all_forbidden_patterns)
      ASSERT_EQ(induced_contains(host, pattern_graph(p)).has_value(), brute_contains(host, pattern_graph(p)))
          << trial << " " << pattern_name(p);
  }
}

TEST(Induced, ReportOnTargetsAndMates) {
  // a double star with one leaf on a centre has none of the patterns
  for (int n = 1; n <= 10; ++n)
    EXPECT_TRUE(forbidden_report(double_star(1, n)).clear());
  EXPECT_TRUE(forbidden_report(double_star(2, 2)).present(ForbiddenPattern::double_star_2_2));
  EXPECT_FALSE(forbidden_report(double_star(2, 2)).clears_core_patterns());
  EXPECT_TRUE(forbidden_report(gen_R()).present(ForbiddenPattern::r));
  const ForbiddenReport mate = forbidden_report(add_isolated(gen_A_construction(3), 2));
  EXPECT_TRUE(mate.clears_core_patterns());
  EXPECT_TRUE(mate.present(ForbiddenPattern::p4_plus_k1));
  EXPECT_TRUE(forbidden_report(gen_A_construction(3)).clear());
  EXPECT_TRUE(forbidden_report(gen_B_construction(2)).clear());
}
