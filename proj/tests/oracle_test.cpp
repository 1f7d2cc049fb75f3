#include <algorithm>
#include <random>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "mft/errors.hpp"
#include "mft/oracle.hpp"
#include "support/random_graphs.hpp"

namespace mft::oracle {
namespace {

std::vector<VertexSet> all_subsets(int n) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) out.push_back(VertexSet::from_mask(mask));
  return out;
}

TEST(EnumerateTest, SingleArc) {
  const DivergingFamily f = enum_diverging_forests(testing::single_arc());
  ASSERT_EQ(f.size(), 2U);
  EXPECT_EQ(weight(f), Rational(2));
  EXPECT_EQ(roots(f.members[0], f.host), (VertexSet{0, 1}));
  EXPECT_EQ(roots(f.members[1], f.host), (VertexSet{0}));
}

TEST(EnumerateTest, DirectedCycle) {
  const DivergingFamily f = enum_diverging_forests(testing::directed_3_cycle());
  EXPECT_EQ(f.size(), 7U);
  EXPECT_EQ(enum_converging_forests(testing::directed_3_cycle()).size(), 7U);
  for (int r = 0; r < 3; ++r) EXPECT_EQ(enum_diverging_trees(testing::directed_3_cycle(), r).size(), 1U);
}

TEST(EnumerateTest, UndirectedExamples) {
  EXPECT_EQ(enum_rooted_forests(testing::single_edge()).size(), 3U);
  const RootedFamily k3 = enum_rooted_forests(testing::unit_k3());
  EXPECT_EQ(k3.size(), 16U);
  EXPECT_EQ(weight(k3), Rational(16));
  EXPECT_EQ(enum_spanning_trees(testing::unit_k3()).size(), 3U);

  const RootedFamily empty = enum_rooted_forests(Multigraph(3));
  ASSERT_EQ(empty.size(), 1U);
  EXPECT_EQ(empty.members[0].roots(), VertexSet::all(3));
  EXPECT_EQ(enum_spanning_trees(Multigraph(3)).size(), 0U);
  EXPECT_EQ(enum_spanning_trees(Multigraph(1)).size(), 1U);
}

TEST(EnumerateTest, ParallelEdgesAreDistinctInstances) {
  const Multigraph g(2, {Edge{0, 1, 2}, Edge{0, 1, 3}});
  const RootedFamily f = enum_rooted_forests(g);
  EXPECT_EQ(f.size(), 5U);  // empty, plus two instances times two roots
  EXPECT_EQ(weight(f), Rational(11));
}

TEST(EnumerateTest, GuardRefusesLargeInputs) {
  std::vector<Edge> edges;
  for (int k = 0; k < 17; ++k) edges.push_back(Edge{0, 1, 1});
  EXPECT_THROW(enum_rooted_forests(Multigraph(2, edges)), GuardExceeded);
  EXPECT_THROW(enum_diverging_forests(Multidigraph(9)), GuardExceeded);
  EXPECT_NO_THROW(enum_diverging_forests(Multidigraph(9), EnumGuard{9, 16}));
}

TEST(FilterTest, Examples) {
  const DivergingFamily arc = enum_diverging_forests(testing::single_arc());
  EXPECT_EQ(filter_diverging(arc, 0, 1).size(), 1U);
  EXPECT_EQ(filter_diverging(arc, 1, 0).size(), 0U);
  EXPECT_EQ(filter_diverging(arc, 0, 0).size(), 2U);
  EXPECT_EQ(filter_diverging(arc, 1, 1).size(), 1U);
  EXPECT_EQ(filter_roots(arc, VertexSet{0}).size(), 1U);
  EXPECT_EQ(filter_roots(arc, VertexSet{1}).size(), 0U);
  EXPECT_EQ(filter_roots(arc, VertexSet{}).size(), 0U);

  const ConvergingFamily conv = enum_converging_forests(testing::single_arc());
  EXPECT_EQ(filter_converging(conv, 1, 0).size(), 1U);
  EXPECT_EQ(filter_converging(conv, 0, 1).size(), 0U);

  const RootedFamily edge = enum_rooted_forests(testing::single_edge());
  EXPECT_EQ(filter_rooted(edge, 0, 1).size(), 1U);
  EXPECT_EQ(filter_rooted(edge, 1, 0).size(), 1U);
  EXPECT_EQ(filter_rooted(edge, 0, 0).size(), 2U);
}

TEST(WeightTest, Examples) {
  const Multidigraph g(3, {Arc{0, 1, Rational::parse("1/2")}, Arc{1, 2, -3}});
  const std::vector<std::size_t> none;
  const std::vector<std::size_t> both{0, 1};
  EXPECT_EQ(weight_of(none, g), Rational(1));
  EXPECT_EQ(weight_of(both, g), Rational::parse("-3/2"));
  const std::vector<std::size_t> bad{2};
  EXPECT_THROW(weight_of(bad, g), std::out_of_range);
  EXPECT_EQ(weight(DivergingFamily{g, {}}), Rational(0));
  EXPECT_EQ(signed_weight(enum_diverging_forests(g)), Rational(1) - Rational::parse("1/2") + 3 - Rational::parse("3/2"));
}

TEST(PathTest, Examples) {
  const auto cycle = enum_paths(testing::directed_3_cycle(), 0, 2);
  ASSERT_EQ(cycle.size(), 1U);
  EXPECT_EQ(cycle[0].vertices, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(cycle[0].arcs, (std::vector<std::size_t>{0, 1}));

  const auto trivial = enum_paths(testing::single_arc(), 1, 1);
  ASSERT_EQ(trivial.size(), 1U);
  EXPECT_EQ(trivial[0].vertices, (std::vector<int>{1}));
  EXPECT_TRUE(trivial[0].arcs.empty());
  EXPECT_TRUE(enum_paths(testing::single_arc(), 1, 0).empty());

  const Multidigraph parallel(3, {Arc{0, 1, 2}, Arc{0, 1, 3}, Arc{1, 2, 1}, Arc{0, 2, 5}});
  const auto paths = enum_paths(parallel, 0, 2);
  EXPECT_EQ(paths.size(), 3U);
  Rational total;
  for (const auto& p : paths) total += weight_of(p, parallel);
  EXPECT_EQ(total, Rational(10));
}

TEST(OracleTest, EnumeratorsAgreeWithIndependentCheckers) {
  std::mt19937_64 rng(31);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 40; ++trial) {
    const Multigraph g = testing::random_multigraph(rng, 1, 5, 8, pool);
    const RootedFamily rooted = enum_rooted_forests(g);
    for (const auto& f : rooted.members) EXPECT_TRUE(is_rooted_forest(f, g));
    EXPECT_EQ(std::set<RootedForest>(rooted.members.begin(), rooted.members.end()).size(), rooted.size());

    const Multidigraph d = testing::random_multidigraph(rng, 1, 5, 8, pool);
    const DivergingFamily div = enum_diverging_forests(d);
    EXPECT_EQ(std::set<DivergingForest>(div.members.begin(), div.members.end()).size(), div.size());
    // Every subset the checker accepts is enumerated, and nothing else.
    std::size_t accepted = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
      DivergingForest f;
      for (std::size_t k = 0; k < d.size(); ++k) {
        if ((mask >> k) & 1U) f.instances.push_back(k);
      }
      if (is_diverging_forest(f, d)) ++accepted;
    }
    EXPECT_EQ(accepted, div.size());

    // Converging forests of d are the diverging forests of its reversal.
    const ConvergingFamily conv = enum_converging_forests(d);
    const DivergingFamily rev = enum_diverging_forests(reverse(d));
    ASSERT_EQ(conv.size(), rev.size());
    for (std::size_t k = 0; k < conv.size(); ++k) EXPECT_EQ(conv.members[k].instances, rev.members[k].instances);
  }
}

TEST(OracleTest, RootSetsPartitionTheFamily) {
  std::mt19937_64 rng(32);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 40; ++trial) {
    const Multidigraph d = testing::random_multidigraph(rng, 1, 5, 8, pool);
    const DivergingFamily all = enum_diverging_forests(d);
    std::size_t count = 0;
    Rational total;
    for (const VertexSet& phi : all_subsets(d.order())) {
      const DivergingFamily part = filter_roots(all, phi);
      count += part.size();
      total += weight(part);
    }
    EXPECT_EQ(count, all.size());
    EXPECT_EQ(total, weight(all));

    const Multigraph g = testing::random_multigraph(rng, 1, 5, 8, pool);
    const RootedFamily rooted = enum_rooted_forests(g);
    Rational rooted_total;
    for (const VertexSet& phi : all_subsets(g.order())) rooted_total += weight(filter_roots(rooted, phi));
    EXPECT_EQ(rooted_total, weight(rooted));
  }
}

TEST(OracleTest, MergingParallelInstancesKeepsWeights) {
  std::mt19937_64 rng(33);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 40; ++trial) {
    const Multidigraph d = testing::random_multidigraph(rng, 2, 5, 8, pool);
    const Multidigraph merged = merge_parallel(d);
    const DivergingFamily a = enum_diverging_forests(d);
    const DivergingFamily b = enum_diverging_forests(merged);
    for (const VertexSet& phi : all_subsets(d.order())) {
      EXPECT_EQ(weight(filter_roots(a, phi)), weight(filter_roots(b, phi)));
    }
    for (int i = 0; i < d.order(); ++i) {
      for (int j = 0; j < d.order(); ++j) {
        EXPECT_EQ(weight(filter_diverging(a, i, j)), weight(filter_diverging(b, i, j)));
      }
    }
  }
}

TEST(OracleTest, ContractionMapsRootedForestsToTrees) {
  std::mt19937_64 rng(34);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 30; ++trial) {
    const Multidigraph d = testing::random_multidigraph(rng, 1, 5, 9, pool);
    const DivergingFamily all = enum_diverging_forests(d);
    for (const VertexSet& phi : all_subsets(d.order())) {
      if (phi.empty()) continue;
      const Contraction c = contract(d, phi);
      const DivergingFamily trees = enum_diverging_trees(c.graph, c.merged);
      const DivergingFamily forests = filter_roots(all, phi);
      EXPECT_EQ(forests.size(), trees.size());
      EXPECT_EQ(weight(forests), weight(trees));
    }
  }
}

// Every forest in which j hangs below i splits into the i -> j path and a
// forest rooted at phi plus the path vertices, and in exactly one way.
TEST(OracleTest, PathDecompositionIsABijection) {
  std::mt19937_64 rng(35);
  const auto pool = testing::signed_weight_pool();
  for (int trial = 0; trial < 25; ++trial) {
    const Multidigraph d = testing::random_multidigraph(rng, 2, 4, 7, pool);
    const int n = d.order();
    const DivergingFamily all = enum_diverging_forests(d);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const auto paths = enum_paths(d, i, j);
        const DivergingFamily below = filter_diverging(all, i, j);
        for (const VertexSet& phi : all_subsets(n)) {
          if (phi.contains(i) || phi.contains(j)) continue;
          std::map<std::vector<std::size_t>, int> hits;
          for (const Path& p : paths) {
            if (std::any_of(p.vertices.begin(), p.vertices.end(), [&](int v) { return phi.contains(v); })) continue;
            for (const auto& rest : filter_roots(all, phi.united(p.vertex_set())).members) {
              std::vector<std::size_t> joined = rest.instances;
              joined.insert(joined.end(), p.arcs.begin(), p.arcs.end());
              std::sort(joined.begin(), joined.end());
              ++hits[joined];
            }
          }
          const DivergingFamily target = filter_roots(below, phi.with(i));
          EXPECT_EQ(hits.size(), target.size());
          for (const auto& f : target.members) {
            const auto it = hits.find(f.instances);
            ASSERT_NE(it, hits.end());
            EXPECT_EQ(it->second, 1);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace mft::oracle
