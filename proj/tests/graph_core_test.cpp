#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "pathseq/pathseq.hpp"

namespace pathseq {
namespace {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph star3() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected pathseq::Error";
  return ErrorKind::InvalidArgument;
}

TEST(GraphBuild, SmallestGraph) {
  const auto g = build_graph(2, {{0, 1}});
  EXPECT_EQ(g.vertex_count(), 2u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(GraphBuild, PathDegrees) {
  const auto g = path_graph(4);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree(2), 2);
  EXPECT_EQ(g.degree(3), 1);
}

TEST(GraphBuild, Rejections) {
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}}); }), ErrorKind::Disconnected);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 0}, {0, 1}, {1, 2}}); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}, {1, 0}, {1, 2}}); }), ErrorKind::DuplicateEdge);
  EXPECT_EQ(kind_of([] { build_graph(3, {{0, 1}, {1, 5}}); }), ErrorKind::VertexOutOfRange);
  EXPECT_EQ(kind_of([] { build_graph(1, {}); }), ErrorKind::InvalidGraph);
}

TEST(PathClassKey, CanonicalUnderReversal) {
  EXPECT_EQ(PathClass({3, 2, 1}), PathClass({1, 2, 3}));
  const PathClass reversed({3, 2, 1});
  EXPECT_EQ(std::vector<Degree>(reversed.degrees().begin(), reversed.degrees().end()),
            (std::vector<Degree>{1, 2, 3}));
  EXPECT_NE(PathClass({1, 3, 2}), PathClass({1, 2, 3}));
  EXPECT_EQ(PathClass({4}).order(), 0u);
}

TEST(Enumerate, PathOfFour) {
  const auto paths = collect_paths(path_graph(4), 2);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(paths[1], (std::vector<Vertex>{1, 2, 3}));
}

TEST(Enumerate, TriangleEdges) { EXPECT_EQ(collect_paths(complete_graph(3), 1).size(), 3u); }

TEST(Enumerate, HamiltonianPathsOfK4) { EXPECT_EQ(collect_paths(complete_graph(4), 3).size(), 12u); }

TEST(Enumerate, BeyondVertexCountIsEmpty) {
  EXPECT_TRUE(collect_paths(complete_graph(4), 4).empty());
  EXPECT_TRUE(path_census(complete_graph(4), 7).entries().empty());
}

TEST(Enumerate, NegativeOrderRejected) {
  EXPECT_EQ(kind_of([] { collect_paths(path_graph(3), -1); }), ErrorKind::InvalidArgument);
}

TEST(Enumerate, BudgetIsEnforced) {
  EXPECT_EQ(kind_of([] { path_census(complete_graph(8), 7, 50); }), ErrorKind::BudgetExceeded);
  EXPECT_EQ(kind_of([] { longest_path_length(complete_graph(8), 3); }),
            ErrorKind::BudgetExceeded);
  Budget budget(1000);
  path_census(path_graph(5), 2, budget);
  EXPECT_GT(budget.used(), 0u);
  EXPECT_LE(budget.used(), budget.cap());
}

TEST(Census, StarOrderTwo) {
  const auto c = path_census(star3(), 2);
  ASSERT_EQ(c.entries().size(), 1u);
  EXPECT_EQ(c.count(PathClass({1, 3, 1})), 3u);
}

TEST(Census, PathOrderOne) {
  const auto c = path_census(path_graph(4), 1);
  EXPECT_EQ(c.count(PathClass({1, 2})), 2u);
  EXPECT_EQ(c.count(PathClass({2, 2})), 1u);
  EXPECT_EQ(c.total(), 3u);
}

TEST(Census, SpiderOrderTwo) {
  const auto g = realize_starlike(StarlikeSpec::from_counts({{1, 1}, {2, 2}}));
  const auto c = path_census(g, 2);
  EXPECT_EQ(c.count(PathClass({3, 2, 1})), 2u);
  EXPECT_EQ(c.count(PathClass({1, 3, 2})), 2u);
  EXPECT_EQ(c.count(PathClass({2, 3, 2})), 1u);
  EXPECT_EQ(c.total(), 5u);
}

TEST(LongestPath, SmallGraphs) {
  EXPECT_EQ(longest_path_length(path_graph(4)), 3);
  EXPECT_EQ(longest_path_length(complete_graph(4)), 3);
  EXPECT_EQ(longest_path_length(star3()), 2);
}

TEST(GraphProperty, CensusMatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    const auto g = gen::random_connected(rng, n, p);
    const auto edges = gen::edge_list(g);
    const int rho = longest_path_length(g);
    ASSERT_EQ(rho, oracle::longest_path(n, edges)) << "trial " << trial;
    for (int h = 0; h <= rho; ++h) {
      const auto census = path_census(g, h);
      const auto expected = oracle::census(n, edges, h);
      ASSERT_EQ(census.entries().size(), expected.size()) << "trial " << trial << " h " << h;
      for (const auto& [seq, count] : expected) {
        EXPECT_EQ(census.count(PathClass(seq)), count);
      }
      EXPECT_EQ(census.total(), collect_paths(g, h).size());
    }
    EXPECT_TRUE(collect_paths(g, rho + 1).empty());
  }
}

TEST(GraphProperty, NoDuplicatePaths) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    const auto g = gen::random_connected(rng, n, 0.4);
    for (int h = 1; h < n; ++h) {
      const auto paths = collect_paths(g, h);
      std::vector<std::vector<Vertex>> both;
      for (const auto& p : paths) {
        both.push_back(p);
        both.emplace_back(p.rbegin(), p.rend());
      }
      std::set<std::vector<Vertex>> canonical;
      for (const auto& p : both) {
        std::vector<Vertex> r(p.rbegin(), p.rend());
        canonical.insert(std::min(p, r));
      }
      EXPECT_EQ(canonical.size() * 2, both.size());
      EXPECT_EQ(canonical.size(), paths.size());
    }
  }
}

}  // namespace
}  // namespace pathseq
