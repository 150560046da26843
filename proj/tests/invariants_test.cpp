#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "pathseq/pathseq.hpp"

namespace pathseq {
namespace {

Graph star3() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

double degree_sum(std::span<const Degree> s) { return std::accumulate(s.begin(), s.end(), 0.0); }

TEST(Builtins, PublishedForms) {
  EXPECT_NEAR(builtin("connectivity")({2, 3, 2}), 1 / std::sqrt(12.0), 1e-15);
  EXPECT_NEAR(builtin("sum-connectivity")({2, 3, 2}), 1 / std::sqrt(7.0), 1e-15);
  EXPECT_DOUBLE_EQ(builtin("hyper-zagreb")({2, 3}), 36.0);
  EXPECT_DOUBLE_EQ(builtin("path-count")({5, 1, 7}), 1.0);
  EXPECT_NEAR(builtin("power", 0.5)({4, 9}), 6.0, 1e-12);
  EXPECT_NEAR(builtin("power", -1.0)({5}), 0.2, 1e-15);
}

TEST(Builtins, UnknownAndMissing) {
  EXPECT_THROW(builtin("randic-ish"), Error);
  try {
    builtin("power");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingParameter);
  }
}

TEST(Registry, ResolvesIdentifiers) {
  InvariantRegistry reg;
  EXPECT_TRUE(reg.contains("connectivity"));
  EXPECT_EQ(reg.resolve("hyper-zagreb").name(), "hyper-zagreb");
  EXPECT_NEAR(reg.resolve("power:2")({3, 2}), 36.0, 1e-12);
  try {
    reg.resolve("nonsense");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownIndex);
  }
  EXPECT_THROW(reg.resolve("power:abc"), Error);
}

TEST(Registry, RejectsAsymmetricFunctions) {
  InvariantRegistry reg;
  try {
    reg.add("first-degree", [](std::span<const Degree> s) { return double(s.front()); }, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AsymmetricFunction);
  }
  EXPECT_FALSE(reg.contains("first-degree"));
  reg.add("degree-sum", degree_sum, 3);
  EXPECT_TRUE(reg.contains("degree-sum"));
}

TEST(Evaluate, StarConnectivityOrderOne) {
  EXPECT_NEAR(evaluate_invariant(star3(), 1, builtin("connectivity")), std::sqrt(3.0), 1e-12);
}

TEST(Evaluate, ZerothOrderDegreeSumIsTwiceEdges) {
  const InvariantFunction sum("degree-sum", degree_sum);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen::random_connected(rng, std::uniform_int_distribution<int>(2, 9)(rng), 0.3);
    EXPECT_DOUBLE_EQ(evaluate_invariant(g, 0, sum), 2.0 * g.edge_count());
  }
}

TEST(Evaluate, PathHamiltonian) {
  const auto g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_DOUBLE_EQ(evaluate_invariant(g, 3, builtin("path-count")), 1.0);
}

TEST(Profile, SmallGraphs) {
  const auto one = builtin("path-count");
  const auto p3 = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(invariant_profile(p3, one, 3).values, (std::vector<double>{3, 2, 1, 0}));
  const auto k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(invariant_profile(k3, one, 2).values, (std::vector<double>{3, 3, 3}));
  const auto chi = invariant_profile(star3(), builtin("connectivity"), 2).values;
  ASSERT_EQ(chi.size(), 3u);
  EXPECT_NEAR(chi[0], 3 + 1 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(chi[1], std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(chi[2], 3 / std::sqrt(3.0), 1e-12);
}

TEST(InvariantProperty, BuiltinsAreSymmetric) {
  std::mt19937_64 rng(21);
  for (const char* name : {"connectivity", "sum-connectivity", "hyper-zagreb", "path-count"}) {
    const auto f = builtin(name);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<Degree> s(std::uniform_int_distribution<int>(1, 9)(rng));
      for (auto& d : s) d = std::uniform_int_distribution<int>(1, 40)(rng);
      std::vector<Degree> r(s.rbegin(), s.rend());
      EXPECT_TRUE(approx_equal(f(s), f(r), 1e-14)) << name;
    }
    EXPECT_NO_THROW(validate_symmetry(f, 99));
  }
}

TEST(InvariantProperty, CensusSumMatchesPathByPath) {
  std::mt19937_64 rng(22);
  const auto fns = oracle::builtins();
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 9)(rng);
    const auto g = gen::random_connected(rng, n, 0.35);
    const auto edges = gen::edge_list(g);
    for (const auto& named : fns) {
      const auto f = builtin(named.name);
      for (int h = 0; h < n; ++h) {
        const double direct = oracle::invariant(n, edges, h, named.fn);
        EXPECT_LE(scaled_difference(evaluate_invariant(g, h, f), direct), 1e-12)
            << named.name << " trial " << trial << " h " << h;
      }
    }
  }
}

TEST(Numeric, HybridTolerance) {
  EXPECT_TRUE(approx_equal(1e6, 1e6 + 1e-4, 1e-9));
  EXPECT_FALSE(approx_equal(1e6, 1e6 + 1e-2, 1e-9));
  EXPECT_TRUE(approx_equal(0.0, 5e-10, 1e-9));
  EXPECT_FALSE(approx_equal(0.0, 5e-9, 1e-9));
}

TEST(Numeric, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3, std::sqrt(2.0), 1e-300, 123456789.0, -2.5}) {
    const auto text = format_double(v);
    EXPECT_EQ(std::stod(text), v);
    EXPECT_LE(text.size(), 24u);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

}  // namespace
}  // namespace pathseq
