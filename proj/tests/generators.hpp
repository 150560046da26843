#pragma once

// Hand-rolled generators for the property tests. Everything is seeded so a
// failure reproduces from the test name alone.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "oracle.hpp"
#include "pathseq/pathseq.hpp"

namespace gen {

using pathseq::StarlikeSpec;

inline oracle::EdgeList edge_list(const pathseq::Graph& g) {
  oracle::EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return out;
}

/// Random spanning tree on n vertices plus each remaining pair with
/// probability p. Always connected.
inline pathseq::Graph random_connected(std::mt19937_64& rng, int n, double p) {
  std::vector<pathseq::Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.emplace_back(u, v);
    seen.emplace(u, v);
  }
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!seen.count({u, v}) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return pathseq::build_graph(static_cast<std::size_t>(n), edges);
}

/// Every starlike spec with branch lengths <= max_len, each L_l <= max_count,
/// and 3 <= m <= max_m.
inline std::vector<StarlikeSpec> bounded_starlike(int max_len, int max_count, int max_m) {
  std::set<StarlikeSpec> out;
  std::vector<int> counts(max_len + 1, 0);
  const auto recurse = [&](auto&& self, int l, int m) -> void {
    if (l > max_len) {
      if (m >= 3) {
        StarlikeSpec::BranchCounts bc;
        for (int i = 1; i <= max_len; ++i) bc[i] = counts[i];
        out.insert(StarlikeSpec::from_counts(bc));
      }
      return;
    }
    for (int c = 0; c <= max_count && m + c <= max_m; ++c) {
      counts[l] = c;
      self(self, l + 1, m + c);
    }
    counts[l] = 0;
  };
  recurse(recurse, 1, 0);
  return {out.begin(), out.end()};
}

inline StarlikeSpec random_starlike(std::mt19937_64& rng, int max_len, int max_count) {
  std::uniform_int_distribution<int> count(0, max_count);
  for (;;) {
    StarlikeSpec::BranchCounts bc;
    std::int64_t m = 0;
    for (int l = 1; l <= max_len; ++l) m += (bc[l] = count(rng));
    if (m >= 3) return StarlikeSpec::from_counts(bc);
  }
}

/// Starlike spec with L_1..L_h taken from `short_counts` (index 0 unused),
/// root degree m and n vertices; the remaining branches are all longer than h
/// and absorb the leftover edges. Empty when that is impossible.
inline std::optional<StarlikeSpec> complete_with_long_branches(
    const std::vector<std::int64_t>& short_counts, int h, std::int64_t m, std::int64_t n) {
  StarlikeSpec::BranchCounts bc;
  std::int64_t used_branches = 0;
  std::int64_t used_edges = 0;
  for (int l = 1; l < static_cast<int>(short_counts.size()); ++l) {
    if (short_counts[l] == 0) continue;
    bc[l] += short_counts[l];
    used_branches += short_counts[l];
    used_edges += l * short_counts[l];
  }
  const std::int64_t long_branches = m - used_branches;
  const std::int64_t left = n - 1 - used_edges;
  if (long_branches < 0) return std::nullopt;
  if (long_branches == 0) {
    if (left != 0) return std::nullopt;
  } else {
    const std::int64_t last = left - (long_branches - 1) * (h + 1);
    if (last < h + 1) return std::nullopt;
    bc[h + 1] += long_branches - 1;
    bc[static_cast<int>(last)] += 1;
  }
  if (m < 3) return std::nullopt;
  return StarlikeSpec::from_counts(bc);
}

inline std::vector<double> oracle_profile(const pathseq::Graph& g, const oracle::Fn& f, int top) {
  const auto edges = edge_list(g);
  std::vector<double> out;
  for (int h = 0; h <= top; ++h) {
    out.push_back(oracle::invariant(static_cast<int>(g.vertex_count()), edges, h, f));
  }
  return out;
}

}  // namespace gen
