#pragma once

// Reference implementation used only by the tests. Deliberately naive: walks
// every ordered simple path, never canonicalizes during the walk, and halves
// at the end. Shares nothing with the library beyond plain edge lists.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;
using Seq = std::vector<int>;
using Fn = std::function<double(const Seq&)>;

struct Tree {
  int n = 0;
  EdgeList edges;
};

/// Root 0, then each branch as a fresh chain; branch order as given.
inline Tree spider(const std::vector<int>& branch_lengths) {
  Tree t;
  t.n = 1;
  for (int len : branch_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      t.edges.emplace_back(prev, t.n);
      prev = t.n++;
    }
  }
  return t;
}

/// K_k on vertices 0..k-1 with a spider hung from vertex 0.
inline Tree clique_spider(int k, const std::vector<int>& branch_lengths) {
  Tree t;
  t.n = k;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) t.edges.emplace_back(u, v);
  for (int len : branch_lengths) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      t.edges.emplace_back(prev, t.n);
      prev = t.n++;
    }
  }
  return t;
}

inline std::vector<std::vector<int>> adjacency(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

/// Multiset of raw degree sequences over ordered paths of length h.
inline std::map<Seq, std::uint64_t> ordered_sequences(int n, const EdgeList& edges, int h) {
  const auto adj = adjacency(n, edges);
  std::map<Seq, std::uint64_t> out;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void()> walk = [&] {
    if (static_cast<int>(path.size()) == h + 1) {
      Seq s;
      for (int v : path) s.push_back(static_cast<int>(adj[v].size()));
      ++out[s];
      return;
    }
    for (int w : adj[path.back()]) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      walk();
      path.pop_back();
      used[w] = false;
    }
  };
  for (int v = 0; v < n; ++v) {
    used[v] = true;
    path = {v};
    walk();
    used[v] = false;
  }
  return out;
}

/// Unordered census keyed by min(seq, reversed seq).
inline std::map<Seq, std::uint64_t> census(int n, const EdgeList& edges, int h) {
  std::map<Seq, std::uint64_t> out;
  for (const auto& [s, c] : ordered_sequences(n, edges, h)) {
    Seq r(s.rbegin(), s.rend());
    out[std::min(s, r)] += c;
  }
  if (h > 0) {
    for (auto& [s, c] : out) c /= 2;  // each path was walked from both ends
  }
  return out;
}

inline std::uint64_t path_count(int n, const EdgeList& edges, int h) {
  std::uint64_t total = 0;
  for (const auto& [s, c] : census(n, edges, h)) total += c;
  return total;
}

/// Sum of f over ordered paths, halved (f is symmetric).
inline double invariant(int n, const EdgeList& edges, int h, const Fn& f) {
  double total = 0;
  for (const auto& [s, c] : ordered_sequences(n, edges, h)) total += static_cast<double>(c) * f(s);
  return h > 0 ? total / 2 : total;
}

inline double invariant(const Tree& t, int h, const Fn& f) { return invariant(t.n, t.edges, h, f); }

inline int longest_path(int n, const EdgeList& edges) {
  int best = 0;
  for (int h = 1; h < n; ++h) {
    if (ordered_sequences(n, edges, h).empty()) break;
    best = h;
  }
  return best;
}

// Index formulas written out independently of the library.
inline double connectivity(const Seq& s) {
  double p = 1;
  for (int d : s) p *= d;
  return 1 / std::sqrt(p);
}
inline double sum_connectivity(const Seq& s) {
  return 1 / std::sqrt(static_cast<double>(std::accumulate(s.begin(), s.end(), 0)));
}
inline double hyper_zagreb(const Seq& s) {
  double p = 1;
  for (int d : s) p *= d;
  return p * p;
}
inline double one(const Seq&) { return 1; }

struct NamedFn {
  std::string name;
  Fn fn;
};

inline std::vector<NamedFn> builtins() {
  return {{"connectivity", connectivity},
          {"sum-connectivity", sum_connectivity},
          {"hyper-zagreb", hyper_zagreb},
          {"path-count", one}};
}

}  // namespace oracle
