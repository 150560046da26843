#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pathseq/error.hpp"

namespace pathseq {

using Vertex = std::uint32_t;
using Degree = int;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Caps the number of DFS node expansions an exhaustive search may perform.
/// Exceeding the cap raises BudgetExceeded; results are never truncated.
class Budget {
 public:
  explicit Budget(std::uint64_t cap = kDefaultBudget) : cap_(cap) {}

  void spend() {
    if (++used_ > cap_) {
      throw Error(ErrorKind::BudgetExceeded,
                  "node-expansion budget of " + std::to_string(cap_) + " exceeded");
    }
  }

  std::uint64_t cap() const noexcept { return cap_; }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

/// Simple connected undirected graph. Immutable once built.
class Graph {
 public:
  /// Validates and builds. Throws SelfLoop, DuplicateEdge, VertexOutOfRange,
  /// Disconnected, or InvalidGraph (fewer than two vertices).
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n < 2) {
      throw Error(ErrorKind::InvalidGraph,
                  "graph needs at least 2 vertices, got " + std::to_string(n));
    }
    std::vector<std::vector<Vertex>> adj(n);
    for (const auto& [u, v] : edges) {
      const std::string edge_str = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
      if (u >= n || v >= n) {
        throw Error(ErrorKind::VertexOutOfRange,
                    "edge " + edge_str + " references a vertex outside [0," +
                        std::to_string(n) + ")");
      }
      if (u == v) {
        throw Error(ErrorKind::SelfLoop, "self-loop at edge " + edge_str);
      }
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& nbrs = adj[v];
      std::sort(nbrs.begin(), nbrs.end());
      const auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
      if (dup != nbrs.end()) {
        throw Error(ErrorKind::DuplicateEdge, "duplicate edge (" + std::to_string(v) + "," +
                                                  std::to_string(*dup) + ")");
      }
    }
    Graph g(std::move(adj), edges.size());
    g.require_connected();
    return g;
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  Degree degree(Vertex v) const { return static_cast<Degree>(adj_[v].size()); }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  Graph(std::vector<std::vector<Vertex>> adj, std::size_t m)
      : adj_(std::move(adj)), edge_count_(m) {}

  void require_connected() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adj_[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    const auto it = std::find(seen.begin(), seen.end(), 0);
    if (it != seen.end()) {
      throw Error(ErrorKind::Disconnected,
                  "graph is disconnected: vertex " +
                      std::to_string(std::distance(seen.begin(), it)) +
                      " is unreachable from vertex 0");
    }
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Degree sequence of a path in canonical orientation: lexicographically no
/// greater than its reverse. This is the key of the path census.
class PathClass {
 public:
  PathClass() = default;

  explicit PathClass(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
    if (std::lexicographical_compare(degrees_.rbegin(), degrees_.rend(), degrees_.begin(),
                                     degrees_.end())) {
      std::reverse(degrees_.begin(), degrees_.end());
    }
  }

  std::span<const Degree> degrees() const noexcept { return degrees_; }
  std::size_t order() const noexcept { return degrees_.empty() ? 0 : degrees_.size() - 1; }

  auto operator<=>(const PathClass&) const = default;
  bool operator==(const PathClass&) const = default;

 private:
  std::vector<Degree> degrees_;
};

/// Number of length-h paths per canonical degree sequence.
class Census {
 public:
  explicit Census(int order = 0) : order_(order) {}

  int order() const noexcept { return order_; }
  const std::map<PathClass, std::uint64_t>& entries() const noexcept { return entries_; }

  void add(const PathClass& key, std::uint64_t count) {
    if (count == 0) return;
    entries_[key] += count;
  }

  std::uint64_t count(const PathClass& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
  }

  std::uint64_t total() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0},
                           [](std::uint64_t acc, const auto& kv) { return acc + kv.second; });
  }

  bool operator==(const Census&) const = default;

 private:
  int order_;
  std::map<PathClass, std::uint64_t> entries_;
};

namespace detail {

template <typename Visitor>
void extend_paths(const Graph& g, std::vector<Vertex>& path, std::vector<char>& on_path,
                  int remaining, Budget& budget, Visitor& visit) {
  if (remaining == 0) {
    if (path.front() <= path.back()) visit(std::span<const Vertex>(path));
    return;
  }
  for (Vertex w : g.neighbors(path.back())) {
    if (on_path[w]) continue;
    budget.spend();
    on_path[w] = 1;
    path.push_back(w);
    extend_paths(g, path, on_path, remaining - 1, budget, visit);
    path.pop_back();
    on_path[w] = 0;
  }
}

inline int deepest_extension(const Graph& g, std::vector<char>& on_path, Vertex tip, int depth,
                             int ceiling, Budget& budget) {
  int best = depth;
  for (Vertex w : g.neighbors(tip)) {
    if (on_path[w]) continue;
    budget.spend();
    on_path[w] = 1;
    best = std::max(best, deepest_extension(g, on_path, w, depth + 1, ceiling, budget));
    on_path[w] = 0;
    if (best == ceiling) break;
  }
  return best;
}

}  // namespace detail

/// Calls visit(span of vertices) once per undirected path of length h, in the
/// orientation whose first endpoint index is no greater than the last.
template <typename Visitor>
void enumerate_paths(const Graph& g, int h, Visitor&& visit, Budget& budget) {
  if (h < 0) throw Error(ErrorKind::InvalidArgument, "path length must be >= 0");
  if (static_cast<std::size_t>(h) >= g.vertex_count()) return;
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(h) + 1);
  std::vector<char> on_path(g.vertex_count(), 0);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    budget.spend();
    path.assign(1, s);
    on_path[s] = 1;
    detail::extend_paths(g, path, on_path, h, budget, visit);
    on_path[s] = 0;
  }
}

template <typename Visitor>
void enumerate_paths(const Graph& g, int h, Visitor&& visit) {
  Budget budget;
  enumerate_paths(g, h, std::forward<Visitor>(visit), budget);
}

inline std::vector<std::vector<Vertex>> collect_paths(const Graph& g, int h,
                                                      std::uint64_t budget_cap = kDefaultBudget) {
  std::vector<std::vector<Vertex>> out;
  Budget budget(budget_cap);
  enumerate_paths(
      g, h, [&](std::span<const Vertex> p) { out.emplace_back(p.begin(), p.end()); }, budget);
  return out;
}

inline Census path_census(const Graph& g, int h, Budget& budget) {
  Census census(h);
  std::vector<Degree> degrees;
  enumerate_paths(
      g, h,
      [&](std::span<const Vertex> p) {
        degrees.clear();
        for (Vertex v : p) degrees.push_back(g.degree(v));
        census.add(PathClass(degrees), 1);
      },
      budget);
  return census;
}

inline Census path_census(const Graph& g, int h, std::uint64_t budget_cap = kDefaultBudget) {
  Budget budget(budget_cap);
  return path_census(g, h, budget);
}

/// Exact length of a longest path, by exhaustive search.
inline int longest_path_length(const Graph& g, std::uint64_t budget_cap = kDefaultBudget) {
  Budget budget(budget_cap);
  const int ceiling = static_cast<int>(g.vertex_count()) - 1;
  std::vector<char> on_path(g.vertex_count(), 0);
  int best = 0;
  for (Vertex s = 0; s < g.vertex_count() && best < ceiling; ++s) {
    on_path[s] = 1;
    best = std::max(best, detail::deepest_extension(g, on_path, s, 0, ceiling, budget));
    on_path[s] = 0;
  }
  return best;
}

}  // namespace pathseq
