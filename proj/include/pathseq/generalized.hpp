#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pathseq/error.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/invariants.hpp"
#include "pathseq/numeric.hpp"
#include "pathseq/starlike.hpp"

namespace pathseq {

/// K_{n1} coalesced at one clique vertex with the root of a starlike tree.
/// The coalescence vertex has degree r = n1 + m - 1.
class GenStarlikeSpec {
 public:
  GenStarlikeSpec() = default;

  static GenStarlikeSpec create(std::int64_t clique, StarlikeSpec star) {
    if (clique < 3) {
      throw Error(ErrorKind::InvalidSpec,
                  "clique size must be >= 3 (normalize n1 = 2 to a starlike tree), got " +
                      std::to_string(clique));
    }
    GenStarlikeSpec spec;
    spec.clique_ = clique;
    spec.star_ = std::move(star);
    return spec;
  }

  std::int64_t clique_size() const noexcept { return clique_; }
  const StarlikeSpec& star() const noexcept { return star_; }
  std::int64_t vertex_count() const { return clique_ + star_.vertex_count() - 1; }
  std::int64_t max_degree() const { return clique_ + star_.root_degree() - 1; }

  /// Either two branches joined at the root, or a branch plus a Hamiltonian
  /// path of the clique ending at the root.
  int longest_path() const {
    const int t = star_.max_branch();
    const int through_branches = star_.longest_path() - t;
    return t + std::max(through_branches, static_cast<int>(clique_ - 1));
  }

  std::string to_string() const {
    return "K" + std::to_string(clique_) + "+" + star_.to_string();
  }

  auto operator<=>(const GenStarlikeSpec&) const = default;
  bool operator==(const GenStarlikeSpec&) const = default;

 private:
  std::int64_t clique_ = 0;
  StarlikeSpec star_;
};

using TreeSpec = std::variant<StarlikeSpec, GenStarlikeSpec>;

/// Coalescing K_2 only lengthens the root by one pendant edge, so n1 = 2 yields
/// the starlike tree with L_1 incremented.
inline TreeSpec normalize_coalescence(std::int64_t clique, const StarlikeSpec& star) {
  if (clique == 2) {
    auto counts = star.branch_counts();
    ++counts[1];
    return StarlikeSpec::from_counts(counts);
  }
  if (clique < 2) {
    throw Error(ErrorKind::InvalidSpec, "clique size must be >= 2, got " + std::to_string(clique));
  }
  return GenStarlikeSpec::create(clique, star);
}

/// Formal counterpart of GenStarlikeSpec, see BranchSummary.
struct GenBranchSummary {
  std::int64_t clique = 0;
  BranchSummary star;

  static GenBranchSummary of(const GenStarlikeSpec& spec) {
    return {spec.clique_size(), BranchSummary::of(spec.star())};
  }
};

namespace detail {

/// prod_{i=1..k} (n1 - i); zero once a factor vanishes.
inline std::int64_t falling(std::int64_t n1, int k) {
  std::int64_t p = 1;
  for (int i = 1; i <= k; ++i) {
    if (n1 - i <= 0) return 0;
    p = checked_mul(p, n1 - i);
  }
  return p;
}

}  // namespace detail

/// x_0 is vertex 0, the other clique vertices are 1..n1-1, then the branches
/// in increasing length.
inline Graph realize_generalized(const GenStarlikeSpec& spec) {
  std::vector<Edge> edges;
  const auto k = static_cast<Vertex>(spec.clique_size());
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  Vertex next = k;
  for (int length : spec.star().branch_lengths()) {
    Vertex prev = 0;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(spec.vertex_count()), edges);
}

inline std::vector<ClassTerm> generalized_class_terms(const GenBranchSummary& g, int h) {
  const auto& s = g.star;
  const std::int64_t n1 = g.clique;
  const auto k = static_cast<Degree>(n1 - 1);
  const auto r = static_cast<Degree>(s.m + n1 - 1);

  // Paths inside the star part: same counts, root degree raised to r.
  auto terms = starlike_class_terms(s, h, r);
  const auto push = [&](ClassTag tag, int a, std::vector<Degree> seq, std::int64_t count) {
    terms.push_back({CensusClassId{tag, a}, std::move(seq), count});
  };
  using detail::falling;
  using detail::runs;

  // Paths inside the clique.
  push(ClassTag::U, -1, runs({{r, 1}, {k, h}}), falling(n1, h));
  push(ClassTag::V, -1, runs({{k, h + 1}}), falling(n1, h + 1) / 2);
  for (int a = 1; 2 * a <= h; ++a) {
    const std::int64_t ordered = falling(n1, h);
    push(ClassTag::W, a, runs({{k, a}, {r, 1}, {k, h - a}}),
         2 * a == h ? ordered / 2 : ordered);
  }
  // a clique steps, then h-a steps into one branch.
  for (int a = 1; a <= h - 1; ++a) {
    const std::int64_t clique_side = falling(n1, a);
    push(ClassTag::M1, a, runs({{k, a}, {r, 1}, {2, h - a}}),
         checked_mul(clique_side, s.m - s.prefix(h - a)));
    push(ClassTag::M2, a, runs({{k, a}, {r, 1}, {2, h - a - 1}, {1, 1}}),
         checked_mul(clique_side, s.count(h - a)));
  }
  return terms;
}

inline Census generalized_census(const GenStarlikeSpec& spec, int h) {
  if (h < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "closed-form generalized census needs h >= 2; use path_census on the realization");
  }
  return census_from_terms(generalized_class_terms(GenBranchSummary::of(spec), h), h);
}

inline double generalized_invariant(const GenBranchSummary& g, int h, const InvariantFunction& f) {
  if (h < 0) throw Error(ErrorKind::InvalidArgument, "h must be >= 0");
  const auto& s = g.star;
  const double n1 = static_cast<double>(g.clique);
  const double m = static_cast<double>(s.m);
  const double n2 = static_cast<double>(s.n);
  const double l1 = static_cast<double>(s.count(1));
  const auto k = static_cast<Degree>(g.clique - 1);
  const auto r = static_cast<Degree>(s.m + g.clique - 1);
  if (h == 0) return f({r}) + m * f({1}) + (n2 - m - 1) * f({2}) + (n1 - 1) * f({k});
  if (h == 1) {
    return (n1 - 1) * f({r, k}) + (n1 - 1) * (n1 - 2) / 2 * f({k, k}) + l1 * f({r, 1}) +
           (m - l1) * f({r, 2}) + (m - l1) * f({1, 2}) + (n2 - 1 - 2 * m + l1) * f({2, 2});
  }
  return evaluate_terms(generalized_class_terms(g, h), f);
}

inline double generalized_invariant(const GenStarlikeSpec& spec, int h,
                                    const InvariantFunction& f) {
  return generalized_invariant(GenBranchSummary::of(spec), h, f);
}

inline InvariantProfile generalized_profile(const GenStarlikeSpec& spec,
                                            const InvariantFunction& f, int h_max) {
  InvariantProfile profile;
  const auto summary = GenBranchSummary::of(spec);
  for (int h = 0; h <= h_max; ++h) profile.values.push_back(generalized_invariant(summary, h, f));
  return profile;
}

/// Slope of ^hI_f in L_h for the coalesced family; the starlike slope at the
/// raised root degree m + n1 - 1.
inline double generalized_mu(const InvariantFunction& f, int h, std::int64_t m, std::int64_t n1) {
  if (n1 < 3) throw Error(ErrorKind::InvalidArgument, "generalized_mu needs n1 >= 3");
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "generalized_mu needs m >= 3");
  if (h < 1) throw Error(ErrorKind::InvalidArgument, "generalized_mu needs h >= 1");
  const auto r = static_cast<Degree>(m + n1 - 1);
  const auto seq = [&](ClassTag tag) { return PathClass(starlike_class_sequence({tag}, h, r)); };
  return f(seq(ClassTag::X1)) - f(seq(ClassTag::X2)) + f(seq(ClassTag::Y1)) -
         f(seq(ClassTag::Y2));
}

}  // namespace pathseq
