#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pathseq/error.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/invariants.hpp"
#include "pathseq/numeric.hpp"

namespace pathseq {

/// A starlike tree: one root of degree m >= 3 with L_l pendant paths of each
/// length l. Vertex count n = 1 + sum_l l * L_l.
class StarlikeSpec {
 public:
  using BranchCounts = std::map<int, std::int64_t>;

  StarlikeSpec() = default;

  static StarlikeSpec from_counts(const BranchCounts& counts) {
    StarlikeSpec spec;
    for (const auto& [length, count] : counts) {
      if (length < 1) {
        throw Error(ErrorKind::InvalidSpec,
                    "branch length must be >= 1, got " + std::to_string(length));
      }
      if (count < 0) {
        throw Error(ErrorKind::InvalidSpec, "branch count must be >= 0, got " +
                                                std::to_string(count) + " for length " +
                                                std::to_string(length));
      }
      if (count > 0) spec.counts_[length] = count;
    }
    spec.validate();
    return spec;
  }

  static StarlikeSpec from_lengths(std::span<const int> lengths) {
    BranchCounts counts;
    for (int l : lengths) {
      if (l < 1) {
        throw Error(ErrorKind::InvalidSpec, "branch length must be >= 1, got " + std::to_string(l));
      }
      ++counts[l];
    }
    return from_counts(counts);
  }

  static StarlikeSpec from_lengths(std::initializer_list<int> lengths) {
    return from_lengths(std::span<const int>(lengths.begin(), lengths.size()));
  }

  const BranchCounts& branch_counts() const noexcept { return counts_; }

  /// L_l; zero for lengths not present.
  std::int64_t count(int length) const {
    const auto it = counts_.find(length);
    return it == counts_.end() ? 0 : it->second;
  }

  std::int64_t root_degree() const noexcept { return m_; }
  std::int64_t vertex_count() const noexcept { return n_; }
  int max_branch() const noexcept { return counts_.empty() ? 0 : counts_.rbegin()->first; }

  /// Longest path: the two largest branch lengths joined at the root.
  int longest_path() const {
    const auto top = counts_.rbegin();
    if (top->second >= 2) return 2 * top->first;
    return top->first + std::next(top)->first;
  }

  /// Branch lengths in increasing order, repeated by count.
  std::vector<int> branch_lengths() const {
    std::vector<int> out;
    for (const auto& [length, count] : counts_) out.insert(out.end(), count, length);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    for (const auto& [length, count] : counts_) {
      if (out.size() > 1) out += ",";
      out += std::to_string(length) + ":" + std::to_string(count);
    }
    return out + "}";
  }

  auto operator<=>(const StarlikeSpec& other) const { return counts_ <=> other.counts_; }
  bool operator==(const StarlikeSpec& other) const { return counts_ == other.counts_; }

 private:
  void validate() {
    m_ = 0;
    n_ = 1;
    for (const auto& [length, count] : counts_) {
      m_ = checked_add(m_, count);
      n_ = checked_add(n_, checked_mul(length, count));
    }
    if (m_ < 3) {
      throw Error(ErrorKind::InvalidSpec,
                  "starlike root degree must be >= 3, got " + std::to_string(m_));
    }
  }

  BranchCounts counts_;
  std::int64_t m_ = 0;
  std::int64_t n_ = 0;
};

/// The quantities the path census actually depends on: n, m and L_1..L_k.
/// Unlike StarlikeSpec it need not describe a realizable tree, which lets the
/// census be evaluated as a formal affine expression (e.g. with L_h forced to
/// zero during reconstruction).
struct BranchSummary {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<std::int64_t> lengths;  // lengths[l] = L_l; index 0 unused

  static BranchSummary of(const StarlikeSpec& spec) {
    BranchSummary s;
    s.n = spec.vertex_count();
    s.m = spec.root_degree();
    s.lengths.assign(static_cast<std::size_t>(spec.max_branch()) + 1, 0);
    for (const auto& [length, count] : spec.branch_counts()) s.lengths[length] = count;
    return s;
  }

  std::int64_t count(int l) const {
    return (l >= 1 && static_cast<std::size_t>(l) < lengths.size()) ? lengths[l] : 0;
  }

  void set(int l, std::int64_t value) {
    if (static_cast<std::size_t>(l) >= lengths.size()) lengths.resize(l + 1, 0);
    lengths[l] = value;
  }

  /// sum_{i=1..k} L_i
  std::int64_t prefix(int k) const {
    std::int64_t s = 0;
    for (int i = 1; i <= k; ++i) s += count(i);
    return s;
  }

  /// sum_{i=1..k} i * L_i
  std::int64_t weighted_prefix(int k) const {
    std::int64_t s = 0;
    for (int i = 1; i <= k; ++i) s += static_cast<std::int64_t>(i) * count(i);
    return s;
  }
};

enum class ClassTag { X1, X2, Y1, Y2, Z1, Z2, Z3, U, V, W, M1, M2 };

constexpr std::string_view to_string(ClassTag tag) {
  switch (tag) {
    case ClassTag::X1: return "X1";
    case ClassTag::X2: return "X2";
    case ClassTag::Y1: return "Y1";
    case ClassTag::Y2: return "Y2";
    case ClassTag::Z1: return "Z1";
    case ClassTag::Z2: return "Z2";
    case ClassTag::Z3: return "Z3";
    case ClassTag::U: return "U";
    case ClassTag::V: return "V";
    case ClassTag::W: return "W";
    case ClassTag::M1: return "M1";
    case ClassTag::M2: return "M2";
  }
  return "?";
}

/// A named census class, with parameter a for the Z, W and M families.
struct CensusClassId {
  ClassTag tag;
  int a = -1;

  bool operator==(const CensusClassId&) const = default;
};

/// One census class with its (signed, formal) path count.
struct ClassTerm {
  CensusClassId id;
  std::vector<Degree> degrees;
  std::int64_t count;
};

namespace detail {

struct Run {
  Degree value;
  int repeat;
};

inline std::vector<Degree> runs(std::initializer_list<Run> parts) {
  std::vector<Degree> out;
  for (const auto& [value, repeat] : parts) out.insert(out.end(), std::max(repeat, 0), value);
  return out;
}

}  // namespace detail

/// Degree sequence of a starlike class with the root carrying degree `root`.
/// Interior branch vertices have degree 2 and leaves degree 1.
inline std::vector<Degree> starlike_class_sequence(CensusClassId id, int h, Degree root) {
  using detail::runs;
  const int a = id.a;
  switch (id.tag) {
    case ClassTag::X1: return runs({{root, 1}, {2, h - 1}, {1, 1}});
    case ClassTag::X2: return runs({{root, 1}, {2, h}});
    case ClassTag::Y1: return runs({{2, h + 1}});
    case ClassTag::Y2: return runs({{1, 1}, {2, h}});
    case ClassTag::Z1: return runs({{1, 1}, {2, a}, {root, 1}, {2, h - 1 - a}});
    case ClassTag::Z2: return runs({{1, 1}, {2, a}, {root, 1}, {2, h - 2 - a}, {1, 1}});
    case ClassTag::Z3: return runs({{2, a}, {root, 1}, {2, h - a}});
    default: break;
  }
  throw std::logic_error("not a starlike class tag");
}

/// Every starlike class of paths of length h >= 2 with its count, from the
/// three-type decomposition (paths ending at the root, avoiding it, or passing
/// through it). Counts are formal: a non-realizable summary may yield negative
/// values, which the census builders reject.
inline std::vector<ClassTerm> starlike_class_terms(const BranchSummary& s, int h, Degree root) {
  if (h < 2) throw Error(ErrorKind::InvalidArgument, "class decomposition needs h >= 2");
  const std::int64_t m = s.m;
  const auto L = [&](int l) { return s.count(l); };
  const auto S = [&](int k) { return s.prefix(k); };

  std::vector<ClassTerm> terms;
  const auto push = [&](ClassTag tag, int a, std::int64_t count) {
    const CensusClassId id{tag, a};
    terms.push_back({id, starlike_class_sequence(id, h, root), count});
  };

  const std::int64_t beyond_h = m - S(h);
  push(ClassTag::X1, -1, L(h));
  push(ClassTag::X2, -1, beyond_h);
  push(ClassTag::Y1, -1, (s.n - 1) - s.weighted_prefix(h) - (h + 1) * beyond_h);
  push(ClassTag::Y2, -1, beyond_h);

  // Z1(a): leaf of an (a+1)-branch, through the root, h-1-a steps into a branch
  // of length >= h-a. The source branch is itself long enough once 2a >= h-1.
  for (int a = 0; a <= h - 2; ++a) {
    const std::int64_t self = (2 * a < h - 1) ? 0 : 1;
    push(ClassTag::Z1, a, L(a + 1) * (m - self - S(h - a - 1)));
  }
  // Z2(a): leaf to leaf through the root.
  for (int a = 0; 2 * a <= h - 2; ++a) {
    const std::int64_t count = (2 * (a + 1) == h) ? L(a + 1) * (L(a + 1) - 1) / 2
                                                  : L(a + 1) * L(h - a - 1);
    push(ClassTag::Z2, a, count);
  }
  // Z3(a): interior to interior through the root.
  for (int a = 1; 2 * a <= h; ++a) {
    const std::int64_t count = (2 * a == h) ? (m - S(a)) * (m - 1 - S(a)) / 2
                                            : (m - S(h - a)) * (m - 1 - S(a));
    push(ClassTag::Z3, a, count);
  }
  return terms;
}

/// Census from a list of terms; merges classes that canonicalize to the same
/// degree sequence. A negative count means a transcription bug, not bad input.
inline Census census_from_terms(const std::vector<ClassTerm>& terms, int h) {
  Census census(h);
  for (const auto& term : terms) {
    if (term.count < 0) {
      throw std::logic_error("negative count " + std::to_string(term.count) + " for class " +
                             std::string(to_string(term.id.tag)) + "(" +
                             std::to_string(term.id.a) + ") at h=" + std::to_string(h));
    }
    census.add(PathClass(term.degrees), static_cast<std::uint64_t>(term.count));
  }
  return census;
}

/// Sum of count * f over formal terms (counts may be negative).
inline double evaluate_terms(const std::vector<ClassTerm>& terms, const InvariantFunction& f) {
  double total = 0.0;
  for (const auto& term : terms) {
    if (term.count != 0) total += static_cast<double>(term.count) * f(PathClass(term.degrees));
  }
  return total;
}

/// Root is vertex 0; branches follow in increasing length, each a fresh path.
inline Graph realize_starlike(const StarlikeSpec& spec) {
  if (spec.root_degree() < 3) {
    throw Error(ErrorKind::InvalidSpec, "starlike root degree must be >= 3");
  }
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int length : spec.branch_lengths()) {
    Vertex prev = 0;
    for (int i = 0; i < length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(spec.vertex_count()), edges);
}

inline Census starlike_census(const StarlikeSpec& spec, int h) {
  if (h < 2) {
    throw Error(ErrorKind::InvalidArgument,
                "closed-form starlike census needs h >= 2; use path_census on the realization");
  }
  const auto root = static_cast<Degree>(spec.root_degree());
  return census_from_terms(starlike_class_terms(BranchSummary::of(spec), h, root), h);
}

/// ^hI_f of the starlike tree described by a (possibly formal) summary.
inline double starlike_invariant(const BranchSummary& s, int h, const InvariantFunction& f) {
  if (h < 0) throw Error(ErrorKind::InvalidArgument, "h must be >= 0");
  const auto m = static_cast<Degree>(s.m);
  const double n = static_cast<double>(s.n);
  const double md = static_cast<double>(s.m);
  const double l1 = static_cast<double>(s.count(1));
  if (h == 0) return f({m}) + md * f({1}) + (n - md - 1) * f({2});
  if (h == 1) {
    return l1 * f({m, 1}) + (md - l1) * f({m, 2}) + (md - l1) * f({1, 2}) +
           (n - 1 - 2 * md + l1) * f({2, 2});
  }
  return evaluate_terms(starlike_class_terms(s, h, m), f);
}

inline double starlike_invariant(const StarlikeSpec& spec, int h, const InvariantFunction& f) {
  return starlike_invariant(BranchSummary::of(spec), h, f);
}

inline InvariantProfile starlike_profile(const StarlikeSpec& spec, const InvariantFunction& f,
                                         int h_max) {
  InvariantProfile profile;
  const auto summary = BranchSummary::of(spec);
  for (int h = 0; h <= h_max; ++h) profile.values.push_back(starlike_invariant(summary, h, f));
  return profile;
}

/// Slope of ^hI_f in L_h: f(X1) - f(X2) + f(Y1) - f(Y2).
inline double mu_coefficient(const InvariantFunction& f, int h, std::int64_t m) {
  if (h < 1) throw Error(ErrorKind::InvalidArgument, "mu_coefficient needs h >= 1");
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "mu_coefficient needs m >= 3");
  const auto root = static_cast<Degree>(m);
  const auto seq = [&](ClassTag tag) { return PathClass(starlike_class_sequence({tag}, h, root)); };
  return f(seq(ClassTag::X1)) - f(seq(ClassTag::X2)) + f(seq(ClassTag::Y1)) -
         f(seq(ClassTag::Y2));
}

/// Coefficients of L_{h-2}, L_{h-1} and L_h in ^hI_f for h > 4.
struct TailCoefficients {
  double c_h_minus_2;
  double c_h_minus_1;
  double c_h;
};

inline TailCoefficients tail_coefficients(const InvariantFunction& f, int h, std::int64_t m,
                                          std::int64_t l1, std::int64_t l2) {
  if (h <= 4) throw Error(ErrorKind::InvalidArgument, "tail_coefficients needs h > 4");
  if (m < 3) throw Error(ErrorKind::InvalidArgument, "tail_coefficients needs m >= 3");
  const auto root = static_cast<Degree>(m);
  const auto F = [&](ClassTag tag, int a = -1) {
    return f(PathClass(starlike_class_sequence({tag, a}, h, root)));
  };
  const double x2 = F(ClassTag::X2);
  const double y1 = F(ClassTag::Y1);
  const double y2 = F(ClassTag::Y2);
  const double L1 = static_cast<double>(l1);
  const double L2 = static_cast<double>(l2);
  const double mm1 = static_cast<double>(m - 1);

  TailCoefficients c{};
  c.c_h_minus_2 =
      3 * y1 - x2 - y2 +
      L1 * (F(ClassTag::Z3, 1) - F(ClassTag::Z1, 0) + F(ClassTag::Z3, 2) - F(ClassTag::Z1, h - 3)) +
      L2 * (F(ClassTag::Z2, 1) - F(ClassTag::Z1, 1) + F(ClassTag::Z3, 2) - F(ClassTag::Z1, h - 3)) +
      mm1 * (F(ClassTag::Z1, h - 3) - F(ClassTag::Z3, 1) - F(ClassTag::Z3, 2));
  c.c_h_minus_1 =
      2 * y1 - x2 - y2 +
      L1 * (F(ClassTag::Z2, 0) - F(ClassTag::Z1, 0) + F(ClassTag::Z3, 1) - F(ClassTag::Z1, h - 2)) +
      mm1 * (F(ClassTag::Z1, h - 2) - F(ClassTag::Z3, 1));
  c.c_h = mu_coefficient(f, h, m);
  return c;
}

}  // namespace pathseq
