#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pathseq/error.hpp"
#include "pathseq/generalized.hpp"
#include "pathseq/invariants.hpp"
#include "pathseq/numeric.hpp"
#include "pathseq/starlike.hpp"

namespace pathseq {

inline constexpr int kDefaultConditionXMax = 64;
inline constexpr int kDefaultConditionTMax = 32;

/// Outcome of one scanned inequality. The counterexample is (x, y) for
/// condition (a) and (t, x) for condition (b).
struct ConditionOutcome {
  bool pass = true;
  std::optional<std::pair<std::int64_t, std::int64_t>> counterexample;
  double min_margin = INFINITY;
};

struct ConditionReport {
  int theorem = 7;
  ConditionOutcome condition_a;
  ConditionOutcome condition_b;
  int x_max = kDefaultConditionXMax;
  int t_max = kDefaultConditionTMax;
  double tolerance = kDefaultTolerance;

  bool pass() const { return condition_a.pass && condition_b.pass; }
};

namespace detail {

inline void record(ConditionOutcome& out, double lhs, double rhs, double tol, std::int64_t p,
                   std::int64_t q) {
  const double margin = scaled_difference(lhs, rhs);
  if (!(margin >= out.min_margin)) out.min_margin = margin;
  if (!(margin > tol) && out.pass) {
    out.pass = false;
    out.counterexample = std::make_pair(p, q);
  }
}

inline void validate_domain(int x_max, int t_max) {
  if (x_max < 4) throw Error(ErrorKind::InvalidArgument, "x_max must be >= 4");
  if (t_max < 0) throw Error(ErrorKind::InvalidArgument, "t_max must be >= 0");
}

/// g_t(x) = f(x, 2^t, 1) - f(x, 2^(t+1))
inline double g_t(const InvariantFunction& f, int t, Degree x) {
  return f(PathClass(runs({{x, 1}, {2, t}, {1, 1}}))) - f(PathClass(runs({{x, 1}, {2, t + 1}})));
}

/// Condition (b), shared by both checks: g_t(x) != g_t(2) for x >= 3.
inline ConditionOutcome scan_condition_b(const InvariantFunction& f, int x_max, int t_max,
                                         double tol) {
  ConditionOutcome out;
  for (int t = 0; t <= t_max; ++t) {
    const double at_two = g_t(f, t, 2);
    for (int x = 3; x <= x_max; ++x) record(out, g_t(f, t, x), at_two, tol, t, x);
  }
  return out;
}

}  // namespace detail

/// Bounded certificate for the starlike reconstruction conditions:
/// (a) (f(x) - f(y)) / (x - y) != f(2) - f(1) for 3 <= x < y <= x_max, and (b).
inline ConditionReport check_t7_conditions(const InvariantFunction& f,
                                           int x_max = kDefaultConditionXMax,
                                           int t_max = kDefaultConditionTMax,
                                           double tol = kDefaultTolerance) {
  detail::validate_domain(x_max, t_max);
  ConditionReport report{7, {}, {}, x_max, t_max, tol};
  const double rhs = f({2}) - f({1});
  for (int x = 3; x <= x_max; ++x) {
    for (int y = x + 1; y <= x_max; ++y) {
      const double lhs = (f({x}) - f({y})) / (x - y);
      detail::record(report.condition_a, lhs, rhs, tol, x, y);
    }
  }
  report.condition_b = detail::scan_condition_b(f, x_max, t_max, tol);
  return report;
}

/// Same as check_t7_conditions with (a) replaced by
/// (x f(x) - y f(y)) / (x - y) != f(1).
inline ConditionReport check_t8_conditions(const InvariantFunction& f,
                                           int x_max = kDefaultConditionXMax,
                                           int t_max = kDefaultConditionTMax,
                                           double tol = kDefaultTolerance) {
  detail::validate_domain(x_max, t_max);
  ConditionReport report{8, {}, {}, x_max, t_max, tol};
  const double rhs = f({1});
  for (int x = 3; x <= x_max; ++x) {
    for (int y = x + 1; y <= x_max; ++y) {
      const double lhs = (x * f({x}) - y * f({y})) / (x - y);
      detail::record(report.condition_a, lhs, rhs, tol, x, y);
    }
  }
  report.condition_b = detail::scan_condition_b(f, x_max, t_max, tol);
  return report;
}

template <typename Spec>
struct ReconstructionResult {
  Spec spec;
  std::vector<double> residuals;

  double max_residual() const {
    double worst = 0.0;
    for (double r : residuals) worst = std::max(worst, r);
    return worst;
  }
};

namespace detail {

/// Solves value = lambda + mu * L for a non-negative integer L.
inline std::int64_t solve_branch_count(double value, double lambda, double mu, int h, double tol) {
  if (mu == 0.0 || !std::isfinite(mu)) {
    throw Error(ErrorKind::InvalidArgument,
                "slope in L_" + std::to_string(h) + " vanishes; f violates condition (b)");
  }
  const double exact = (value - lambda) / mu;
  const double rounded = std::round(exact);
  if (!std::isfinite(exact) || std::abs(exact - rounded) > kRoundingResidualLimit ||
      rounded < 0 || !approx_equal(lambda + mu * rounded, value, tol)) {
    throw Error(ErrorKind::NonIntegerBranchCount,
                "profile at h=" + std::to_string(h) + " implies L_" + std::to_string(h) + " = " +
                    format_double(exact) + ", not a non-negative integer");
  }
  return static_cast<std::int64_t>(rounded);
}

template <typename Candidates>
std::int64_t unique_candidate(const Candidates& matches, const char* what) {
  if (matches.empty()) {
    throw Error(ErrorKind::NoCandidateRoot,
                std::string("no ") + what + " reproduces the zeroth-order value");
  }
  if (matches.size() > 1) {
    throw Error(ErrorKind::AmbiguousRoot, std::string("several ") + what + " values (" +
                                              std::to_string(matches[0]) + ", " +
                                              std::to_string(matches[1]) +
                                              ") reproduce the zeroth-order value");
  }
  return matches.front();
}

inline std::vector<double> residuals_against(const InvariantProfile& input,
                                             const InvariantProfile& rebuilt, double tol) {
  std::vector<double> out;
  for (std::size_t h = 0; h < input.size(); ++h) {
    out.push_back(std::abs(input[h] - rebuilt[h]));
    if (!approx_equal(input[h], rebuilt[h], tol)) {
      throw Error(ErrorKind::ProfileMismatch,
                  "reconstructed tree disagrees with the profile at h=" + std::to_string(h) +
                      " (" + format_double(input[h]) + " vs " + format_double(rebuilt[h]) + ")");
    }
  }
  return out;
}

}  // namespace detail

/// Recovers a starlike tree from n and its invariant profile: m from ^0 by
/// integer scan, then L_1, L_2, ... from the affine dependence of ^hI_f on L_h.
/// The result is re-simulated against every profile entry.
inline ReconstructionResult<StarlikeSpec> reconstruct_starlike(std::int64_t n,
                                                               const InvariantProfile& profile,
                                                               const InvariantFunction& f,
                                                               double tol = kDefaultTolerance) {
  if (profile.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty profile");
  std::vector<std::int64_t> matches;
  for (std::int64_t m = 3; m <= n - 1; ++m) {
    BranchSummary probe{n, m, {}};
    if (approx_equal(starlike_invariant(probe, 0, f), profile[0], tol)) matches.push_back(m);
  }
  BranchSummary summary{n, detail::unique_candidate(matches, "root degree"), {0}};

  for (int h = 1; summary.weighted_prefix(h - 1) != n - 1; ++h) {
    if (static_cast<std::size_t>(h) >= profile.size()) {
      throw Error(ErrorKind::BudgetMismatch,
                  "profile ends at h=" + std::to_string(profile.size() - 1) +
                      " but branches account for only " +
                      std::to_string(summary.weighted_prefix(h - 1)) + " of " +
                      std::to_string(n - 1) + " edges");
    }
    summary.set(h, 0);
    const double lambda = starlike_invariant(summary, h, f);
    const double mu = mu_coefficient(f, h, summary.m);
    summary.set(h, detail::solve_branch_count(profile[h], lambda, mu, h, tol));
    if (summary.weighted_prefix(h) > n - 1 || summary.prefix(h) > summary.m) {
      throw Error(ErrorKind::BudgetMismatch,
                  "branch counts up to h=" + std::to_string(h) + " exceed n-1 edges or m branches");
    }
  }
  const int t = static_cast<int>(summary.lengths.size()) - 1;
  if (summary.prefix(t) != summary.m) {
    throw Error(ErrorKind::BudgetMismatch, "recovered " + std::to_string(summary.prefix(t)) +
                                               " branches but the root has degree " +
                                               std::to_string(summary.m));
  }
  StarlikeSpec::BranchCounts counts;
  for (int l = 1; l <= t; ++l) counts[l] = summary.count(l);
  auto spec = StarlikeSpec::from_counts(counts);
  const auto rebuilt = starlike_profile(spec, f, static_cast<int>(profile.size()) - 1);
  return {spec, detail::residuals_against(profile, rebuilt, tol)};
}

/// Generalized-family analogue: n1 from ^0 by scan over [3, r-2] (with
/// m = r - n1 + 1), then the same L_h ladder on the star part.
inline ReconstructionResult<GenStarlikeSpec> reconstruct_generalized(
    std::int64_t n, std::int64_t r, const InvariantProfile& profile, const InvariantFunction& f,
    double tol = kDefaultTolerance) {
  if (profile.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty profile");
  std::vector<std::int64_t> matches;
  for (std::int64_t n1 = 3; n1 <= r - 2; ++n1) {
    const std::int64_t m = r - n1 + 1;
    const std::int64_t n2 = n - n1 + 1;
    if (n2 < m + 1) continue;
    GenBranchSummary probe{n1, BranchSummary{n2, m, {}}};
    if (approx_equal(generalized_invariant(probe, 0, f), profile[0], tol)) matches.push_back(n1);
  }
  const std::int64_t n1 = detail::unique_candidate(matches, "clique size");
  GenBranchSummary summary{n1, BranchSummary{n - n1 + 1, r - n1 + 1, {0}}};
  auto& star = summary.star;

  for (int h = 1; star.weighted_prefix(h - 1) != star.n - 1; ++h) {
    if (static_cast<std::size_t>(h) >= profile.size()) {
      throw Error(ErrorKind::BudgetMismatch, "profile ends at h=" +
                                                 std::to_string(profile.size() - 1) +
                                                 " before the branches are complete");
    }
    star.set(h, 0);
    const double lambda = generalized_invariant(summary, h, f);
    const double mu = generalized_mu(f, h, star.m, n1);
    star.set(h, detail::solve_branch_count(profile[h], lambda, mu, h, tol));
    if (star.weighted_prefix(h) > star.n - 1 || star.prefix(h) > star.m) {
      throw Error(ErrorKind::BudgetMismatch,
                  "branch counts up to h=" + std::to_string(h) + " exceed the star part");
    }
  }
  const int t = static_cast<int>(star.lengths.size()) - 1;
  if (star.prefix(t) != star.m) {
    throw Error(ErrorKind::BudgetMismatch, "recovered branch count does not match root degree");
  }
  StarlikeSpec::BranchCounts counts;
  for (int l = 1; l <= t; ++l) counts[l] = star.count(l);
  auto spec = GenStarlikeSpec::create(n1, StarlikeSpec::from_counts(counts));
  const auto rebuilt = generalized_profile(spec, f, static_cast<int>(profile.size()) - 1);
  return {spec, detail::residuals_against(profile, rebuilt, tol)};
}

struct DistinguishResult {
  std::optional<int> separating_order;  // empty: indistinguishable up to max_order
  int max_order = 0;
  std::vector<double> differences;      // |^hI_f(a) - ^hI_f(b)| for h = 0..max_order
};

namespace detail {

inline DistinguishResult compare_profiles(const InvariantProfile& a, const InvariantProfile& b,
                                          double tol) {
  DistinguishResult out;
  out.max_order = static_cast<int>(a.size()) - 1;
  for (std::size_t h = 0; h < a.size(); ++h) {
    out.differences.push_back(std::abs(a[h] - b[h]));
    if (!out.separating_order && !approx_equal(a[h], b[h], tol)) {
      out.separating_order = static_cast<int>(h);
    }
  }
  return out;
}

}  // namespace detail

inline DistinguishResult distinguish(const StarlikeSpec& a, const StarlikeSpec& b,
                                     const InvariantFunction& f, double tol = kDefaultTolerance) {
  if (a.vertex_count() != b.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, "vertex counts differ: " +
                                             std::to_string(a.vertex_count()) + " vs " +
                                             std::to_string(b.vertex_count()));
  }
  const int top = std::max(a.longest_path(), b.longest_path());
  return detail::compare_profiles(starlike_profile(a, f, top), starlike_profile(b, f, top), tol);
}

inline DistinguishResult distinguish(const GenStarlikeSpec& a, const GenStarlikeSpec& b,
                                     const InvariantFunction& f, double tol = kDefaultTolerance) {
  if (a.vertex_count() != b.vertex_count() || a.max_degree() != b.max_degree()) {
    throw Error(ErrorKind::SizeMismatch,
                "generalized specs must share n and r: (" + std::to_string(a.vertex_count()) +
                    "," + std::to_string(a.max_degree()) + ") vs (" +
                    std::to_string(b.vertex_count()) + "," + std::to_string(b.max_degree()) + ")");
  }
  const int top = std::max(a.longest_path(), b.longest_path());
  return detail::compare_profiles(generalized_profile(a, f, top), generalized_profile(b, f, top),
                                  tol);
}

inline DistinguishResult distinguish(const TreeSpec& a, const TreeSpec& b,
                                     const InvariantFunction& f, double tol = kDefaultTolerance) {
  if (a.index() != b.index()) {
    throw Error(ErrorKind::FamilyMismatch, "cannot compare a starlike and a generalized spec");
  }
  return std::visit(
      [&](const auto& lhs) {
        using Spec = std::decay_t<decltype(lhs)>;
        return distinguish(lhs, std::get<Spec>(b), f, tol);
      },
      a);
}

/// All starlike trees on n vertices: partitions of n-1 into at least 3 parts,
/// in increasing spec order.
inline std::vector<StarlikeSpec> all_starlike_specs(std::int64_t n) {
  std::vector<StarlikeSpec> out;
  std::vector<int> parts;
  const auto recurse = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      if (parts.size() >= 3) out.push_back(StarlikeSpec::from_lengths(parts));
      return;
    }
    for (int p = std::min(remaining, largest); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, p);
      parts.pop_back();
    }
  };
  if (n >= 4) recurse(recurse, static_cast<int>(n - 1), static_cast<int>(n - 1));
  std::sort(out.begin(), out.end());
  return out;
}

/// All coalesced specs with n vertices and maximum degree r, n1 in [3, r-2].
inline std::vector<GenStarlikeSpec> all_generalized_specs(std::int64_t n, std::int64_t r) {
  std::vector<GenStarlikeSpec> out;
  for (std::int64_t n1 = 3; n1 <= r - 2; ++n1) {
    const std::int64_t m = r - n1 + 1;
    for (const auto& star : all_starlike_specs(n - n1 + 1)) {
      if (star.root_degree() == m) out.push_back(GenStarlikeSpec::create(n1, star));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct SurveyReport {
  std::size_t specs = 0;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<TreeSpec, TreeSpec>> collisions;
};

namespace detail {

template <typename Spec, typename ProfileFn>
SurveyReport survey(const std::vector<Spec>& specs, ProfileFn&& profile_of, double tol,
                    std::uint64_t budget_cap) {
  SurveyReport report;
  report.specs = specs.size();
  const std::uint64_t pairs = specs.size() * (specs.size() - (specs.empty() ? 0 : 1)) / 2;
  std::uint64_t work = 0;
  for (const auto& s : specs) work += static_cast<std::uint64_t>(s.longest_path()) + 1;
  if (work + pairs > budget_cap) {
    throw Error(ErrorKind::BudgetExceeded, "survey of " + std::to_string(specs.size()) +
                                               " specs exceeds the budget of " +
                                               std::to_string(budget_cap));
  }
  int top = 0;
  for (const auto& s : specs) top = std::max(top, s.longest_path());
  std::vector<InvariantProfile> profiles;
  profiles.reserve(specs.size());
  for (const auto& s : specs) profiles.push_back(profile_of(s, top));

  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (std::size_t j = i + 1; j < specs.size(); ++j) {
      ++report.pairs_checked;
      const auto cmp = compare_profiles(profiles[i], profiles[j], tol);
      if (!cmp.separating_order) report.collisions.emplace_back(specs[i], specs[j]);
    }
  }
  return report;
}

}  // namespace detail

/// Profiles every starlike tree on n vertices and reports pairs that no
/// order h <= rho separates.
inline SurveyReport survey_starlike(std::int64_t n, const InvariantFunction& f,
                                    double tol = kDefaultTolerance,
                                    std::uint64_t budget_cap = kDefaultBudget) {
  return detail::survey(
      all_starlike_specs(n),
      [&](const StarlikeSpec& s, int top) { return starlike_profile(s, f, top); }, tol,
      budget_cap);
}

inline SurveyReport survey_generalized(std::int64_t n, std::int64_t r, const InvariantFunction& f,
                                       double tol = kDefaultTolerance,
                                       std::uint64_t budget_cap = kDefaultBudget) {
  return detail::survey(
      all_generalized_specs(n, r),
      [&](const GenStarlikeSpec& s, int top) { return generalized_profile(s, f, top); }, tol,
      budget_cap);
}

}  // namespace pathseq
