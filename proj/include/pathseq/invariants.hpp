#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathseq/error.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/numeric.hpp"

namespace pathseq {

/// A real-valued function on positive-integer sequences that does not change
/// when the sequence is reversed. Evaluated on canonical path classes only.
class InvariantFunction {
 public:
  using Fn = std::function<double(std::span<const Degree>)>;

  InvariantFunction(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  const std::string& name() const noexcept { return name_; }

  double operator()(std::span<const Degree> seq) const { return fn_(seq); }
  double operator()(std::initializer_list<Degree> seq) const {
    return fn_(std::span<const Degree>(seq.begin(), seq.size()));
  }
  double operator()(const PathClass& cls) const { return fn_(cls.degrees()); }

 private:
  std::string name_;
  Fn fn_;
};

namespace detail {

inline double degree_product(std::span<const Degree> seq) {
  double p = 1.0;
  for (Degree d : seq) p *= d;
  return p;
}

inline double degree_sum(std::span<const Degree> seq) {
  double s = 0.0;
  for (Degree d : seq) s += d;
  return s;
}

}  // namespace detail

/// Built-in indices: connectivity, sum-connectivity, hyper-zagreb, path-count,
/// and power (which needs the exponent parameter).
inline InvariantFunction builtin(std::string_view name, std::optional<double> param = {}) {
  if (name == "connectivity") {
    return {"connectivity",
            [](std::span<const Degree> s) { return 1.0 / std::sqrt(detail::degree_product(s)); }};
  }
  if (name == "sum-connectivity") {
    return {"sum-connectivity",
            [](std::span<const Degree> s) { return 1.0 / std::sqrt(detail::degree_sum(s)); }};
  }
  if (name == "hyper-zagreb") {
    return {"hyper-zagreb", [](std::span<const Degree> s) {
              const double p = detail::degree_product(s);
              return p * p;
            }};
  }
  if (name == "path-count") {
    return {"path-count", [](std::span<const Degree>) { return 1.0; }};
  }
  if (name == "power") {
    if (!param) {
      throw Error(ErrorKind::MissingParameter, "index 'power' requires an exponent, e.g. power:0.5");
    }
    const double alpha = *param;
    return {"power:" + format_double(alpha), [alpha](std::span<const Degree> s) {
              return std::pow(detail::degree_product(s), alpha);
            }};
  }
  throw Error(ErrorKind::UnknownIndex, "unknown index '" + std::string(name) + "'");
}

/// Randomized reversal-symmetry check on `trials` sequences of length 1..9
/// with entries in 1..64. Throws AsymmetricFunction on the first violation.
inline void validate_symmetry(const InvariantFunction& f, std::uint64_t seed, int trials = 1000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length_dist(1, 9);
  std::uniform_int_distribution<Degree> degree_dist(1, 64);
  std::vector<Degree> seq;
  for (int trial = 0; trial < trials; ++trial) {
    seq.resize(static_cast<std::size_t>(length_dist(rng)));
    for (auto& d : seq) d = degree_dist(rng);
    const double forward = f(seq);
    const std::vector<Degree> rev(seq.rbegin(), seq.rend());
    const double backward = f(rev);
    const bool both_nan = std::isnan(forward) && std::isnan(backward);
    if (!both_nan && !approx_equal(forward, backward, 1e-12)) {
      std::string shown;
      for (Degree d : seq) shown += (shown.empty() ? "" : ",") + std::to_string(d);
      throw Error(ErrorKind::AsymmetricFunction, "function '" + f.name() +
                                                     "' is not reversal-symmetric on (" + shown +
                                                     ")");
    }
  }
}

/// Name -> function table. Built-ins are preloaded; user functions are
/// admitted only after passing validate_symmetry.
class InvariantRegistry {
 public:
  InvariantRegistry() {
    for (const char* name : {"connectivity", "sum-connectivity", "hyper-zagreb", "path-count"}) {
      table_.emplace(name, builtin(name));
    }
  }

  void add(const std::string& name, InvariantFunction::Fn fn, std::uint64_t seed = 0) {
    InvariantFunction f(name, std::move(fn));
    validate_symmetry(f, seed);
    table_.insert_or_assign(name, std::move(f));
  }

  bool contains(std::string_view name) const { return table_.count(std::string(name)) > 0; }

  /// Resolves a CLI-style identifier, including "power:<alpha>".
  InvariantFunction resolve(std::string_view identifier, std::uint64_t seed = 0) const {
    if (identifier == "power" || identifier.starts_with("power:")) {
      if (identifier == "power" || identifier.size() == 6) return builtin("power");
      const std::string text(identifier.substr(6));
      std::size_t used = 0;
      double alpha = 0.0;
      try {
        alpha = std::stod(text, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != text.size() || !std::isfinite(alpha)) {
        throw Error(ErrorKind::UnknownIndex, "bad power exponent '" + text + "'");
      }
      auto f = builtin("power", alpha);
      validate_symmetry(f, seed);
      return f;
    }
    const auto it = table_.find(std::string(identifier));
    if (it == table_.end()) {
      throw Error(ErrorKind::UnknownIndex, "unknown index '" + std::string(identifier) + "'");
    }
    return it->second;
  }

 private:
  std::map<std::string, InvariantFunction, std::less<>> table_;
};

/// Values of ^hI_f for h = 0..h_max.
struct InvariantProfile {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t h) const { return values[h]; }
  bool operator==(const InvariantProfile&) const = default;
};

/// Sum of count * f(class) over the census.
inline double evaluate_census(const Census& census, const InvariantFunction& f) {
  double total = 0.0;
  for (const auto& [cls, count] : census.entries()) {
    total += static_cast<double>(count) * f(cls);
  }
  return total;
}

inline double evaluate_invariant(const Graph& g, int h, const InvariantFunction& f,
                                 std::uint64_t budget_cap = kDefaultBudget) {
  return evaluate_census(path_census(g, h, budget_cap), f);
}

inline InvariantProfile invariant_profile(const Graph& g, const InvariantFunction& f, int h_max,
                                          std::uint64_t budget_cap = kDefaultBudget) {
  if (h_max < 0) throw Error(ErrorKind::InvalidArgument, "h_max must be >= 0");
  Budget budget(budget_cap);
  InvariantProfile profile;
  profile.values.reserve(static_cast<std::size_t>(h_max) + 1);
  for (int h = 0; h <= h_max; ++h) {
    profile.values.push_back(evaluate_census(path_census(g, h, budget), f));
  }
  return profile;
}

}  // namespace pathseq
