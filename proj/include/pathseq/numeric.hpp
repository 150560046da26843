#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>

#include "pathseq/error.hpp"

namespace pathseq {

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kRoundingResidualLimit = 1e-6;

/// Hybrid absolute/relative comparison: |a-b| <= tol * max(1, |a|, |b|).
inline bool approx_equal(double a, double b, double tol = kDefaultTolerance) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

/// Deviation of a from b in units of the hybrid scale.
inline double scaled_difference(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::InvalidArgument, "path count overflows 64-bit integer");
  }
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::InvalidArgument, "path count overflows 64-bit integer");
  }
  return out;
}

/// Shortest decimal string that round-trips to the same double.
inline std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), result.ptr);
}

}  // namespace pathseq
