#pragma once

// Reproducible random rational measures.
//
// Each weight is a uniform integer in [0, grid] drawn from std::mt19937_64 by
// rejection (a raw 64-bit draw x is accepted when x < (2^64 / (grid+1)) *
// (grid+1) and mapped to x mod (grid+1)); the weights are divided by their
// sum, and an all-zero draw is redrawn. Because only the raw engine output is
// used, a seed gives the same measures on every standard library.

#include "hgforge/cube.hpp"
#include "hgforge/groups.hpp"

#include <cstdint>
#include <random>

namespace hgforge {

inline constexpr std::uint64_t kDefaultGrid = 1000;

class MeasureSampler {
 public:
  explicit MeasureSampler(std::uint64_t seed, std::uint64_t grid = kDefaultGrid);

  /// Any measure on n states, possibly degenerate for a given group.
  Measure<Rational> sample(std::size_t n);

  /// Rejection-samples until derive_cube(table, m) satisfies condition (A).
  /// Throws Error after max_attempts consecutive degenerate draws.
  Measure<Rational> sample_nondegenerate(const CayleyTable& table, std::size_t max_attempts = 1000);

  /// Rejection-samples a measure whose n values are pairwise distinct and
  /// nonzero (and non-degenerate for the table).
  Measure<Rational> sample_distinct(const CayleyTable& table, std::size_t max_attempts = 1000);

  std::uint64_t uniform(std::uint64_t bound_inclusive);

 private:
  std::mt19937_64 engine_;
  std::uint64_t grid_;
};

/// Uniform measure on the subgroup given by a membership mask.
Measure<Rational> uniform_on(const std::vector<bool>& members);

/// All subgroups of the table as membership masks, trivial and whole group
/// included, in order of first discovery by generator search.
std::vector<std::vector<bool>> subgroups(const CayleyTable& table);

}  // namespace hgforge
