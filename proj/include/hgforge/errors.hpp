#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hgforge {

/// Base for malformed-input errors (shape, dimension, index). Mathematical
/// failures are reported through result types instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected, std::size_t actual)
      : Error(what + ": expected dimension " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t n)
      : Error("state index " + std::to_string(index) + " outside 1.." + std::to_string(n)) {}
};

/// One-based state label e_1..e_n as used in every report.
struct StateIndex {
  std::size_t value;

  constexpr explicit StateIndex(std::size_t one_based) : value(one_based) {}

  static constexpr StateIndex from_zero_based(std::size_t i) { return StateIndex(i + 1); }

  /// Throws IndexOutOfRange unless 1 <= value <= n.
  std::size_t zero_based(std::size_t n) const {
    if (value < 1 || value > n) throw IndexOutOfRange(value, n);
    return value - 1;
  }

  friend constexpr bool operator==(StateIndex, StateIndex) = default;
};

}  // namespace hgforge
