#pragma once

// Structure-constant cubes a_{i,j}(k) of a finite semihypergroup, probability
// measures on its states, and the regular-representation views of the cube.
//
// Storage is dense with k fastest, so the column a_{i,j} and the whole left
// matrix A_i are contiguous and can be exposed as Eigen maps without copying.
// All indices taken by the API are zero-based unless the parameter is a
// StateIndex; everything user facing is reported one-based.

#include "hgforge/errors.hpp"
#include "hgforge/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hgforge {

template <typename Scalar>
using RawCube = std::vector<std::vector<std::vector<Scalar>>>;

struct ValidationIssue {
  enum class Kind { NegativeEntry, ColumnSumNotOne, ShapeMismatch };
  Kind kind;
  // One-based; k is 0 for column-level issues, all zero for shape issues.
  std::size_t i = 0, j = 0, k = 0;
  std::string detail;
};

inline const char* kind_name(ValidationIssue::Kind kind) {
  switch (kind) {
    case ValidationIssue::Kind::NegativeEntry: return "NegativeEntry";
    case ValidationIssue::Kind::ColumnSumNotOne: return "ColumnSumNotOne";
    case ValidationIssue::Kind::ShapeMismatch: return "ShapeMismatch";
  }
  return "?";
}

class InvalidMeasure : public Error {
 public:
  using Error::Error;
};

template <typename Scalar>
class StructureCube;

template <typename Scalar>
struct CubeValidation {
  std::optional<StructureCube<Scalar>> cube;
  std::vector<ValidationIssue> issues;

  bool ok() const { return cube.has_value(); }
};

template <typename Scalar>
CubeValidation<Scalar> validate_cube(std::size_t n, std::vector<Scalar> flat);

/// n x n x n nonnegative, column-stochastic structure constants. Instances
/// only come out of validate_cube, so the invariants always hold.
template <typename Scalar>
class StructureCube {
 public:
  using ColumnMap = Eigen::Map<const Vector<Scalar>>;
  using MatrixMap = Eigen::Map<const Matrix<Scalar>>;

  std::size_t n() const { return n_; }

  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * n_ + j) * n_ + k];
  }

  /// The distribution a_{i,j} = e_i * e_j.
  ColumnMap column(std::size_t i, std::size_t j) const {
    return ColumnMap(data_.data() + (i * n_ + j) * n_, static_cast<Eigen::Index>(n_));
  }

  /// A_i as a view: column j is a_{i,j}.
  MatrixMap left_view(std::size_t i) const {
    const auto n = static_cast<Eigen::Index>(n_);
    return MatrixMap(data_.data() + i * n_ * n_, n, n);
  }

  const std::vector<Scalar>& flat() const { return data_; }

  RawCube<Scalar> to_raw() const {
    RawCube<Scalar> raw(n_, std::vector<std::vector<Scalar>>(n_, std::vector<Scalar>(n_)));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) raw[i][j][k] = (*this)(i, j, k);
    return raw;
  }

  friend bool operator==(const StructureCube& a, const StructureCube& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  StructureCube(std::size_t n, std::vector<Scalar> data) : n_(n), data_(std::move(data)) {}

  friend CubeValidation<Scalar> validate_cube<Scalar>(std::size_t, std::vector<Scalar>);

  std::size_t n_;
  std::vector<Scalar> data_;
};

/// Validates a flat array in (i, j, k) order, k fastest. Every violating entry
/// and column is reported, not only the first.
template <typename Scalar>
CubeValidation<Scalar> validate_cube(std::size_t n, std::vector<Scalar> flat) {
  CubeValidation<Scalar> result;
  if (n == 0 || flat.size() != n * n * n) {
    result.issues.push_back({ValidationIssue::Kind::ShapeMismatch, 0, 0, 0,
                             "expected " + std::to_string(n * n * n) + " entries for n=" +
                                 std::to_string(n) + ", got " + std::to_string(flat.size())});
    return result;
  }
  const Scalar zero(0), one(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Scalar sum(0);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = flat[(i * n + j) * n + k];
        if (v < zero) {
          result.issues.push_back(
              {ValidationIssue::Kind::NegativeEntry, i + 1, j + 1, k + 1, to_string(v)});
        }
        sum += v;
      }
      if (sum != one) {
        result.issues.push_back(
            {ValidationIssue::Kind::ColumnSumNotOne, i + 1, j + 1, 0, to_string(sum)});
      }
    }
  }
  if (result.issues.empty()) result.cube.emplace(StructureCube<Scalar>(n, std::move(flat)));
  return result;
}

/// Validates a nested [i][j][k] array. A ragged array yields ShapeMismatch.
template <typename Scalar>
CubeValidation<Scalar> validate_cube(const RawCube<Scalar>& raw) {
  const std::size_t n = raw.size();
  std::vector<Scalar> flat;
  flat.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      CubeValidation<Scalar> bad;
      bad.issues.push_back({ValidationIssue::Kind::ShapeMismatch, i + 1, 0, 0,
                            "slice " + std::to_string(i + 1) + " has " +
                                std::to_string(raw[i].size()) + " columns, expected " +
                                std::to_string(n)});
      return bad;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (raw[i][j].size() != n) {
        CubeValidation<Scalar> bad;
        bad.issues.push_back({ValidationIssue::Kind::ShapeMismatch, i + 1, j + 1, 0,
                              "column (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") has " + std::to_string(raw[i][j].size()) +
                                  " entries, expected " + std::to_string(n)});
        return bad;
      }
      flat.insert(flat.end(), raw[i][j].begin(), raw[i][j].end());
    }
  }
  return validate_cube<Scalar>(n, std::move(flat));
}

/// Convenience for callers that know the data is valid; throws Error with the
/// first issue otherwise.
template <typename Scalar>
StructureCube<Scalar> make_cube(const RawCube<Scalar>& raw) {
  auto v = validate_cube(raw);
  if (!v.ok()) {
    const auto& issue = v.issues.front();
    throw Error(std::string("invalid cube: ") + kind_name(issue.kind) + " " + issue.detail);
  }
  return std::move(*v.cube);
}

/// Probability measure on n states: nonnegative, total mass exactly one.
template <typename Scalar>
class Measure {
 public:
  /// Throws InvalidMeasure when an entry is negative or the sum is not 1.
  explicit Measure(Vector<Scalar> values) : values_(std::move(values)) {
    if (values_.size() == 0) throw InvalidMeasure("measure must have at least one state");
    Scalar sum(0);
    for (Eigen::Index k = 0; k < values_.size(); ++k) {
      if (values_(k) < Scalar(0))
        throw InvalidMeasure("negative mass " + to_string(values_(k)) + " at state " +
                             std::to_string(k + 1));
      sum += values_(k);
    }
    if (sum != Scalar(1)) throw InvalidMeasure("total mass is " + to_string(sum) + ", not 1");
  }

  static Measure point_mass(std::size_t n, std::size_t state) {
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
    v(static_cast<Eigen::Index>(state)) = Scalar(1);
    return Measure(std::move(v));
  }

  static Measure uniform(std::size_t n) {
    return Measure(Vector<Scalar>::Constant(static_cast<Eigen::Index>(n),
                                            Scalar(1) / Scalar(static_cast<long>(n))));
  }

  std::size_t n() const { return static_cast<std::size_t>(values_.size()); }
  const Vector<Scalar>& values() const { return values_; }
  const Scalar& operator[](std::size_t k) const { return values_(static_cast<Eigen::Index>(k)); }

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.values_.size() == b.values_.size() && a.values_ == b.values_;
  }

 private:
  Vector<Scalar> values_;
};

/// A_i: column j is a_{i,j}.
template <typename Scalar>
Matrix<Scalar> left_matrix(const StructureCube<Scalar>& cube, StateIndex i) {
  return cube.left_view(i.zero_based(cube.n()));
}

/// B_i: column j is a_{j,i}.
template <typename Scalar>
Matrix<Scalar> right_matrix(const StructureCube<Scalar>& cube, StateIndex i) {
  const std::size_t col = i.zero_based(cube.n());
  const auto n = static_cast<Eigen::Index>(cube.n());
  Matrix<Scalar> b(n, n);
  for (Eigen::Index j = 0; j < n; ++j) b.col(j) = cube.column(static_cast<std::size_t>(j), col);
  return b;
}

/// x * y = sum_{i,j} x_i y_j a_{i,j}.
template <typename Scalar>
Measure<Scalar> convolve_measures(const StructureCube<Scalar>& cube, const Measure<Scalar>& x,
                                  const Measure<Scalar>& y) {
  const std::size_t n = cube.n();
  if (x.n() != n) throw DimensionMismatch("convolve_measures: left measure", n, x.n());
  if (y.n() != n) throw DimensionMismatch("convolve_measures: right measure", n, y.n());
  Vector<Scalar> out = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      const Scalar w = x[i] * y[j];
      out += w * cube.column(i, j);
    }
  }
  return Measure<Scalar>(std::move(out));
}

}  // namespace hgforge
