#pragma once

// Exact decision procedures for the semihypergroup axioms, condition (A) and
// the structural identities every group-derived cube satisfies. Reports are
// descriptive: any valid cube can be checked and the witnesses explain why a
// property fails.

#include "hgforge/cube.hpp"
#include "hgforge/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace hgforge {

enum class Property {
  Commutative,
  AssociativeBruteForce,
  AssociativeMatrix,
  ConditionA,
  ColumnMultisets,
  ConstantDiagonals,
  RowColumnMultisets,
  SquareExpansion,
  GroupAxioms,
};

inline const char* property_name(Property p) {
  switch (p) {
    case Property::Commutative: return "commutative";
    case Property::AssociativeBruteForce: return "associative-bruteforce";
    case Property::AssociativeMatrix: return "associative-matrix";
    case Property::ConditionA: return "condition-a";
    case Property::ColumnMultisets: return "column-multisets";
    case Property::ConstantDiagonals: return "constant-diagonals";
    case Property::RowColumnMultisets: return "row-column-multisets";
    case Property::SquareExpansion: return "square-expansion";
    case Property::GroupAxioms: return "group-axioms";
  }
  return "?";
}

struct Witness {
  std::vector<std::size_t> indices;  // one-based
  std::string what;
  std::string expected;
  std::string actual;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct PropertyReport {
  Property property;
  bool holds = true;
  std::size_t violations = 0;  // full count; witnesses may be truncated
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  std::size_t witness_cap = 16;
};

struct ConditionAReport {
  std::size_t distinct_columns = 0;
  std::vector<Eigen::Index> left_ranks;
  std::vector<Eigen::Index> right_ranks;
  bool holds = false;
};

namespace detail {

class WitnessSink {
 public:
  WitnessSink(Property p, const CheckOptions& opts) : cap_(opts.witness_cap) { report_.property = p; }

  void add(Witness w) {
    ++report_.violations;
    report_.holds = false;
    if (report_.witnesses.size() < cap_) report_.witnesses.push_back(std::move(w));
  }

  PropertyReport finish() && { return std::move(report_); }

 private:
  std::size_t cap_;
  PropertyReport report_;
};

template <typename Derived>
std::string vector_string(const Eigen::MatrixBase<Derived>& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (k) out += ", ";
    out += to_string(typename Derived::Scalar(v(k)));
  }
  return out + ")";
}

template <typename Derived>
std::vector<typename Derived::Scalar> sorted_entries(const Eigen::DenseBase<Derived>& v) {
  std::vector<typename Derived::Scalar> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index r = 0; r < v.rows(); ++r)
    for (Eigen::Index c = 0; c < v.cols(); ++c) out.push_back(v(r, c));
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Scalar>
std::string multiset_string(const std::vector<Scalar>& values) {
  std::string out = "{";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += to_string(values[k]);
  }
  return out + "}";
}

inline std::size_t one(std::size_t zero_based) { return zero_based + 1; }

// Accumulates sum_k coeffs(k) * cube.column(k, col) into out, skipping zero
// coefficients (derived cubes are often sparse).
template <typename Scalar, typename Coeffs>
void combine_columns(const StructureCube<Scalar>& cube, const Coeffs& coeffs, std::size_t col,
                     Vector<Scalar>& out) {
  out.setZero(static_cast<Eigen::Index>(cube.n()));
  for (std::size_t k = 0; k < cube.n(); ++k) {
    const Scalar& c = coeffs(static_cast<Eigen::Index>(k));
    if (c != 0) out += c * cube.column(k, col);
  }
}

}  // namespace detail

/// a_{i,j} = a_{j,i} for all i < j.
template <typename Scalar>
PropertyReport is_commutative(const StructureCube<Scalar>& cube, const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::Commutative, opts);
  const std::size_t n = cube.n();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cube.column(i, j) != cube.column(j, i)) {
        sink.add({{detail::one(i), detail::one(j)}, "a(i,j) != a(j,i)",
                  detail::vector_string(cube.column(i, j)), detail::vector_string(cube.column(j, i))});
      }
    }
  }
  return std::move(sink).finish();
}

/// Triple-by-triple comparison of (e_i*e_j)*e_m with e_i*(e_j*e_m). O(n^5).
template <typename Scalar>
PropertyReport is_associative_bruteforce(const StructureCube<Scalar>& cube,
                                         const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::AssociativeBruteForce, opts);
  const std::size_t n = cube.n();
  Vector<Scalar> left, right;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = cube.column(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        // (e_i * e_j) * e_m = sum_k a_{i,j}(k) a_{k,m}
        detail::combine_columns(cube, ij, m, left);
        // e_i * (e_j * e_m) = sum_p a_{j,m}(p) a_{i,p}
        const auto jm = cube.column(j, m);
        right.setZero(static_cast<Eigen::Index>(n));
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& c = jm(static_cast<Eigen::Index>(p));
          if (c != 0) right += c * cube.column(i, p);
        }
        if (left != right) {
          sink.add({{detail::one(i), detail::one(j), detail::one(m)}, "(ei*ej)*em != ei*(ej*em)",
                    detail::vector_string(left), detail::vector_string(right)});
        }
      }
    }
  }
  return std::move(sink).finish();
}

/// A_i A_j = sum_k a_{i,j}(k) A_k for all (i, j).
template <typename Scalar>
PropertyReport is_associative_matrix(const StructureCube<Scalar>& cube,
                                     const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::AssociativeMatrix, opts);
  const std::size_t n = cube.n();
  const auto en = static_cast<Eigen::Index>(n);
  Matrix<Scalar> product(en, en), expansion(en, en);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      product.noalias() = cube.left_view(i) * cube.left_view(j);
      expansion.setZero();
      const auto ij = cube.column(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = ij(static_cast<Eigen::Index>(k));
        if (c != 0) expansion += c * cube.left_view(k);
      }
      if (product == expansion) continue;
      for (Eigen::Index c = 0; c < en; ++c) {
        for (Eigen::Index r = 0; r < en; ++r) {
          if (product(r, c) != expansion(r, c)) {
            sink.add({{detail::one(i), detail::one(j)},
                      "A_i A_j differs at entry (" + std::to_string(r + 1) + "," +
                          std::to_string(c + 1) + ")",
                      to_string(expansion(r, c)), to_string(product(r, c))});
            goto next_pair;
          }
        }
      }
    next_pair:;
    }
  }
  return std::move(sink).finish();
}

/// The columns a_{i,j} in canonical (lexicographic) order, duplicates removed.
template <typename Scalar>
std::vector<std::vector<Scalar>> distinct_columns(const StructureCube<Scalar>& cube) {
  std::set<std::vector<Scalar>> seen;
  for (std::size_t i = 0; i < cube.n(); ++i) {
    for (std::size_t j = 0; j < cube.n(); ++j) {
      const auto col = cube.column(i, j);
      seen.emplace(col.data(), col.data() + col.size());
    }
  }
  return {seen.begin(), seen.end()};
}

/// Exactly n distinct columns overall, and every A_i and B_i has full rank.
template <typename Scalar>
ConditionAReport satisfies_condition_A(const StructureCube<Scalar>& cube) {
  ConditionAReport rep;
  const std::size_t n = cube.n();
  rep.distinct_columns = distinct_columns(cube).size();
  rep.left_ranks.reserve(n);
  rep.right_ranks.reserve(n);
  bool ranks_full = true;
  for (std::size_t i = 0; i < n; ++i) {
    rep.left_ranks.push_back(exact_rank(cube.left_view(i)));
    rep.right_ranks.push_back(exact_rank(right_matrix(cube, StateIndex::from_zero_based(i))));
    ranks_full = ranks_full && rep.left_ranks.back() == static_cast<Eigen::Index>(n) &&
                 rep.right_ranks.back() == static_cast<Eigen::Index>(n);
  }
  rep.holds = rep.distinct_columns == n && ranks_full;
  return rep;
}

/// Flattens a ConditionAReport into the common witness format: one witness
/// for a wrong column count and one per rank-deficient A_i or B_i.
inline PropertyReport to_property_report(const ConditionAReport& rep, std::size_t n,
                                         const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::ConditionA, opts);
  if (rep.distinct_columns != n) {
    sink.add({{}, "distinct columns", std::to_string(n), std::to_string(rep.distinct_columns)});
  }
  for (std::size_t i = 0; i < rep.left_ranks.size(); ++i) {
    if (rep.left_ranks[i] != static_cast<Eigen::Index>(n))
      sink.add({{i + 1}, "rank(A_i)", std::to_string(n), std::to_string(rep.left_ranks[i])});
  }
  for (std::size_t i = 0; i < rep.right_ranks.size(); ++i) {
    if (rep.right_ranks[i] != static_cast<Eigen::Index>(n))
      sink.add({{i + 1}, "rank(B_i)", std::to_string(n), std::to_string(rep.right_ranks[i])});
  }
  auto out = std::move(sink).finish();
  out.holds = rep.holds;
  return out;
}

/// Every column is a rearrangement of a_{1,1}, and the cube holds at most n
/// distinct scalars.
template <typename Scalar>
PropertyReport check_column_multisets(const StructureCube<Scalar>& cube,
                                      const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::ColumnMultisets, opts);
  const std::size_t n = cube.n();
  const auto reference = detail::sorted_entries(cube.column(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto entries = detail::sorted_entries(cube.column(i, j));
      if (entries != reference) {
        sink.add({{detail::one(i), detail::one(j)}, "column multiset",
                  detail::multiset_string(reference), detail::multiset_string(entries)});
      }
    }
  }
  const std::set<Scalar> values(cube.flat().begin(), cube.flat().end());
  if (values.size() > n) {
    sink.add({{}, "distinct scalars", "<= " + std::to_string(n), std::to_string(values.size())});
  }
  return std::move(sink).finish();
}

/// Within each A_i all diagonal entries a_{i,j}(j) coincide.
template <typename Scalar>
PropertyReport check_constant_diagonals(const StructureCube<Scalar>& cube,
                                        const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::ConstantDiagonals, opts);
  for (std::size_t i = 0; i < cube.n(); ++i) {
    const Scalar& first = cube(i, 0, 0);
    for (std::size_t j = 1; j < cube.n(); ++j) {
      if (cube(i, j, j) != first) {
        sink.add({{detail::one(i), detail::one(j)}, "diagonal of A_i", to_string(first),
                  to_string(cube(i, j, j))});
      }
    }
  }
  return std::move(sink).finish();
}

/// In each A_i every row and every column carry the same multiset of entries.
template <typename Scalar>
PropertyReport check_row_column_multisets(const StructureCube<Scalar>& cube,
                                          const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::RowColumnMultisets, opts);
  const auto n = static_cast<Eigen::Index>(cube.n());
  for (std::size_t i = 0; i < cube.n(); ++i) {
    const auto a = cube.left_view(i);
    const auto reference = detail::sorted_entries(a.col(0));
    for (Eigen::Index c = 1; c < n; ++c) {
      auto entries = detail::sorted_entries(a.col(c));
      if (entries != reference)
        sink.add({{detail::one(i), static_cast<std::size_t>(c + 1)}, "column of A_i",
                  detail::multiset_string(reference), detail::multiset_string(entries)});
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      auto entries = detail::sorted_entries(a.row(r));
      if (entries != reference)
        sink.add({{detail::one(i), static_cast<std::size_t>(r + 1)}, "row of A_i",
                  detail::multiset_string(reference), detail::multiset_string(entries)});
    }
  }
  return std::move(sink).finish();
}

/// Column j of A_k A_k equals sum_i a_{k,k}(i) a_{i,j}, for all (k, j).
template <typename Scalar>
PropertyReport check_square_expansion(const StructureCube<Scalar>& cube,
                                      const CheckOptions& opts = {}) {
  detail::WitnessSink sink(Property::SquareExpansion, opts);
  const std::size_t n = cube.n();
  Vector<Scalar> lhs, rhs;
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = cube.column(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      lhs.noalias() = cube.left_view(k) * cube.column(k, j);
      detail::combine_columns(cube, kk, j, rhs);
      if (lhs != rhs) {
        sink.add({{detail::one(k), detail::one(j)}, "column j of A_k A_k",
                  detail::vector_string(rhs), detail::vector_string(lhs)});
      }
    }
  }
  return std::move(sink).finish();
}

/// The four structural reports, in fixed order.
template <typename Scalar>
std::vector<PropertyReport> check_corollaries(const StructureCube<Scalar>& cube,
                                              const CheckOptions& opts = {}) {
  return {check_column_multisets(cube, opts), check_constant_diagonals(cube, opts),
          check_row_column_multisets(cube, opts), check_square_expansion(cube, opts)};
}

}  // namespace hgforge
