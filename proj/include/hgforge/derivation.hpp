#pragma once

// Forward construction: the semihypergroup whose states are the translates
// e_i = m * g_i of a probability measure m on an abelian group.

#include "hgforge/cube.hpp"
#include "hgforge/groups.hpp"
#include "hgforge/linalg.hpp"

#include <optional>

namespace hgforge {

/// M = sum_k m_k G_k. Column j is the coefficient vector of the translate
/// m * g_j: M(k, j) = m(q) where table(q, j) = k.
template <typename Scalar>
Matrix<Scalar> mixture_matrix(const CayleyTable& table, const Measure<Scalar>& m) {
  if (m.n() != table.n()) throw DimensionMismatch("mixture_matrix: measure", table.n(), m.n());
  const auto rep = regular_representation(table);
  const auto n = static_cast<Eigen::Index>(table.n());
  Matrix<Scalar> mix = Matrix<Scalar>::Zero(n, n);
  for (std::size_t k = 0; k < table.n(); ++k) {
    if (m[k] != 0) mix += m[k] * rep.dense<Scalar>(k);
  }
  return mix;
}

/// Structure cube of {m * g_i}: a_{i,j} is column table(i, j) of the mixture
/// matrix, i.e. a_{i,j}(k) = m(g_k (g_i g_j)^{-1}). Equivalently A_i = G_i M.
template <typename Scalar>
StructureCube<Scalar> derive_cube(const CayleyTable& table, const Measure<Scalar>& m) {
  const Matrix<Scalar> mix = mixture_matrix(table, m);
  const std::size_t n = table.n();
  std::vector<Scalar> flat;
  flat.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = mix.col(static_cast<Eigen::Index>(table(i, j)));
      flat.insert(flat.end(), col.data(), col.data() + col.size());
    }
  }
  auto v = validate_cube<Scalar>(n, std::move(flat));
  eigen_assert(v.ok());
  return std::move(*v.cube);
}

template <typename Scalar>
struct DegeneracyVerdict {
  enum class Kind { NonDegenerate, RepeatedTranslates, SingularMixture };
  Kind kind = Kind::NonDegenerate;
  std::size_t translate = 0;             // one-based h != 1 with m * h = m
  std::optional<Vector<Scalar>> kernel;  // M v = 0, v != 0

  bool degenerate() const { return kind != Kind::NonDegenerate; }
};

template <typename Scalar>
const char* kind_name(typename DegeneracyVerdict<Scalar>::Kind kind) {
  using Kind = typename DegeneracyVerdict<Scalar>::Kind;
  switch (kind) {
    case Kind::NonDegenerate: return "NonDegenerate";
    case Kind::RepeatedTranslates: return "RepeatedTranslates";
    case Kind::SingularMixture: return "SingularMixture";
  }
  return "?";
}

/// Decides whether derive_cube(table, m) satisfies condition (A). Columns of
/// the derived cube are exactly the columns of M, and A_i = G_i M has the
/// rank of M, so the test is: M has distinct columns and full rank.
template <typename Scalar>
DegeneracyVerdict<Scalar> degeneracy_check(const CayleyTable& table, const Measure<Scalar>& m) {
  const Matrix<Scalar> mix = mixture_matrix(table, m);
  DegeneracyVerdict<Scalar> verdict;
  // Two translates coincide iff some h != identity fixes m, and then column h
  // equals column 1.
  for (Eigen::Index h = 1; h < mix.cols(); ++h) {
    if (mix.col(h) == mix.col(0)) {
      verdict.kind = DegeneracyVerdict<Scalar>::Kind::RepeatedTranslates;
      verdict.translate = static_cast<std::size_t>(h + 1);
      return verdict;
    }
  }
  if (auto v = kernel_vector(mix)) {
    verdict.kind = DegeneracyVerdict<Scalar>::Kind::SingularMixture;
    verdict.kernel = std::move(v);
  }
  return verdict;
}

}  // namespace hgforge
