#pragma once

// Exact dense linear algebra: fraction-free (Bareiss) elimination for rank and
// determinant, and Gauss-Jordan for a kernel witness.

#include "hgforge/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hgforge {

namespace detail {

// Multiplies each row by the lcm of its denominators so elimination starts
// from integers and Bareiss keeps every intermediate value an integer minor.
// Row scaling never changes rank; the scale product is returned for det.
template <typename Scalar>
Scalar clear_row_denominators(Matrix<Scalar>& m) {
  Scalar scale(1);
  if constexpr (is_rational_v<Scalar>) {
    using boost::multiprecision::denominator;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Integer l(1);
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Integer d(denominator(m(r, c)));
        l = boost::multiprecision::lcm(l, d);
      }
      if (l != 1) {
        const Scalar f(l);
        m.row(r) *= f;
        scale *= f;
      }
    }
  }
  return scale;
}

struct EliminationResult {
  Eigen::Index rank = 0;
  bool odd_swaps = false;
};

// In-place Bareiss elimination with column skipping. On return the leading
// `rank` rows are in echelon form; for a full-rank square input the last pivot
// equals det(input).
template <typename Scalar>
EliminationResult bareiss_eliminate(Matrix<Scalar>& m) {
  EliminationResult res;
  Scalar prev(1);
  const Eigen::Index rows = m.rows(), cols = m.cols();
  for (Eigen::Index col = 0; col < cols && res.rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = res.rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != res.rank) {
      m.row(pivot).swap(m.row(res.rank));
      res.odd_swaps = !res.odd_swaps;
    }
    const Eigen::Index p = res.rank;
    for (Eigen::Index r = p + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        m(r, c) = (m(p, col) * m(r, c) - m(r, col) * m(p, c)) / prev;
      }
      m(r, col) = Scalar(0);
    }
    prev = m(p, col);
    ++res.rank;
  }
  return res;
}

}  // namespace detail

/// Rank over the scalar field.
template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  detail::clear_row_denominators(m);
  return detail::bareiss_eliminate(m).rank;
}

/// Determinant of a square matrix via Bareiss elimination.
template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(a.rows() == a.cols());
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  const Scalar scale = detail::clear_row_denominators(m);
  const auto res = detail::bareiss_eliminate(m);
  if (res.rank < n) return Scalar(0);
  Scalar det = m(n - 1, n - 1) / scale;
  return res.odd_swaps ? Scalar(-det) : det;
}

/// A nonzero vector v with a * v = 0, or nullopt when a has full column rank.
/// For rational scalars v is a primitive integer vector whose first nonzero
/// entry is positive, so witnesses are canonical.
template <typename Derived>
std::optional<Vector<typename Derived::Scalar>> kernel_vector(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index rank = 0;
  Eigen::Index free_col = -1;
  for (Eigen::Index col = 0; col < cols; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      if (free_col < 0) free_col = col;
      continue;
    }
    m.row(pivot).swap(m.row(rank));
    m.row(rank) /= Scalar(m(rank, col));
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != rank && m(r, col) != 0) m.row(r) -= Scalar(m(r, col)) * m.row(rank);
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (free_col < 0) return std::nullopt;

  // Back-substitute with the first free variable set to one and the rest zero.
  Vector<Scalar> v = Vector<Scalar>::Zero(cols);
  v(free_col) = Scalar(1);
  for (Eigen::Index r = 0; r < rank; ++r) {
    if (pivot_cols[static_cast<std::size_t>(r)] < free_col) {
      v(pivot_cols[static_cast<std::size_t>(r)]) = -m(r, free_col);
    }
  }

  if constexpr (is_rational_v<Scalar>) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    Integer l(1), g(0);
    for (Eigen::Index k = 0; k < cols; ++k) l = boost::multiprecision::lcm(l, Integer(denominator(v(k))));
    v *= Scalar(l);
    for (Eigen::Index k = 0; k < cols; ++k) g = boost::multiprecision::gcd(g, Integer(numerator(v(k))));
    if (g > 1) v /= Scalar(g);
  }
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (v(k) != 0) {
      if (v(k) < 0) v = -v;
      break;
    }
  }
  return v;
}

}  // namespace hgforge
