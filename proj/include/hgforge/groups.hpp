#pragma once

// Finite abelian groups: enumeration by invariant factors, explicit Cayley
// tables, regular permutation representations, axiom verification and
// isomorphism-class identification.

#include "hgforge/checks.hpp"
#include "hgforge/errors.hpp"
#include "hgforge/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hgforge {

inline constexpr std::size_t kDefaultOrderCap = 256;

/// d_1 | d_2 | ... | d_m, each d_t >= 2; empty for the trivial group.
using InvariantFactors = std::vector<std::size_t>;

class InvalidTable : public Error {
 public:
  InvalidTable(const std::string& msg, PropertyReport report)
      : Error(msg), report_(std::move(report)) {}
  const PropertyReport& report() const { return report_; }

 private:
  PropertyReport report_;
};

/// Multiplication table of a finite abelian group whose identity is state 1.
/// Entries are stored zero-based; operator() takes and returns zero-based
/// indices.
class CayleyTable {
 public:
  /// Validates a table given with one-based labels. Throws InvalidTable if it
  /// is not an abelian group with identity at state 1.
  static CayleyTable from_one_based(const std::vector<std::vector<std::size_t>>& rows);

  std::size_t n() const { return n_; }
  std::size_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// The state solving g_i * x = g_j, i.e. g_i^{-1} g_j.
  std::size_t divide(std::size_t i, std::size_t j) const { return left_div_[i * n_ + j]; }
  std::size_t inverse(std::size_t i) const { return divide(i, 0); }

  std::vector<std::vector<std::size_t>> to_one_based() const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  CayleyTable(std::size_t n, std::vector<std::uint32_t> data);
  friend CayleyTable cayley_table(const InvariantFactors& factors);

  std::size_t n_;
  std::vector<std::uint32_t> data_;
  std::vector<std::uint32_t> left_div_;
};

/// Regular representation G_1..G_n with G_i e_q = e_{table(i,q)}.
struct PermutationRep {
  using Permutation = Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, int>;
  std::vector<Permutation> matrices;

  std::size_t n() const { return matrices.size(); }

  template <typename Scalar>
  Matrix<Scalar> dense(std::size_t i) const {
    return matrices[i].toDenseMatrix().template cast<Scalar>();
  }
};

/// One entry per isomorphism class of abelian groups of order n. Ordered by
/// number of factors, then by the factors read from the largest down in
/// decreasing lexicographic order (n=16: [16], [2,8], [4,4], [2,2,4],
/// [2,2,2,2]). Throws Error when n is 0 or above the cap.
std::vector<InvariantFactors> enumerate_abelian_groups(std::size_t n,
                                                       std::size_t cap = kDefaultOrderCap);

/// Z_{d_1} x ... x Z_{d_m} with mixed-radix state encoding: the tuple
/// (x_1..x_m) is state 1 + x_1 + d_1 x_2 + d_1 d_2 x_3 + ... (first factor
/// varies fastest), so the zero tuple is state 1.
CayleyTable cayley_table(const InvariantFactors& factors);

PermutationRep regular_representation(const CayleyTable& table);

/// Checks a one-based n x n table: entries in range, Latin square, associative,
/// commutative, and that an identity exists. Witnesses describe the first
/// failing axiom only; `what` names it ("range", "latin-square",
/// "associativity", "commutativity", "identity").
PropertyReport verify_group_axioms(const std::vector<std::vector<std::size_t>>& rows,
                                   const CheckOptions& opts = {});

/// Identity state (one-based) of a table, or 0 when there is none.
std::size_t find_identity(const std::vector<std::vector<std::size_t>>& rows);

/// Order of every element, zero-based state order.
std::vector<std::size_t> element_orders(const CayleyTable& table);

/// Invariant factors of the table's isomorphism class, matched by the
/// multiset of element orders.
InvariantFactors canonical_form(const CayleyTable& table);

}  // namespace hgforge
