#pragma once

// Reverse construction: recover the abelian group and the measure behind a
// cube that satisfies commutativity, associativity and condition (A). Every
// successful answer is certified by re-deriving the cube and comparing it
// entry for entry.

#include "hgforge/checks.hpp"
#include "hgforge/derivation.hpp"
#include "hgforge/groups.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

namespace hgforge {

enum class RejectReason {
  FailsValidation,
  NotCommutative,
  NotAssociative,
  FailsConditionA,
  ColumnMatchFailure,
  GroupAxiomFailure,
  RoundTripMismatch,
};

inline const char* reason_name(RejectReason r) {
  switch (r) {
    case RejectReason::FailsValidation: return "FailsValidation";
    case RejectReason::NotCommutative: return "NotCommutative";
    case RejectReason::NotAssociative: return "NotAssociative";
    case RejectReason::FailsConditionA: return "FailsConditionA";
    case RejectReason::ColumnMatchFailure: return "ColumnMatchFailure";
    case RejectReason::GroupAxiomFailure: return "GroupAxiomFailure";
    case RejectReason::RoundTripMismatch: return "RoundTripMismatch";
  }
  return "?";
}

template <typename Scalar>
struct Recovered {
  CayleyTable table;
  Measure<Scalar> measure;
  InvariantFactors factors;
};

struct NotDerived {
  RejectReason reason;
  std::vector<std::size_t> witness;  // one-based indices, meaning depends on reason
  std::string detail;
};

template <typename Scalar>
struct RecoveryResult {
  std::variant<Recovered<Scalar>, NotDerived> outcome;

  bool recovered() const { return std::holds_alternative<Recovered<Scalar>>(outcome); }
  const Recovered<Scalar>& value() const { return std::get<Recovered<Scalar>>(outcome); }
  const NotDerived& rejection() const { return std::get<NotDerived>(outcome); }
};

struct ExpansionFailure {
  std::size_t row = 0, col = 0;  // one-based entry of A_1 that disagrees
  std::string expected, actual;
};

/// Reads m = a_{1,1} and checks A_1 = sum_k m_k G_k exactly.
template <typename Scalar>
std::variant<Measure<Scalar>, ExpansionFailure> recover_measure_from_A1(
    const StructureCube<Scalar>& cube, const CayleyTable& table) {
  if (table.n() != cube.n()) throw DimensionMismatch("recover_measure_from_A1", cube.n(), table.n());
  Measure<Scalar> m(Vector<Scalar>(cube.column(0, 0)));
  const Matrix<Scalar> mix = mixture_matrix(table, m);
  const auto a1 = cube.left_view(0);
  for (Eigen::Index c = 0; c < mix.cols(); ++c)
    for (Eigen::Index r = 0; r < mix.rows(); ++r)
      if (mix(r, c) != a1(r, c))
        return ExpansionFailure{static_cast<std::size_t>(r + 1), static_cast<std::size_t>(c + 1),
                                to_string(mix(r, c)), to_string(a1(r, c))};
  return m;
}

struct ExtractionFailure {
  enum class Kind { ValueAbsent, NotFunctional, GroupAxiomFailure };
  Kind kind;
  std::vector<std::size_t> witness;  // one-based
  std::string detail;
};

inline const char* kind_name(ExtractionFailure::Kind k) {
  switch (k) {
    case ExtractionFailure::Kind::ValueAbsent: return "ValueAbsent";
    case ExtractionFailure::Kind::NotFunctional: return "NotFunctional";
    case ExtractionFailure::Kind::GroupAxiomFailure: return "GroupAxiomFailure";
  }
  return "?";
}

/// The operation i o j = k on positions where a_{i,j}(k) == value. Succeeds
/// when that relation is a total function forming an abelian group; the
/// identity is then swapped into state 1.
template <typename Scalar>
std::variant<CayleyTable, ExtractionFailure> extract_group_by_value(
    const StructureCube<Scalar>& cube, const Scalar& value) {
  const std::size_t n = cube.n();
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n, 0));
  bool present = false;
  std::optional<ExtractionFailure> not_functional;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t hits = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (cube(i, j, k) == value) {
          ++hits;
          rows[i][j] = k + 1;
        }
      }
      present = present || hits > 0;
      if (hits != 1 && !not_functional) {
        not_functional = ExtractionFailure{ExtractionFailure::Kind::NotFunctional, {i + 1, j + 1},
                                           std::to_string(hits) + " positions hold the value"};
      }
    }
  }
  if (!present)
    return ExtractionFailure{ExtractionFailure::Kind::ValueAbsent, {}, to_string(value) + " does not occur"};
  if (not_functional) return *not_functional;

  auto report = verify_group_axioms(rows);
  if (!report.holds) {
    const auto& w = report.witnesses.front();
    return ExtractionFailure{ExtractionFailure::Kind::GroupAxiomFailure, w.indices, w.what};
  }
  // Relabel by the transposition (1 e) so the identity becomes state 1.
  const std::size_t e = find_identity(rows);
  if (e != 1) {
    auto swap_label = [e](std::size_t s) { return s == 1 ? e : (s == e ? 1 : s); };
    std::vector<std::vector<std::size_t>> relabeled(n, std::vector<std::size_t>(n));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        relabeled[swap_label(i) - 1][swap_label(j) - 1] = swap_label(rows[i - 1][j - 1]);
    rows = std::move(relabeled);
  }
  return CayleyTable::from_one_based(rows);
}

namespace detail {

template <typename Scalar>
struct RecoveryCandidate {
  CayleyTable table;
  Measure<Scalar> measure;
};

template <typename Scalar>
using CandidateHook = std::function<void(RecoveryCandidate<Scalar>&)>;

template <typename Scalar>
RecoveryResult<Scalar> reject(RejectReason reason, std::vector<std::size_t> witness,
                              std::string detail) {
  return {NotDerived{reason, std::move(witness), std::move(detail)}};
}

template <typename Scalar>
RecoveryResult<Scalar> reject_with(RejectReason reason, const PropertyReport& report) {
  if (report.witnesses.empty()) return reject<Scalar>(reason, {}, property_name(report.property));
  const auto& w = report.witnesses.front();
  std::string detail = w.what;
  if (!w.expected.empty() || !w.actual.empty())
    detail += ": expected " + w.expected + ", got " + w.actual;
  return reject<Scalar>(reason, w.indices, std::move(detail));
}

// Gate order: commutativity, associativity (matrix form), condition (A),
// column matching, group axioms, measure, certification. `tamper` runs just
// before certification and exists so tests can prove the final gate bites.
template <typename Scalar>
RecoveryResult<Scalar> recover_impl(const StructureCube<Scalar>& cube,
                                    const CandidateHook<Scalar>& tamper) {
  const std::size_t n = cube.n();
  const CheckOptions opts{1};

  if (auto r = is_commutative(cube, opts); !r.holds)
    return reject_with<Scalar>(RejectReason::NotCommutative, r);
  if (auto r = is_associative_matrix(cube, opts); !r.holds)
    return reject_with<Scalar>(RejectReason::NotAssociative, r);
  if (auto a = satisfies_condition_A(cube); !a.holds)
    return reject_with<Scalar>(RejectReason::FailsConditionA, to_property_report(a, n, opts));

  // T(i, j) = the k with a_{1,k} == a_{i,j}. Condition (A) makes the columns
  // of A_1 distinct, so k is unique when it exists.
  std::map<std::vector<Scalar>, std::size_t> first_row;
  for (std::size_t k = 0; k < n; ++k) {
    const auto col = cube.column(0, k);
    first_row.emplace(std::vector<Scalar>(col.data(), col.data() + col.size()), k + 1);
  }
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto col = cube.column(i, j);
      auto it = first_row.find(std::vector<Scalar>(col.data(), col.data() + col.size()));
      if (it == first_row.end())
        return reject<Scalar>(RejectReason::ColumnMatchFailure, {i + 1, j + 1},
                              "column a(i,j) is not a column of A_1");
      rows[i][j] = it->second;
    }
  }

  std::optional<CayleyTable> table;
  try {
    table.emplace(CayleyTable::from_one_based(rows));
  } catch (const InvalidTable& e) {
    return reject_with<Scalar>(RejectReason::GroupAxiomFailure, e.report());
  }

  auto measure = recover_measure_from_A1(cube, *table);
  if (auto* f = std::get_if<ExpansionFailure>(&measure)) {
    return reject<Scalar>(RejectReason::RoundTripMismatch, {f->row, f->col},
                          "A_1 is not sum_k m_k G_k: expected " + f->expected + ", got " + f->actual);
  }

  RecoveryCandidate<Scalar> candidate{std::move(*table), std::get<Measure<Scalar>>(std::move(measure))};
  if (tamper) tamper(candidate);

  const auto rebuilt = derive_cube(candidate.table, candidate.measure);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (rebuilt(i, j, k) != cube(i, j, k))
          return reject<Scalar>(RejectReason::RoundTripMismatch, {i + 1, j + 1, k + 1},
                                "re-derived entry " + to_string(rebuilt(i, j, k)) +
                                    " != input " + to_string(cube(i, j, k)));

  auto factors = canonical_form(candidate.table);
  return {Recovered<Scalar>{std::move(candidate.table), std::move(candidate.measure), std::move(factors)}};
}

}  // namespace detail

/// Recovers (group, measure) with state 1 as the identity, or the first
/// failing gate with a witness.
template <typename Scalar>
RecoveryResult<Scalar> recover(const StructureCube<Scalar>& cube) {
  return detail::recover_impl<Scalar>(cube, nullptr);
}

/// As above, starting from unvalidated data; a malformed cube is rejected
/// with FailsValidation.
template <typename Scalar>
RecoveryResult<Scalar> recover(const RawCube<Scalar>& raw) {
  auto v = validate_cube(raw);
  if (!v.ok()) {
    const auto& issue = v.issues.front();
    std::vector<std::size_t> witness;
    for (auto idx : {issue.i, issue.j, issue.k})
      if (idx) witness.push_back(idx);
    return detail::reject<Scalar>(RejectReason::FailsValidation, std::move(witness),
                                  std::string(kind_name(issue.kind)) + " " + issue.detail);
  }
  return recover(*v.cube);
}

}  // namespace hgforge
