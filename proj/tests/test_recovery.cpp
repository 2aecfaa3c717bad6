#include "doctest.h"

#include "fixtures.hpp"

#include "hgforge/recovery.hpp"
#include "hgforge/sampling.hpp"

#include <numeric>
#include <random>

using namespace hgforge;
using fixtures::cube;
using fixtures::measure;
using oracle::q;

TEST_CASE("recover examples") {
  SUBCASE("Z_2-derived cube") {
    const auto r = recover(cube(fixtures::z2_derived()));
    REQUIRE(r.recovered());
    CHECK(r.value().factors == InvariantFactors{2});
    CHECK(r.value().measure == measure({q(3, 4), q(1, 4)}));
    CHECK(r.value().table == cayley_table({2}));
  }
  SUBCASE("semilattice fails condition (A)") {
    const auto r = recover(cube(fixtures::semilattice()));
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::FailsConditionA);
  }
  SUBCASE("non-associative cube") {
    const auto r = recover(cube(fixtures::nonassociative()));
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::NotAssociative);
  }
  SUBCASE("non-commutative cube") {
    const auto r = recover(cube(fixtures::noncommutative()));
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::NotCommutative);
    CHECK(r.rejection().witness == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("perturbed Z_2 cube") {
    auto raw = fixtures::z2_derived();
    raw[0][0] = {q(37, 50), q(13, 50)};
    const auto r = recover(raw);
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::NotAssociative);
  }
  SUBCASE("malformed raw cube") {
    auto raw = fixtures::z2_derived();
    raw[0][0] = {q(1, 2), q(2, 5)};
    const auto r = recover(raw);
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::FailsValidation);
    CHECK(r.rejection().witness == std::vector<std::size_t>{1, 1});
  }
  SUBCASE("uniform Z_2 is degenerate") {
    const auto r = recover(derive_cube(cayley_table({2}), Measure<Rational>::uniform(2)));
    REQUIRE_FALSE(r.recovered());
    CHECK(r.rejection().reason == RejectReason::FailsConditionA);
  }
}

TEST_CASE("round trips through derive and recover") {
  MeasureSampler sampler(2718);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const auto& f : enumerate_abelian_groups(n)) {
      const auto t = cayley_table(f);
      for (int trial = 0; trial < 4; ++trial) {
        const auto m = sampler.sample_nondegenerate(t);
        const auto c = derive_cube(t, m);
        const auto r = recover(c);
        REQUIRE_MESSAGE(r.recovered(), "n=" << n);
        // group and measure come back exactly, with the same labeling
        CHECK(r.value().table == t);
        CHECK(r.value().measure == m);
        CHECK(r.value().factors == f);
        // and re-deriving reproduces the cube
        CHECK(derive_cube(r.value().table, r.value().measure) == c);
      }
    }
  }
}

TEST_CASE("recovery after relabeling the states") {
  // Relabeling by a permutation fixing state 1 keeps 1 as the identity, so
  // recovery must succeed with an isomorphic group.
  MeasureSampler sampler(99);
  std::mt19937_64 rng(99);
  for (const auto& f : {InvariantFactors{6}, InvariantFactors{2, 4}, InvariantFactors{3, 3}}) {
    const auto t = cayley_table(f);
    const auto m = sampler.sample_nondegenerate(t);
    std::vector<std::size_t> perm(t.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    const auto relabeled = oracle::relabel_cube(derive_cube(t, m).to_raw(), perm);
    const auto r = recover(relabeled);
    REQUIRE(r.recovered());
    CHECK(r.value().factors == f);
    CHECK(derive_cube(r.value().table, r.value().measure).to_raw() == relabeled);
  }
}

TEST_CASE("rejection soundness: moving mass inside one column breaks derivability") {
  MeasureSampler sampler(55);
  std::mt19937_64 rng(55);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& f : enumerate_abelian_groups(n)) {
      const auto t = cayley_table(f);
      const auto m = sampler.sample_distinct(t);
      const auto raw = derive_cube(t, m).to_raw();
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (int trial = 0; trial < 5; ++trial) {
        const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        const std::size_t k2 = (k + 1 + pick(rng) % (n - 1)) % n;
        const auto bad = oracle::rebalance(raw, i, j, k, k2, q(1, 1000));
        if (bad == raw) continue;
        const auto r = recover(bad);
        CHECK_FALSE(r.recovered());
      }
    }
  }
}

TEST_CASE("recover_measure_from_A1") {
  const auto z4 = cayley_table({4});
  const auto m = measure({q(2, 5), q(3, 10), q(1, 5), q(1, 10)});
  const auto c = derive_cube(z4, m);
  SUBCASE("right table") {
    auto out = recover_measure_from_A1(c, z4);
    REQUIRE(std::holds_alternative<Measure<Rational>>(out));
    CHECK(std::get<Measure<Rational>>(out) == m);
  }
  SUBCASE("wrong table") {
    auto out = recover_measure_from_A1(c, cayley_table({2, 2}));
    REQUIRE(std::holds_alternative<ExpansionFailure>(out));
    const auto& f = std::get<ExpansionFailure>(out);
    CHECK(f.row >= 1);
    CHECK(f.col >= 1);
    CHECK(f.expected != f.actual);
  }
  CHECK_THROWS_AS(recover_measure_from_A1(c, cayley_table({2})), DimensionMismatch);
}

TEST_CASE("the certification gate catches a tampered candidate") {
  const auto c = derive_cube(cayley_table({3}), measure({q(1, 2), q(1, 3), q(1, 6)}));
  detail::CandidateHook<Rational> swap_mass = [](detail::RecoveryCandidate<Rational>& cand) {
    Vector<Rational> v = cand.measure.values();
    std::swap(v(1), v(2));
    cand.measure = Measure<Rational>(v);
  };
  const auto r = detail::recover_impl(c, swap_mass);
  REQUIRE_FALSE(r.recovered());
  CHECK(r.rejection().reason == RejectReason::RoundTripMismatch);
  CHECK(r.rejection().witness.size() == 3);
  CHECK(detail::recover_impl<Rational>(c, nullptr).recovered());
}

TEST_CASE("extract_group_by_value") {
  SUBCASE("Z_3 with a repeated value is not functional") {
    const auto c = derive_cube(cayley_table({3}), measure({q(1, 2), q(1, 4), q(1, 4)}));
    auto out = extract_group_by_value(c, q(1, 4));
    REQUIRE(std::holds_alternative<ExtractionFailure>(out));
    CHECK(std::get<ExtractionFailure>(out).kind == ExtractionFailure::Kind::NotFunctional);
    // the value 1/2 is unique in m, so it yields Z_3
    auto ok = extract_group_by_value(c, q(1, 2));
    REQUIRE(std::holds_alternative<CayleyTable>(ok));
    CHECK(canonical_form(std::get<CayleyTable>(ok)) == InvariantFactors{3});
  }
  SUBCASE("absent value") {
    auto out = extract_group_by_value(cube(fixtures::z2_derived()), q(1, 3));
    REQUIRE(std::holds_alternative<ExtractionFailure>(out));
    CHECK(std::get<ExtractionFailure>(out).kind == ExtractionFailure::Kind::ValueAbsent);
  }
  SUBCASE("every value of a distinct-valued measure gives the same group as recovery") {
    MeasureSampler sampler(31);
    for (std::size_t n = 2; n <= 8; ++n) {
      for (const auto& f : enumerate_abelian_groups(n)) {
        const auto t = cayley_table(f);
        const auto m = sampler.sample_distinct(t);
        const auto c = derive_cube(t, m);
        const auto r = recover(c);
        REQUIRE(r.recovered());
        for (std::size_t k = 0; k < n; ++k) {
          auto out = extract_group_by_value(c, m[k]);
          REQUIRE_MESSAGE(std::holds_alternative<CayleyTable>(out), "n=" << n << " k=" << k);
          CHECK(canonical_form(std::get<CayleyTable>(out)) == r.value().factors);
        }
      }
    }
  }
  SUBCASE("the value at the identity reproduces the table itself") {
    const auto t = cayley_table({2, 2});
    const auto c = derive_cube(t, measure({q(2, 5), q(3, 10), q(1, 5), q(1, 10)}));
    auto out = extract_group_by_value(c, q(2, 5));
    REQUIRE(std::holds_alternative<CayleyTable>(out));
    CHECK(std::get<CayleyTable>(out) == t);
  }
}
