#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qjlab/classify.hpp"
#include "qjlab/construct.hpp"
#include "qjlab/errors.hpp"
#include "qjlab/harness.hpp"

using namespace qjlab;
using namespace qjlab::classify;
using finring::principal;

namespace {

finring::IdealSet zi(unsigned n, Elem d) { return principal(construct::zmod(n), d); }

}  // namespace

TEST(IdealPredicates, PrimeMaximalPrimary) {
  EXPECT_TRUE(is_prime(zi(12, 2)).holds);
  const auto v = is_prime(zi(12, 4));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (std::vector<Elem>{2, 2}));
  EXPECT_TRUE(is_maximal(zi(7, 0)).holds);
  EXPECT_TRUE(is_primary(zi(12, 4)).holds);
  const auto p = is_primary(zi(12, 6));
  EXPECT_FALSE(p.holds);
  EXPECT_EQ(p.witness, (std::vector<Elem>{2, 3}));
  EXPECT_TRUE(is_primary(zi(12, 3)).holds);
  EXPECT_TRUE(is_quasi_primary(zi(8, 4)).holds);
  EXPECT_FALSE(is_quasi_primary(zi(12, 6)).holds);
}

TEST(IdealPredicates, NAndDelta) {
  EXPECT_TRUE(is_n_ideal(zi(4, 0)).holds);
  const auto v = is_n_ideal(zi(6, 2));
  ASSERT_FALSE(v.holds);
  // re-validate: ab in I, a not nilpotent, b not in I
  const auto Z6 = construct::zmod(6);
  EXPECT_EQ(Z6->mul(v.witness[0], v.witness[1]) % 2, 0);
  EXPECT_NE(v.witness[0], 0);
  EXPECT_NE(v.witness[1] % 2, 0);
  EXPECT_TRUE(is_n_ideal(zi(5, 0)).holds);
  EXPECT_TRUE(is_delta1_n_ideal(zi(5, 0)).holds);
  EXPECT_TRUE(is_delta1_n_ideal(zi(8, 2)).holds);
}

TEST(IdealPredicates, JAndQuasiJ) {
  EXPECT_TRUE(is_j_ideal(zi(8, 4)).holds);
  EXPECT_FALSE(is_j_ideal(zi(6, 2)).holds);
  EXPECT_TRUE(is_quasi_j_ideal(zi(8, 4)).holds);
  EXPECT_FALSE(is_quasi_j_ideal(zi(6, 3)).holds);
}

TEST(IdealPredicates, SuperfluousAndRegular) {
  EXPECT_TRUE(is_superfluous(zi(12, 6)).holds);
  const auto v = is_superfluous(zi(6, 2));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (std::vector<Elem>{3}));
  EXPECT_TRUE(is_superfluous(zi(9, 0)).holds);
  EXPECT_TRUE(is_regular_ideal(zi(12, 2)).holds);
  EXPECT_FALSE(is_regular_ideal(zi(8, 4)).holds);
  EXPECT_TRUE(is_regular_ideal(zi(7, 0)).holds);
}

TEST(IdealPredicates, ImproperRejected) {
  const auto one = finring::unit_ideal(construct::zmod(6));
  for (const auto& name : {"primary", "quasi_primary", "n_ideal", "j_ideal", "quasi_j", "delta1_n"})
    EXPECT_THROW(ideal_predicate(name, one), InvalidArgument) << name;
  EXPECT_FALSE(is_proper(one).holds);
  EXPECT_FALSE(is_prime(one).holds);
  EXPECT_THROW(ideal_predicate("bogus", zi(6, 2)), UnknownName);
}

TEST(RingPredicates, SpecExamples) {
  EXPECT_TRUE(is_quasi_local(construct::zmod(8)).holds);
  EXPECT_FALSE(is_quasi_local(construct::zmod(12)).holds);
  EXPECT_TRUE(is_semiprimitive(construct::zmod(6)).holds);
  EXPECT_FALSE(is_field(construct::zmod(4)).holds);
  EXPECT_TRUE(is_von_neumann_regular(construct::zmod(6)).holds);
  const auto v = is_von_neumann_regular(construct::zmod(4));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, (std::vector<Elem>{2}));
  EXPECT_TRUE(is_von_neumann_regular(construct::zmod(3)).holds);
  EXPECT_TRUE(is_presimplifiable(construct::zmod(4)).holds);
  EXPECT_TRUE(is_presimplifiable(construct::zmod(5)).holds);
  EXPECT_FALSE(is_quasi_presimplifiable(construct::zmod(6)).holds);
  EXPECT_TRUE(is_quasi_presimplifiable(construct::zmod(5)).holds);
  EXPECT_THROW(ring_predicate("bogus", construct::zmod(6)), UnknownName);
}

TEST(Verdicts, HypothesisCount) {
  // (1, 0) meets the n-ideal hypothesis on <0> in Z2.
  const auto v = is_n_ideal(zi(2, 0));
  EXPECT_TRUE(v.holds);
  EXPECT_GT(v.hypothesis_count, 0u);
}

// Property: every predicate agrees with the oracle over a small catalog,
// and the two routes for each predicate agree.
TEST(OracleAgreement, SmallCatalog) {
  harness::Recipe r;
  r.zmod = harness::Recipe::Range{2, 16};
  r.products_max = 4;
  r.poly_primes = {2, 3};
  r.idealizations_max = 4;
  const auto catalog = harness::build_catalog(r);
  std::size_t ideals = 0;
  for (const auto& e : catalog.rings) {
    const auto t = oracle::of(*e.ring);
    EXPECT_EQ(is_presimplifiable(e.ring).holds, oracle::presimplifiable(t)) << e.ring->label();
    EXPECT_EQ(is_quasi_presimplifiable(e.ring).holds, oracle::quasi_presimplifiable(t)) << e.ring->label();
    EXPECT_EQ(routes::presimplifiable_by_definition(e.ring), routes::presimplifiable_by_containment(e.ring));
    EXPECT_EQ(routes::quasi_presimplifiable_by_definition(e.ring),
              routes::quasi_presimplifiable_by_containment(e.ring));
    for (const auto& I : finring::enumerate_ideals(e.ring)) {
      if (!I.is_proper()) continue;
      ++ideals;
      const auto s = oracle::to_set(I.bits(), t.n);
      const auto where = e.ring->label() + " " + finring::describe(I);
      EXPECT_EQ(is_j_ideal(I).holds, oracle::j_ideal(t, s)) << where;
      EXPECT_EQ(is_quasi_j_ideal(I).holds, oracle::quasi_j(t, s)) << where;
      EXPECT_EQ(is_n_ideal(I).holds, oracle::n_ideal(t, s)) << where;
      EXPECT_EQ(is_delta1_n_ideal(I).holds, oracle::delta1_n(t, s)) << where;
      EXPECT_EQ(is_prime(I).holds, oracle::prime(t, s)) << where;
      EXPECT_EQ(routes::j_ideal_by_definition(I), routes::j_ideal_by_quotient(I)) << where;
      EXPECT_EQ(routes::quasi_j_by_definition(I), routes::quasi_j_by_pairs(I)) << where;
    }
  }
  EXPECT_GT(ideals, 100u);
}

TEST(OracleAgreement, ZnQuasiJClosedForm) {
  for (unsigned n = 2; n <= 40; ++n)
    for (unsigned d : oracle::zn::divisors(n)) {
      const auto I = zi(n, static_cast<Elem>(d % n));
      EXPECT_EQ(I.is_proper() && is_quasi_j_ideal(I).holds, oracle::zn::quasi_j(n, d)) << n << " " << d;
    }
}

// Property: refuting witnesses re-validate against the raw tables.
TEST(Witnesses, PairWitnessesRevalidate) {
  for (unsigned n : {6u, 10u, 12u, 18u}) {
    const auto R = construct::zmod(n);
    const auto J = finring::jacobson(R);
    for (const auto& I : finring::enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      const auto v = is_j_ideal(I);
      if (v.holds || v.witness_kind != "pair") continue;
      ASSERT_EQ(v.witness.size(), 2u);
      EXPECT_TRUE(I.contains(R->mul(v.witness[0], v.witness[1])));
      EXPECT_FALSE(J.contains(v.witness[0]));
      EXPECT_FALSE(I.contains(v.witness[1]));
    }
  }
}
