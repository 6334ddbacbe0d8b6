#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qjlab/construct.hpp"
#include "qjlab/errors.hpp"
#include "qjlab/finring.hpp"

using namespace qjlab;
using namespace qjlab::finring;

namespace {

RingRef f2x2() { return construct::poly_quotient(2, {0, 0, 1}); }  // F2[x]/(x^2)

IdealSet gen(const RingRef& R, Elem a) { return principal(R, a); }

}  // namespace

TEST(Units, SpecExamples) {
  EXPECT_EQ(units(construct::zmod(6)).members(), (std::vector<Elem>{1, 5}));
  EXPECT_EQ(units(construct::zmod(2)).members(), (std::vector<Elem>{1}));
  const auto R = f2x2();
  EXPECT_EQ(units(R).members(), (std::vector<Elem>{1, 3}));  // 1, x+1
  EXPECT_EQ(R->name(3), "x+1");
}

TEST(Radicals, SpecExamples) {
  EXPECT_EQ(nilradical(construct::zmod(12)).members(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(nilradical(construct::zmod(7)).members(), (std::vector<Elem>{0}));
  EXPECT_EQ(nilradical(f2x2()).members(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(jacobson(construct::zmod(12)).members(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(jacobson(construct::zmod(8)).members(), (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_EQ(jacobson(construct::zmod(5)).members(), (std::vector<Elem>{0}));
}

TEST(ZeroDivisors, SpecExamples) {
  EXPECT_EQ(zero_divisors(construct::zmod(6)).members(), (std::vector<Elem>{0, 2, 3, 4}));
  EXPECT_EQ(zero_divisors(construct::zmod(5)).members(), (std::vector<Elem>{0}));
  EXPECT_EQ(zero_divisors(construct::zmod(4)).members(), (std::vector<Elem>{0, 2}));
  EXPECT_EQ(not_quasi_regular(construct::zmod(6)).members(), (std::vector<Elem>{0, 2, 3, 4}));
  EXPECT_EQ(not_quasi_regular(construct::zmod(4)).members(), (std::vector<Elem>{0}));
  EXPECT_EQ(not_quasi_regular(construct::zmod(3)).members(), (std::vector<Elem>{0}));
}

TEST(Ideals, GeneratedAndEnumerated) {
  const auto Z12 = construct::zmod(12);
  EXPECT_EQ(gen(Z12, 8).members(), (std::vector<Elem>{0, 4, 8}));
  EXPECT_TRUE(ideal_generated(Z12, {}).is_zero());
  EXPECT_FALSE(ideal_generated(Z12, {1}).is_proper());
  const auto all = enumerate_ideals(Z12);
  ASSERT_EQ(all.size(), 6u);
  std::vector<std::string> shown;
  for (const auto& I : all) shown.push_back(describe(I));
  EXPECT_EQ(shown, (std::vector<std::string>{"<0>", "<6>", "<4>", "<3>", "<2>", "<1>"}));
  EXPECT_EQ(enumerate_ideals(construct::zmod(11)).size(), 2u);
  EXPECT_EQ(enumerate_ideals(construct::product(construct::zmod(2), construct::zmod(2))).size(), 4u);
}

TEST(Ideals, Arithmetic) {
  const auto Z8 = construct::zmod(8);
  const auto Z12 = construct::zmod(12);
  const auto Z6 = construct::zmod(6);
  EXPECT_EQ(radical(gen(Z8, 4)), gen(Z8, 2));
  EXPECT_EQ(radical(zero_ideal(Z12)), gen(Z12, 6));
  EXPECT_EQ(colon(gen(Z8, 4), ElementSubset(Z8, {2})), gen(Z8, 2));
  EXPECT_EQ(colon(gen(Z12, 4), ElementSubset(Z12, {1})), gen(Z12, 4));
  EXPECT_EQ(colon(zero_ideal(Z6), ElementSubset(Z6, {3})), gen(Z6, 2));
  EXPECT_THROW(colon(gen(Z6, 2), ElementSubset(Z6, std::initializer_list<Elem>{})), InvalidArgument);
  EXPECT_EQ(ideal_sum(gen(Z12, 4), gen(Z12, 6)), gen(Z12, 2));
  EXPECT_EQ(ideal_product(gen(Z12, 4), unit_ideal(Z12)), gen(Z12, 4));
  EXPECT_EQ(ideal_intersection(gen(Z12, 4), gen(Z12, 6)), zero_ideal(Z12));
  EXPECT_EQ(ideal_power(gen(Z8, 2), 2), gen(Z8, 4));
  EXPECT_EQ(ideal_power(gen(Z8, 2), 3), zero_ideal(Z8));
}

TEST(Ideals, MaximalPrimeAndJOfI) {
  const auto Z12 = construct::zmod(12);
  const auto maxs = maximal_ideals(Z12);
  ASSERT_EQ(maxs.size(), 2u);
  EXPECT_TRUE((maxs[0] == gen(Z12, 2) && maxs[1] == gen(Z12, 3)) ||
              (maxs[0] == gen(Z12, 3) && maxs[1] == gen(Z12, 2)));
  EXPECT_EQ(prime_ideals(Z12).size(), 2u);
  const auto F = construct::zmod(5);
  ASSERT_EQ(prime_ideals(F).size(), 1u);
  EXPECT_TRUE(prime_ideals(F)[0].is_zero());
  EXPECT_EQ(j_of_ideal(gen(Z12, 4)), gen(Z12, 2));
  EXPECT_EQ(j_of_ideal(zero_ideal(Z12)), gen(Z12, 6));
  EXPECT_THROW(j_of_ideal(unit_ideal(Z12)), InvalidArgument);
}

TEST(Ideals, ZeroDimensional) {
  for (unsigned n = 2; n <= 20; ++n) EXPECT_TRUE(is_zero_dimensional(construct::zmod(n))) << n;
  EXPECT_TRUE(is_zero_dimensional(construct::poly_quotient(2, {0, 0, 0, 1})));
}

TEST(RingTable, RejectsBadTables) {
  // Z2 with a broken multiplication: 1*1 = 0.
  EXPECT_THROW(RingTable::create(2, {0, 1, 1, 0}, {0, 0, 0, 0}, 0, 1, "bad"), InvalidRing);
  // Non-commutative multiplication table.
  EXPECT_THROW(RingTable::create(2, {0, 1, 1, 0}, {0, 1, 0, 1}, 0, 1, "bad"), InvalidRing);
  EXPECT_THROW(RingTable::create(2, {0, 1, 1}, {0, 0, 0, 1}, 0, 1, "bad"), InvalidRing);
  EXPECT_THROW(construct::zmod(257), InvalidArgument);
  EXPECT_THROW(construct::product(construct::zmod(16), construct::zmod(17)), CapExceeded);
  EXPECT_NO_THROW(construct::zmod(256));
}

TEST(RingTable, AxiomCheckersAgreeAndNameTheAxiom) {
  std::vector<Elem> add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  std::vector<Elem> mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};  // 2*2 = 2 breaks Z3
  const auto a = check_axioms(3, add, mul, 0, 1);
  const auto b = check_axioms_serial(3, add, mul, 0, 1);
  ASSERT_TRUE(a.has_value());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(a->axiom, b->axiom);
  mul[8] = 1;
  EXPECT_FALSE(check_axioms(3, add, mul, 0, 1).has_value());
}

TEST(IdealSet, CheckedRejectsNonIdeals) {
  const auto Z6 = construct::zmod(6);
  ElemBits b;
  b.set(0);
  b.set(2);
  EXPECT_THROW(IdealSet::checked(Z6, b), InvalidArgument);
  b.set(4);
  EXPECT_NO_THROW(IdealSet::checked(Z6, b));
}

TEST(IdealSet, MixingRingsThrows) {
  const auto A = construct::zmod(6);
  const auto B = construct::zmod(6);
  EXPECT_THROW(ideal_sum(gen(A, 2), gen(B, 3)), RingMismatch);
}

// Property: the cached invariants match the oracle on a spread of rings.
class InvariantOracle : public ::testing::TestWithParam<std::string> {};

RingRef ring_named(const std::string& which) {
  if (which == "Z12") return construct::zmod(12);
  if (which == "Z16") return construct::zmod(16);
  if (which == "Z30") return construct::zmod(30);
  if (which == "Z4xZ6") return construct::product(construct::zmod(4), construct::zmod(6));
  if (which == "F2[x]/x3") return construct::poly_quotient(2, {0, 0, 0, 1});
  if (which == "F3[x]/x2+1") return construct::poly_quotient(3, {1, 0, 1});
  const auto Z4 = construct::zmod(4);
  return construct::idealization(Z4, construct::module_self(Z4)).ring;
}

TEST_P(InvariantOracle, MatchesBruteForce) {
  const auto R = ring_named(GetParam());
  const auto t = oracle::of(*R);
  EXPECT_EQ(oracle::to_set(nilradical(R).bits(), t.n), oracle::nilradical(t));
  EXPECT_EQ(oracle::to_set(jacobson(R).bits(), t.n), oracle::jacobson(t));
  EXPECT_EQ(jacobson_by_maximals(R), jacobson_by_units(R));
  const auto lattice = oracle::ideals(t);
  const auto ideals = enumerate_ideals(R);
  ASSERT_EQ(ideals.size(), lattice.size());
  for (const auto& I : ideals) {
    EXPECT_TRUE(lattice.count(oracle::to_set(I.bits(), t.n)));
    EXPECT_EQ(oracle::to_set(radical(I).bits(), t.n), oracle::radical(t, oracle::to_set(I.bits(), t.n)));
  }
  for (Elem a = 0; a < R->order(); ++a) EXPECT_EQ(units(R).contains(a), oracle::is_unit(t, a));
}

INSTANTIATE_TEST_SUITE_P(Rings, InvariantOracle,
                         ::testing::Values("Z12", "Z16", "Z30", "Z4xZ6", "F2[x]/x3", "F3[x]/x2+1",
                                           "Z4(+)Z4"),
                         [](const auto& info) {
                           std::string s;
                           for (char c : info.param) s += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
                           return s;
                         });

TEST(Invariants, SharedAcrossThreads) {
  const auto R = construct::zmod(64);
  std::vector<ElemBits> seen(8);
#pragma omp parallel for
  for (int i = 0; i < 8; ++i) seen[i] = R->invariants().jacobson;
  for (const auto& b : seen) EXPECT_EQ(b, seen[0]);
}
