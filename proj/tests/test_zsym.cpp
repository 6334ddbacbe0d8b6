#include <gtest/gtest.h>

#include <numeric>

#include "qjlab/errors.hpp"
#include "qjlab/zsym.hpp"

using namespace qjlab;
using namespace qjlab::zsym;

namespace {

const SymRing Z = SymRing::integers();
const SymRing ZZ = SymRing::idealization_z();
const SymRing ZZ2 = SymRing::idealization(2);
const SymRing Z2loc = SymRing::local(2);

std::vector<std::string> shown(const SymRing& R, const std::vector<SymElem>& w) {
  std::vector<std::string> out;
  for (const auto& x : w) out.push_back(format_elem(R, x));
  return out;
}

}  // namespace

TEST(SymRings, NamesAndParsing) {
  EXPECT_EQ(Z.name(), "Z");
  EXPECT_EQ(Z2loc.name(), "Z(2)");
  EXPECT_EQ(ZZ2.name(), "Z(+)Z2");
  EXPECT_EQ(ZZ.name(), "Z(+)Z");
  EXPECT_EQ(parse_sym_ring("ZplusZ").family, Family::IdealizationZ);
  EXPECT_EQ(parse_sym_ring("ZplusZ4").param, 4);
  EXPECT_EQ(parse_sym_ring("Z(3)").param, 3);
  EXPECT_THROW(parse_sym_ring("Z(4)"), std::invalid_argument);
  EXPECT_THROW(parse_sym_ring("Q"), ParseError);
  EXPECT_THROW(SymRing::idealization(1), InvalidArgument);
}

TEST(SymIdeals, CanonicalFormsAndHomogeneity) {
  EXPECT_EQ(z_ideal(-12), z_ideal(12));
  EXPECT_EQ(format_ideal(Z, z_ideal(12)), "<12>");
  EXPECT_EQ(format_ideal(Z2loc, local_ideal(3)), "<2^3>");
  EXPECT_EQ(format_ideal(ZZ, idl_ideal(ZZ, 0, 2)), "0(+)2Z");
  EXPECT_EQ(format_ideal(ZZ, parse_sym_ideal(ZZ, "0,2Z")), "0(+)2Z");
  EXPECT_EQ(parse_sym_ideal(ZZ, "0(+)2Z"), idl_ideal(ZZ, 0, 2));
  // 2Z(+)N needs 2·Z ⊆ N
  EXPECT_THROW(idl_ideal(ZZ, 2, 4), InvalidArgument);
  EXPECT_NO_THROW(idl_ideal(ZZ, 4, 2));
  // module generators reduce mod k
  EXPECT_EQ(idl_ideal(ZZ2, 0, 3), idl_ideal(ZZ2, 0, 1));
  for (const auto& R : {Z, Z2loc, ZZ, ZZ2, SymRing::idealization(4)})
    for (const auto& I : candidate_ideals(R)) {
      EXPECT_EQ(canonical(R, I), I);
      EXPECT_EQ(parse_sym_ideal(R, format_ideal(R, I)), I) << format_ideal(R, I);
    }
}

TEST(SymArithmetic, Radical) {
  const Engine E;
  EXPECT_EQ(E.radical(Z, z_ideal(12)), z_ideal(6));
  EXPECT_EQ(E.radical(Z, z_ideal(0)), z_ideal(0));
  EXPECT_EQ(E.radical(ZZ, idl_ideal(ZZ, 0, 2)), idl_ideal(ZZ, 0, 1));
  EXPECT_EQ(E.radical(Z2loc, local_ideal(3)), local_ideal(1));
  EXPECT_EQ(E.radical(Z2loc, local_zero()), local_zero());
}

TEST(SymArithmetic, Colon) {
  const Engine E;
  EXPECT_EQ(E.colon(Z, z_ideal(12), {2, 0}), z_ideal(6));
  EXPECT_EQ(E.colon(Z, z_ideal(12), {1, 0}), z_ideal(12));
  EXPECT_EQ(E.colon(Z, z_ideal(12), {5, 0}), z_ideal(12));
  EXPECT_EQ(E.radical(Z, E.colon(Z, z_ideal(12), {2, 0})), z_ideal(6));
  EXPECT_EQ(E.colon(Z, E.radical(Z, z_ideal(12)), {2, 0}), z_ideal(3));
  EXPECT_THROW(E.colon(ZZ, idl_ideal(ZZ, 0, 2), {0, 1}), InvalidArgument);
}

TEST(SymArithmetic, RadicalsOfRings) {
  const Engine E;
  EXPECT_EQ(E.jacobson(ZZ), idl_ideal(ZZ, 0, 1));
  EXPECT_EQ(E.nilradical(Z), z_ideal(0));
  EXPECT_EQ(E.jacobson(Z2loc), local_ideal(1));
  EXPECT_EQ(E.product(ZZ2, idl_ideal(ZZ2, 0, 1), idl_ideal(ZZ2, 0, 1)), idl_ideal(ZZ2, 0, 2));
}

// (3,1) in Z(+)Z2: (3,1)(b,m) = (3b, 3m + b) = (1,0) has no integer b.
TEST(SymArithmetic, UnitsOfIdealization) {
  const Engine E;
  EXPECT_FALSE(E.units_contains(ZZ2, {3, 1}));
  EXPECT_TRUE(E.units_contains(ZZ2, {-1, 1}));
  EXPECT_TRUE(E.units_contains(ZZ2, {1, 1}));
  EXPECT_FALSE(E.units_contains(ZZ2, {0, 1}));
  EXPECT_TRUE(E.units_contains(Z2loc, {3, 5}));
  EXPECT_FALSE(E.units_contains(Z2loc, {2, 3}));
}

TEST(SymClassify, ExampleTwo) {
  const Engine E;
  const auto I = idl_ideal(ZZ, 0, 2);
  const auto qj = E.classify(ZZ, I, "quasi_j");
  EXPECT_EQ(qj.status, Status::ProvenByRule);
  EXPECT_FALSE(qj.rule_id.empty());
  const auto j = E.classify(ZZ, I, "j_ideal");
  ASSERT_EQ(j.status, Status::RefutedWithWitness);
  EXPECT_EQ(shown(ZZ, j.witness), (std::vector<std::string>{"(2,0)", "(0,1)"}));
  EXPECT_TRUE(E.witness_refutes(ZZ, I, "j_ideal", j.witness));
  EXPECT_TRUE(E.classify(Z, z_ideal(0), "j_ideal").holds());
}

TEST(SymClassify, ExampleDelta) {
  const Engine E;
  const auto v = E.classify(Z2loc, local_ideal(1), "delta1_n");
  ASSERT_EQ(v.status, Status::RefutedWithWitness);
  EXPECT_EQ(shown(Z2loc, v.witness), (std::vector<std::string>{"2/3", "3/5"}));
  EXPECT_TRUE(E.classify(Z2loc, local_ideal(1), "quasi_j").holds());
  EXPECT_EQ(E.ring_classify(Z2loc, "quasi_local").status, Status::ProvenByRule);
}

TEST(SymClassify, ExampleExp) {
  const Engine E;
  EXPECT_EQ(E.ring_classify(ZZ2, "quasi_presimplifiable").status, Status::ProvenByRule);
  const auto v = E.ring_classify(ZZ2, "presimplifiable");
  ASSERT_EQ(v.status, Status::RefutedWithWitness);
  EXPECT_EQ(shown(ZZ2, v.witness), (std::vector<std::string>{"(0,1)", "(3,1)"}));
  EXPECT_TRUE(E.ring_witness_refutes(ZZ2, "presimplifiable", v.witness));
}

TEST(SymClassify, FallbackSearchAndErrors) {
  const Engine E(EngineOptions{8, ""});
  const auto v = E.classify(ZZ, idl_ideal(ZZ, 4, 2), "primary");
  EXPECT_TRUE(v.rule_id.empty());
  EXPECT_EQ(v.bound, 8);
  EXPECT_THROW(E.classify(Z, z_ideal(1), "quasi_j"), InvalidArgument);
  EXPECT_THROW(E.classify(Z, z_ideal(6), "bogus"), UnknownName);
  EXPECT_THROW(E.ring_classify(Z, "bogus"), UnknownName);
}

// Property: rule verdicts never contradict the bounded search, and every
// refuting witness re-validates.
TEST(SymClassify, RulesAgreeWithSearch) {
  const Engine E(EngineOptions{10, ""});
  for (const auto& R : {Z, Z2loc, SymRing::local(3), ZZ, ZZ2, SymRing::idealization(4)}) {
    for (const auto& I : candidate_ideals(R))
      for (const auto& p : sym_ideal_predicates()) {
        const auto v = E.classify(R, I, p);
        const auto where = R.name() + " " + format_ideal(R, I) + " " + p;
        if (v.status == Status::ProvenByRule) EXPECT_TRUE(E.search(R, I, p, 10).holds()) << where;
        if (v.status == Status::RefutedWithWitness)
          EXPECT_TRUE(E.witness_refutes(R, I, p, v.witness)) << where;
      }
    for (const auto& p : sym_ring_predicates()) {
      const auto v = E.ring_classify(R, p);
      if (v.status == Status::ProvenByRule) EXPECT_TRUE(E.ring_search(R, p, 10).holds()) << R.name() << p;
    }
  }
}

TEST(SymSearch, ParallelMatchesSerial) {
  const Engine E;
  for (const auto& R : {Z, ZZ, ZZ2})
    for (const auto& I : candidate_ideals(R))
      for (const auto& p : {"j_ideal", "quasi_j", "prime", "primary"}) {
        const auto a = E.search(R, I, p, 9);
        const auto b = E.search_serial(R, I, p, 9);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.witness, b.witness);
        EXPECT_EQ(a.hypothesis_count, b.hypothesis_count);
      }
}

TEST(SymSearch, BoxOrder) {
  const auto box = box_elements(Z, 2);
  std::vector<std::int64_t> firsts;
  for (const auto& x : box) firsts.push_back(x.first);
  EXPECT_EQ(firsts, (std::vector<std::int64_t>{0, 1, -1, 2, -2}));
}

TEST(Replays, AllPass) {
  const Engine E;
  for (const auto& id : example_ids()) {
    const auto r = replay_example(id, E);
    EXPECT_TRUE(r.passed()) << id;
    EXPECT_FALSE(r.steps.empty());
    EXPECT_TRUE(check_example_witness(id, E));
  }
  EXPECT_THROW(replay_example("nope", E), UnknownName);
}

TEST(Replays, EveryMutationIsDetected) {
  for (const auto& m : mutation_ids()) {
    const Engine E(EngineOptions{50, m});
    std::size_t failed = 0;
    for (const auto& id : example_ids()) failed += replay_example(id, E).passed() ? 0 : 1;
    EXPECT_GE(failed, 1u) << m;
  }
}

TEST(NumberTheory, Helpers) {
  EXPECT_EQ(gcd64(12, 18), 6);
  EXPECT_EQ(gcd64(0, 5), 5);
  EXPECT_EQ(squarefree_kernel(12), 6);
  EXPECT_EQ(squarefree_kernel(1), 1);
  EXPECT_TRUE(is_prime64(97));
  EXPECT_FALSE(is_prime64(91));
  for (std::int64_t a = -20; a <= 20; ++a)
    for (std::int64_t b = -20; b <= 20; ++b) EXPECT_EQ(gcd64(a, b), std::gcd(a, b));
}
