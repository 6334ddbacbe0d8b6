#include <gtest/gtest.h>

#include "qjlab/classify.hpp"
#include "qjlab/construct.hpp"
#include "qjlab/errors.hpp"
#include "qjlab/expr.hpp"
#include "qjlab/harness.hpp"

using namespace qjlab;
using namespace qjlab::harness;

namespace {

Recipe just(std::vector<std::string> rings) {
  Recipe r;
  r.rings = std::move(rings);
  return r;
}

const Catalog& default_catalog() {
  static const Catalog c = build_catalog(default_recipe());
  return c;
}

const Report& default_report() {
  static const Report r = run(default_catalog());
  return r;
}

}  // namespace

TEST(Catalog, DefaultIsStable) {
  const auto& c = default_catalog();
  EXPECT_EQ(c.rings.size(), 181u);
  EXPECT_EQ(c.symbolic.size(), 6u);
  EXPECT_EQ(c.symbolic[3].name(), "Z(+)Z");
}

TEST(Catalog, SmallRecipes) {
  EXPECT_EQ(build_catalog(just({"Z 2"})).rings.size(), 1u);
  Recipe r;
  r.products_max = 3;
  const auto c = build_catalog(r);
  bool found = false;
  for (const auto& e : c.rings) found = found || e.ring->label() == "prod (Z 2) (Z 3)";
  EXPECT_TRUE(found);
}

TEST(Catalog, RecipeErrors) {
  EXPECT_THROW(parse_recipe("{\"zmod\": {\"max\": 10}, \"bogus\": 1}"), ParseError);
  EXPECT_THROW(parse_recipe("[1,2]"), ParseError);
  EXPECT_THROW(parse_recipe("{\"zmod\": {\"min\": 2}}"), ParseError);
  EXPECT_THROW(build_catalog(parse_recipe("{\"zmod\": {\"max\": 300}}")), CapExceeded);
  EXPECT_THROW(build_catalog(parse_recipe("{\"products\": {\"max\": 17}}")), CapExceeded);
  EXPECT_THROW(build_catalog(just({"ideal (Z 4) 2"})), ParseError);
  const auto r = parse_recipe(recipe_json(default_recipe()));
  EXPECT_EQ(recipe_json(r), recipe_json(default_recipe()));
}

TEST(Registry, IdsAndErrors) {
  EXPECT_THROW(resolve_ids({"bogus"}), UnknownName);
  EXPECT_EQ(resolve_ids({"T-R", "T-R"}).size(), 1u);
  for (const char* id : {"T-EQ", "C-EQ", "T-JI", "T-QL", "T-DELTA", "T-SEMI", "T-L1", "T-L2", "T-MAX",
                         "C-J", "T-ZERO", "C-PIR", "T-SUP", "T-INT", "T-PROD", "T-F", "T-S", "T-R",
                         "T-PIDE", "T-Q1", "T-P/", "C-0", "T-VNR", "T-REG"})
    EXPECT_NO_THROW(resolve_ids({id})) << id;
  EXPECT_FALSE(out_of_scope().empty());
}

TEST(Run, TEqOnDefaultCatalog) {
  const auto r = run(default_catalog(), {"T-EQ"});
  ASSERT_EQ(r.results.size(), 1u);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.results[0].tally.satisfied, 0u);
}

TEST(Run, ProductsHaveNoQuasiJIdeals) {
  const auto r = run(build_catalog(just({"prod (Z 2) (Z 3)"})), {"T-R"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.results[0].tally.instances, 3u);
  const auto R = construct::parse_ring("prod (Z 2) (Z 3)");
  for (const auto& I : finring::enumerate_ideals(R))
    if (I.is_proper()) EXPECT_FALSE(classify::is_quasi_j_ideal(I).holds);
}

TEST(Run, FieldIsQuasiLocal) {
  const auto r = run(build_catalog(just({"Z 7"})), {"T-QL"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.results[0].tally.satisfied, 1u);
}

TEST(Run, EveryCheckButZeroDimensionalPasses) {
  const auto& r = default_report();
  for (const auto& c : r.results) {
    if (c.id == "T-ZERO") continue;
    EXPECT_TRUE(c.tally.failures.empty()) << c.id << ": " << c.tally.failures.front().detail;
  }
  for (const char* id : {"T-EQ", "T-JI", "T-DELTA", "T-QL", "T-P/", "T-PIDE"})
    EXPECT_GT(r.find(id)->tally.satisfied, 0u) << id;
}

// The zero-dimensional characterization's (2)=>(3) fails on Z4(+)Z2: the
// ideal {(0,0),(2,0)} is quasi primary but no prime power since M^2 = 0.
TEST(Run, ZeroDimensionalCounterexample) {
  const auto R = construct::parse_ring("idl (Z 4) quotmod <2>");
  const auto I = construct::parse_ideal(R, "(2,[0])");
  EXPECT_EQ(I.size(), 2u);
  EXPECT_TRUE(classify::is_quasi_primary(I).holds);
  EXPECT_TRUE(classify::is_quasi_j_ideal(I).holds);
  const auto M = finring::maximal_ideals(R);
  ASSERT_EQ(M.size(), 1u);
  EXPECT_TRUE(finring::ideal_power(M[0], 2).is_zero());
  EXPECT_FALSE(M[0] == I);
  const auto* zero = default_report().find("T-ZERO");
  ASSERT_NE(zero, nullptr);
  EXPECT_FALSE(zero->tally.failures.empty());
  for (const auto& f : zero->tally.failures) EXPECT_NE(f.detail.find("(3)=F"), std::string::npos);
}

TEST(Run, ChecksDoNotThrowOnOddRings) {
  const auto r = run(build_catalog(just({"loc (prod (Z 4) (Z 3)) (1,0)", "idl (Z 3) zeromod"})));
  for (const auto& c : r.results)
    for (const auto& f : c.tally.failures) EXPECT_EQ(f.detail.find("error:"), std::string::npos) << c.id;
}

TEST(Report, DeterministicJson) {
  const auto a = report_json(run(default_catalog()));
  const auto b = report_json(run(default_catalog()));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("wall"), std::string::npos);
  EXPECT_NE(report_text(default_report()).find("failures:"), std::string::npos);
}

TEST(Search, NegativeSpace) {
  const auto& c = default_catalog();
  EXPECT_FALSE(search_counterexample("quasiJ_not_J", c, Part::Finite).has_value());
  const auto s = search_counterexample("quasiJ_not_J", c, Part::Symbolic);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->ring, "Z(+)Z");
  EXPECT_EQ(s->ideal, "0(+)2Z");
  const auto p = search_counterexample("quasi_presimpl_not_presimpl", c, Part::Symbolic);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->ring, "Z(+)Z2");
  EXPECT_FALSE(search_counterexample("nil_ne_jac", c, Part::Finite).has_value());
  EXPECT_FALSE(search_counterexample("quasiJ_not_quasi_local", c, Part::Finite).has_value());
  EXPECT_TRUE(search_counterexample("nil_ne_jac", c, Part::Symbolic).has_value());
  EXPECT_THROW(search_counterexample("bogus", c, Part::Finite), UnknownName);
}

TEST(Replay, AllAndMutatedAndEmpty) {
  EXPECT_TRUE(replay_examples(zsym::Engine()).ok());
  EXPECT_EQ(replay_examples(zsym::Engine()).passed(), 5u);
  EXPECT_FALSE(replay_examples(zsym::Engine(zsym::EngineOptions{50, "Z.radical"})).ok());
  EXPECT_THROW(replay_examples(zsym::Engine(), {}), InvalidArgument);
}

TEST(Run, SymbolicOnlyCatalog) {
  Catalog c;
  c.symbolic = {zsym::SymRing::idealization_z(), zsym::SymRing::idealization(2)};
  const auto r = run(c, {"SYM-RULES", "SYM-PIDE"});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.finite_rings, 0u);
  EXPECT_GT(r.results[0].tally.instances, 0u);
}
