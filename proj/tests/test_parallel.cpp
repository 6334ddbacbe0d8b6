#include <gtest/gtest.h>
#include <omp.h>

#include "qjlab/construct.hpp"
#include "qjlab/harness.hpp"

using namespace qjlab;

// The parallel kernels must reproduce their serial references exactly,
// whatever the thread count.

TEST(Parallel, SuiteMatchesSerialReference) {
  harness::Recipe r = harness::default_recipe();
  r.zmod = harness::Recipe::Range{2, 16};
  r.products_max = 5;
  const auto c = harness::build_catalog(r);
  const auto serial = harness::report_json(harness::run_serial(c));
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(harness::report_json(harness::run(c)), serial) << threads;
  }
}

TEST(Parallel, SymbolicSearchMatchesSerial) {
  const zsym::Engine E;
  const auto R = zsym::SymRing::idealization_z();
  for (int threads : {1, 3}) {
    omp_set_num_threads(threads);
    for (const auto& I : zsym::candidate_ideals(R)) {
      const auto a = E.search(R, I, "primary", 11);
      const auto b = E.search_serial(R, I, "primary", 11);
      EXPECT_EQ(a.status, b.status);
      EXPECT_EQ(a.witness, b.witness);
      EXPECT_EQ(a.hypothesis_count, b.hypothesis_count);
    }
  }
}

TEST(Parallel, AxiomScanMatchesSerial) {
  const auto R = construct::product(construct::zmod(6), construct::zmod(10));
  std::vector<Elem> mul(R->mul_table().begin(), R->mul_table().end());
  for (int threads : {1, 4}) {
    omp_set_num_threads(threads);
    EXPECT_FALSE(finring::check_axioms(R->order(), R->add_table(), mul, R->zero(), R->one()));
    for (std::size_t k : {7u, 1000u, 3599u}) {
      auto bad = mul;
      bad[k] = static_cast<Elem>((bad[k] + 1) % R->order());
      const auto a = finring::check_axioms(R->order(), R->add_table(), bad, R->zero(), R->one());
      const auto b = finring::check_axioms_serial(R->order(), R->add_table(), bad, R->zero(), R->one());
      ASSERT_TRUE(a && b);
      EXPECT_EQ(a->axiom, b->axiom);
      EXPECT_EQ(a->elements, b->elements);
    }
  }
}
