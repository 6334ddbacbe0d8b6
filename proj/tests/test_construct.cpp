#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qjlab/construct.hpp"
#include "qjlab/errors.hpp"

using namespace qjlab;
using namespace qjlab::construct;
using finring::ElementSubset;

TEST(Zmod, Basics) {
  const auto R = zmod(12);
  EXPECT_EQ(R->order(), 12u);
  EXPECT_EQ(R->label(), "Z 12");
  EXPECT_EQ(R->add(7, 8), 3);
  EXPECT_EQ(R->mul(5, 7), 11);
  EXPECT_THROW(zmod(1), InvalidArgument);
  EXPECT_THROW(zmod(0), InvalidArgument);
}

TEST(Product, ComponentwiseOps) {
  const auto R = product(zmod(2), zmod(3));
  ASSERT_EQ(R->order(), 6u);
  EXPECT_EQ(R->name(R->one()), "(1,1)");
  // (1,2)*(1,2) = (1,1)
  EXPECT_EQ(R->mul(1 * 3 + 2, 1 * 3 + 2), R->one());
  EXPECT_EQ(finring::enumerate_ideals(R).size(), 4u);
  EXPECT_THROW(product(zmod(16), zmod(17)), CapExceeded);
}

TEST(Quotient, ProjectionAndLabel) {
  const auto Z12 = zmod(12);
  const auto q = quotient(finring::principal(Z12, 4));
  EXPECT_EQ(q.ring->order(), 4u);
  EXPECT_EQ(q.ring->label(), "quot (Z 12) <4>");
  EXPECT_TRUE(q.projection.is_surjective());
  EXPECT_EQ(q.projection.kernel(), finring::principal(Z12, 4));
  EXPECT_THROW(quotient(finring::unit_ideal(Z12)), InvalidArgument);
}

TEST(PolyQuotient, Shapes) {
  const auto R = poly_quotient(2, {1, 1, 1});  // F4
  EXPECT_EQ(R->order(), 4u);
  EXPECT_EQ(finring::enumerate_ideals(R).size(), 2u);
  const auto S = poly_quotient(3, {0, 0, 1});  // F3[x]/(x^2)
  EXPECT_EQ(S->order(), 9u);
  EXPECT_EQ(finring::nilradical(S).size(), 3u);
  EXPECT_THROW(poly_quotient(4, {0, 0, 1}), InvalidArgument);
  EXPECT_THROW(poly_quotient(2, {0, 0, 2}), InvalidArgument);  // not monic mod 2
}

TEST(Idealization, SelfModuleOverZ2) {
  const auto Z2 = zmod(2);
  const auto idl = idealization(Z2, module_self(Z2));
  EXPECT_EQ(idl.ring->order(), 4u);
  EXPECT_EQ(idl.ring->label(), "idl (Z 2) selfmod");
  // (0,m)^2 = 0, so N = 0(+)Z2
  const auto N = finring::nilradical(idl.ring);
  EXPECT_EQ(N, ideal_in_idealization(idl, finring::zero_ideal(Z2), full_submodule(idl.module)));
  // (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)
  EXPECT_EQ(idl.ring->mul(idl.encode(1, 1), idl.encode(1, 1)), idl.encode(1, 0));
  EXPECT_EQ(idl.decode(idl.encode(1, 1)), std::make_pair(Elem{1}, Elem{1}));
}

TEST(Idealization, JacobsonIsJOfBasePlusModule) {
  for (unsigned n : {4u, 6u, 8u, 9u}) {
    const auto base = zmod(n);
    const auto idl = idealization(base, module_self(base));
    const auto expected =
        ideal_in_idealization(idl, finring::jacobson(base), full_submodule(idl.module));
    EXPECT_EQ(finring::jacobson(idl.ring), expected) << n;
  }
}

TEST(Idealization, RejectsNonHomogeneousPieces) {
  const auto Z4 = zmod(4);
  const auto idl = idealization(Z4, module_self(Z4));
  // <1>(+)0 is not an ideal: (1,0)(0,1) = (0,1).
  EXPECT_THROW(ideal_in_idealization(idl, finring::unit_ideal(Z4), zero_submodule(idl.module)),
               InvalidArgument);
}

TEST(Modules, SubmodulesOfQuotientModule) {
  const auto Z12 = zmod(12);
  const auto M = module_from_quotient(finring::principal(Z12, 4));  // Z12/<4> ~ Z4
  EXPECT_EQ(M->order(), 4u);
  EXPECT_EQ(submodules(M).size(), 3u);
  EXPECT_EQ(submodules(module_zero(Z12)).size(), 1u);
}

TEST(Localization, Z12AtPowersOfThree) {
  const auto Z12 = zmod(12);
  const auto loc = localize(Z12, powers_of(Z12, 3));
  EXPECT_EQ(loc.ring->order(), 4u);
  // isomorphic to Z4: cyclic additive group of order 4
  bool cyclic = false;
  for (Elem g = 0; g < 4 && !cyclic; ++g) {
    Elem x = g;
    int k = 1;
    while (x != loc.ring->zero()) {
      x = loc.ring->add(x, g);
      ++k;
    }
    cyclic = k == 4;
  }
  EXPECT_TRUE(cyclic);
  EXPECT_TRUE(loc.canonical.is_surjective());
  EXPECT_THROW(localize(Z12, ElementSubset(Z12, {0, 1})), InvalidArgument);
  EXPECT_THROW(localize(Z12, ElementSubset(Z12, {2, 3})), InvalidArgument);
}

TEST(Homomorphisms, PushAndPull) {
  const auto Z12 = zmod(12);
  const auto q = quotient(finring::principal(Z12, 6));
  const auto pushed = push_ideal(q.projection, finring::principal(Z12, 4));
  EXPECT_EQ(pushed.size(), 3u);  // {0,4,8} -> {[0],[4],[2]}
  EXPECT_EQ(pull_ideal(q.projection, finring::zero_ideal(q.ring)), q.projection.kernel());
  EXPECT_EQ(pull_ideal(q.projection, pushed), finring::principal(Z12, 2));
  EXPECT_THROW(RingHom(zmod(4), zmod(2), {0, 1, 1, 0}), InvalidArgument);
}

// Property: every constructor yields tables that pass the independent
// brute-force axiom check.
TEST(Constructors, OracleAxioms) {
  const auto Z6 = zmod(6);
  const std::vector<finring::RingRef> rings = {
      zmod(10), product(zmod(3), zmod(4)), poly_quotient(3, {2, 0, 1}),
      idealization(Z6, module_from_quotient(finring::principal(Z6, 3))).ring,
      quotient(finring::principal(product(zmod(4), zmod(4)), 6)).ring,
      localize(Z6, powers_of(Z6, 2)).ring};
  for (const auto& R : rings) {
    const auto t = oracle::of(*R);
    for (unsigned a = 0; a < t.n; ++a)
      for (unsigned b = 0; b < t.n; ++b) {
        ASSERT_EQ(t.times(a, b), t.times(b, a)) << R->label();
        ASSERT_EQ(t.times(t.one, a), a);
        for (unsigned c = 0; c < t.n; ++c) {
          ASSERT_EQ(t.times(a, t.plus(b, c)), t.plus(t.times(a, b), t.times(a, c))) << R->label();
          ASSERT_EQ(t.times(a, t.times(b, c)), t.times(t.times(a, b), c)) << R->label();
        }
      }
  }
}
