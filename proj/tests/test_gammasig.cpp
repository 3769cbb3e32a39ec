// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fanlab/gammasig.hpp"

#include <gtest/gtest.h>

#include "fanlab/corpus.hpp"
#include "fanlab/error.hpp"

namespace fanlab::gammasig {
namespace {

using V = std::vector<long long>;

TEST(FVector, Examples) {
  EXPECT_EQ(f_vector(corpus::sq2()), (V{4, 4}));
  EXPECT_EQ(f_vector(corpus::pent()), (V{5, 5}));
  EXPECT_EQ(f_vector(corpus::cross_polytope(4)), (V{8, 24, 32, 16}));
}

TEST(HVector, Examples) {
  EXPECT_EQ(h_vector({4, 4}), (V{1, 2, 1}));
  EXPECT_EQ(h_vector({5, 5}), (V{1, 3, 1}));
  EXPECT_EQ(h_vector({8, 24, 32, 16}), (V{1, 4, 6, 4, 1}));
}

TEST(GammaVector, Examples) {
  EXPECT_EQ(gamma_vector({1, 2, 1}), (V{1, 0}));
  EXPECT_EQ(gamma_vector({1, 3, 1}), (V{1, 1}));
  EXPECT_EQ(gamma_vector({1, 4, 6, 4, 1}), (V{1, 0, 0}));
  EXPECT_EQ(gamma_vector({1, 5, 5, 1}), (V{1, 2}));
  EXPECT_THROW(gamma_vector({1, 2, 2}), PreconditionError);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(corpus::sq2()).signature, 0);
  EXPECT_EQ(signature(corpus::pent()).signature, -1);
  const SignatureReport cp = signature(corpus::cross_polytope(4));
  EXPECT_EQ(cp.signature, 0);
  EXPECT_EQ(cp.gamma, (V{1, 0, 0}));
  EXPECT_THROW(signature(corpus::cross_polytope(3)), PreconditionError);
}

TEST(Signature, PolygonFamily) {
  for (int n = 4; n <= 8; ++n) {
    const SignatureReport r = signature(corpus::ngon(n));
    EXPECT_EQ(r.h, (V{1, n - 2, 1}));
    EXPECT_EQ(r.signature, 4 - n);
    EXPECT_EQ(r.signed_top_gamma, r.signature);
  }
}

TEST(OddTuples, Examples) {
  EXPECT_EQ(odd_tuples(2, 4), (std::vector<polymat::ExponentTuple>{{1, 3}, {3, 1}}));
  EXPECT_EQ(odd_tuples(1, 1), (std::vector<polymat::ExponentTuple>{{1}}));
  EXPECT_TRUE(odd_tuples(2, 3).empty());
  EXPECT_EQ(odd_tuples(3, 5).size(), 3u);
}

TEST(VanishingMonomialSuite, Examples) {
  EXPECT_TRUE(vanishing_monomial_suite(corpus::sq2()).witnesses.empty());
  EXPECT_TRUE(vanishing_monomial_suite(corpus::cross_polytope(4)).witnesses.empty());
  const SuiteReport pe = vanishing_monomial_suite(corpus::pent());
  ASSERT_EQ(pe.witnesses.size(), 3u);
  const std::vector<Cone> cones = {{0}, {1}, {4}};
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(pe.witnesses[i].p, 1);
    EXPECT_EQ(pe.witnesses[i].cone, cones[i]);
    EXPECT_EQ(pe.witnesses[i].tuple, (polymat::ExponentTuple{1}));
  }
  EXPECT_THROW(vanishing_monomial_suite(corpus::p2()), PreconditionError);
  EXPECT_THROW(vanishing_monomial_suite(corpus::cross_polytope(3)), PreconditionError);
}

TEST(VanishingMonomialSuite, ThreadCountDoesNotChangeTheReport) {
  const Fan f = corpus::product(corpus::sq2(), corpus::pent());
  const SuiteReport a = vanishing_monomial_suite(f, 1);
  const SuiteReport b = vanishing_monomial_suite(f, 3);
  EXPECT_EQ(a.cones_checked, b.cones_checked);
  EXPECT_EQ(a.cones_skipped, b.cones_skipped);
  EXPECT_EQ(a.witnesses.size(), b.witnesses.size());
}

TEST(SignatureZeroPredicate, Examples) {
  const PredicateReport sq = signature_zero_predicate(corpus::sq2());
  EXPECT_TRUE(sq.predicate);
  EXPECT_TRUE(sq.agrees);
  const PredicateReport mix = signature_zero_predicate(corpus::product(corpus::pent(), corpus::sq2()));
  EXPECT_TRUE(mix.predicate);
  EXPECT_EQ(mix.signature.signature, 0);
  EXPECT_TRUE(mix.agrees);
  const PredicateReport pe = signature_zero_predicate(corpus::pent());
  EXPECT_FALSE(pe.predicate);
  EXPECT_TRUE(pe.agrees);
  EXPECT_TRUE(pe.full_agrees);
}

// The h-polynomial of a product fan is the product of the factors', so h(-1)
// multiplies.
TEST(Properties, SignatureIsMultiplicativeOnProducts) {
  for (int n = 4; n <= 7; ++n)
    for (int m = 4; m <= 6; ++m) {
      const SignatureReport r = signature(corpus::product(corpus::ngon(n), corpus::ngon(m)));
      EXPECT_EQ(r.signature, (4 - n) * (4 - m));
      EXPECT_EQ(r.signed_top_gamma, r.signature);
    }
}

TEST(Properties, DehnSommerville) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto h = h_vector(f_vector(corpus::random_stellar_3d(seed, 1 + static_cast<int>(seed % 6))));
    ASSERT_EQ(h, V(h.rbegin(), h.rend())) << seed;
  }
  Fan f = corpus::cross_polytope(4);
  for (const Cone& face : {Cone{0, 1}, Cone{2, 5, 7}, Cone{0, 8}}) {
    f = corpus::stellar_subdivide(f, face);
    const SignatureReport r = signature(f);
    ASSERT_EQ(r.h, V(r.h.rbegin(), r.h.rend()));
    ASSERT_EQ(r.signed_top_gamma, r.signature);
  }
}

TEST(Properties, PredicateAgreesOnPolygonProducts) {
  for (int n = 4; n <= 6; ++n)
    for (int m = n; m <= 6; ++m) {
      const Fan f = corpus::product(corpus::ngon(n), corpus::ngon(m));
      ASSERT_TRUE(fan::is_locally_convex(f).locally_convex);
      const PredicateReport r = signature_zero_predicate(f);
      EXPECT_TRUE(r.full_agrees) << n << 'x' << m;
      EXPECT_EQ(r.full_predicate, n == 4) << n << 'x' << m;
      // Restricted to pairwise non-special cones nothing survives: every
      // nonzero monomial pairs a ray of one factor with one of the other,
      // and those are special for each other.
      EXPECT_TRUE(r.predicate) << n << 'x' << m;
      EXPECT_EQ(r.agrees, n == 4) << n << 'x' << m;
    }
}

// pent x pent: signature 1, and D_4^2 D_9^2 = (D_4^2)(D_9^2) = 1.
TEST(VanishingMonomialSuite, SpecialPairsCarryTheProductMonomial) {
  const Fan f = corpus::product(corpus::pent(), corpus::pent());
  EXPECT_EQ(signature(f).signature, 1);
  EXPECT_TRUE(vanishing_monomial_suite(f).witnesses.empty());
  const SuiteReport full = vanishing_monomial_suite(f, 0, true);
  bool found = false;
  for (const MonomialWitness& w : full.witnesses)
    found = found || (w.cone == Cone{4, 9} && w.tuple == polymat::ExponentTuple{1, 1});
  EXPECT_TRUE(found);
  for (const MonomialWitness& w : full.witnesses) EXPECT_EQ(w.p, 2);
}

}  // namespace
}  // namespace fanlab::gammasig
