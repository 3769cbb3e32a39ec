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

#include "fanlab/istheory.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fanlab/corpus.hpp"
#include "fanlab/error.hpp"

namespace fanlab::istheory {
namespace {

using exactlin::RatVec;
using fan::LinkFan;

RatVec q(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const Wall& wall_at(const Fan& f, const Cone& tau) {
  for (const Wall& w : f.walls())
    if (w.tau == tau) return w;
  throw std::logic_error("no such wall");
}

Divisor prime_sum(const Fan& f, std::initializer_list<int> rays, int sign = 1) {
  Divisor d = Divisor::zero(f);
  for (int r : rays) d.coeffs[static_cast<std::size_t>(r)] += sign;
  return d;
}

TEST(WallRelation, Examples) {
  const Fan sq = corpus::sq2();
  EXPECT_EQ(wall_relation(sq, wall_at(sq, {0})), (WallRelation{{0, 0}, {1, 1}, {3, 1}}));
  const Fan pe = corpus::pent();
  EXPECT_EQ(wall_relation(pe, wall_at(pe, {4})), (WallRelation{{0, 1}, {1, 1}, {4, -1}}));
  const Fan p = corpus::p2();
  EXPECT_EQ(wall_relation(p, wall_at(p, {0})), (WallRelation{{0, 1}, {1, 1}, {2, 1}}));
}

// On a smooth polygon the self-coefficient is -a where u_prev + u_next = a u.
TEST(WallRelation, PentagonSelfCoefficients) {
  const Fan pe = corpus::pent();
  const std::vector<int> expected = {-1, -1, 0, 0, -1};
  for (int r = 0; r < 5; ++r) EXPECT_EQ(wall_relation(pe, wall_at(pe, {r})).at(r), expected[static_cast<std::size_t>(r)]) << r;
}

TEST(CartierData, Examples) {
  const Fan sq = corpus::sq2();
  const CartierData cd = cartier_data(sq, Divisor::prime(sq, 0));
  auto m = [&](const Cone& c) { return cd.m[static_cast<std::size_t>(sq.cone_index(c))]; };
  EXPECT_EQ(m({0, 1}), q({-1, 0}));
  EXPECT_EQ(m({1, 2}), q({0, 0}));
  EXPECT_EQ(m({2, 3}), q({0, 0}));
  EXPECT_EQ(m({0, 3}), q({-1, 0}));
  for (const RatVec& v : cartier_data(sq, Divisor::zero(sq)).m) EXPECT_TRUE(exactlin::is_zero(v));

  const Fan p = corpus::p2();
  const CartierData pc = cartier_data(p, Divisor::prime(p, 0));
  for (std::size_t k = 0; k < p.max_cones().size(); ++k)
    for (int r : p.max_cones()[k]) EXPECT_EQ(exactlin::dot(pc.m[k], p.ray_q(r)), r == 0 ? -1 : 0);
  EXPECT_EQ(pc.m[static_cast<std::size_t>(p.cone_index({0, 1}))], q({-1, 0}));
  EXPECT_EQ(pc.m[static_cast<std::size_t>(p.cone_index({1, 2}))], q({0, 0}));
  EXPECT_EQ(pc.m[static_cast<std::size_t>(p.cone_index({0, 2}))], q({-1, 1}));
}

TEST(IntersectionNumber, Examples) {
  const Fan sq = corpus::sq2();
  EXPECT_EQ(intersection_number(sq, Divisor::prime(sq, 0), wall_at(sq, {0})), 0);
  EXPECT_GT(intersection_number(sq, Divisor::prime(sq, 0), wall_at(sq, {1})), 0);
  const Fan pe = corpus::pent();
  EXPECT_LT(intersection_number(pe, Divisor::prime(pe, 4), wall_at(pe, {4})), 0);
}

TEST(IsNef, Examples) {
  const Fan sq = corpus::sq2();
  EXPECT_TRUE(is_nef(sq, Divisor::prime(sq, 0)).nef);
  EXPECT_TRUE(is_nef(sq, Divisor::zero(sq)).nef);
  const Fan pe = corpus::pent();
  const NefReport r = is_nef(pe, -Divisor::prime(pe, 4));
  EXPECT_FALSE(r.nef);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->tau, (Cone{4}));
  EXPECT_LT(r.value, 0);
}

TEST(DivisorPolytope, Examples) {
  const Fan sq = corpus::sq2();
  const Polytope seg = divisor_polytope(sq, Divisor::prime(sq, 0));
  EXPECT_EQ(seg.vertices, (std::vector<RatVec>{q({-1, 0}), q({0, 0})}));
  EXPECT_EQ(seg.dim(), 1u);
  const Polytope pt = divisor_polytope(sq, Divisor::zero(sq));
  EXPECT_EQ(pt.dim(), 0u);
  EXPECT_EQ(pt.vertices.size(), 1u);
  const Polytope square = divisor_polytope(sq, prime_sum(sq, {0, 1}));
  EXPECT_EQ(square.dim(), 2u);
  EXPECT_EQ(square.vertices.size(), 4u);
  const Fan pe = corpus::pent();
  EXPECT_THROW(divisor_polytope(pe, -Divisor::prime(pe, 4)), PreconditionError);
}

TEST(RestrictConormal, Examples) {
  const Fan sq = corpus::sq2();
  const ConormalRestriction a = restrict_conormal(sq, {0}, {0});
  EXPECT_EQ(a.link.parent_ray, (std::vector<int>{1, 3}));
  EXPECT_TRUE(is_numerically_trivial(a.link.quotient, a.divisor));

  const Fan pe = corpus::pent();
  const ConormalRestriction b = restrict_conormal(pe, {4}, {4});
  EXPECT_EQ(b.link.parent_ray, (std::vector<int>{0, 1}));
  EXPECT_FALSE(is_numerically_trivial(b.link.quotient, b.divisor));
  EXPECT_TRUE(is_nef(b.link.quotient, b.divisor).nef);
  EXPECT_EQ(divisor_polytope(b.link.quotient, b.divisor).dim(), 1u);

  const Fan cp = corpus::cross_polytope(4);
  const ConormalRestriction c = restrict_conormal(cp, {0, 1}, {0});
  EXPECT_EQ(c.link.quotient.dim(), 2);
  EXPECT_TRUE(is_numerically_trivial(c.link.quotient, c.divisor));

  EXPECT_THROW(restrict_conormal(sq, {0}, {}), PreconditionError);
  EXPECT_THROW(restrict_conormal(sq, {0}, {1}), PreconditionError);
  EXPECT_THROW(restrict_conormal(sq, {0, 2}, {0}), PreconditionError);
}

// Nonvanishing conormal restrictions on the pentagon are at rays 0, 1, 4.
TEST(RestrictConormal, PentagonRays) {
  const Fan pe = corpus::pent();
  std::vector<int> nonzero;
  for (int r = 0; r < 5; ++r) {
    const ConormalRestriction c = restrict_conormal(pe, {r}, {r});
    if (!is_numerically_trivial(c.link.quotient, c.divisor)) nonzero.push_back(r);
  }
  EXPECT_EQ(nonzero, (std::vector<int>{0, 1, 4}));
}

TEST(PerpendicularRays, Examples) {
  EXPECT_EQ(perpendicular_rays(corpus::sq2(), {0}, {0}), (std::vector<int>{1, 3}));
  EXPECT_TRUE(perpendicular_rays(corpus::pent(), {4}, {4}).empty());
  EXPECT_EQ(perpendicular_rays(corpus::pent(), {2}, {2}), (std::vector<int>{1, 3}));
}

TEST(MinkowskiDimFunction, Examples) {
  auto seg = [](RatVec dir) {
    Polytope p;
    p.vertices = {RatVec(dir.size(), 0), dir};
    p.direction = exactlin::Subspace::span(dir.size(), {dir});
    return p;
  };
  const auto a = minkowski_dim_function({seg(q({1, 0})), seg(q({0, 1}))});
  EXPECT_EQ(a[0b01], 1);
  EXPECT_EQ(a[0b10], 1);
  EXPECT_EQ(a[0b11], 2);
  EXPECT_EQ(minkowski_dim_function({seg(q({1, 0})), seg(q({2, 0}))})[0b11], 1);
  const auto c = minkowski_dim_function({seg(q({1, 0})), seg(q({0, 1})), seg(q({1, 1}))});
  for (polymat::Subset s = 1; s < 8; ++s) EXPECT_EQ(c[s], __builtin_popcount(s) == 1 ? 1 : 2);
}

std::vector<Fan> sample_fans() {
  std::vector<Fan> out;
  for (const auto& n : corpus::bundled()) out.push_back(n.fan);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) out.push_back(corpus::random_stellar_3d(seed, 1 + static_cast<int>(seed % 6)));
  return out;
}

// The wall relation and the Cartier pairing compute D_rho . V(tau) two ways.
TEST(Properties, WallRelationSignsMatchIntersectionNumbers) {
  for (const Fan& f : sample_fans())
    for (const Wall& w : f.walls()) {
      const WallRelation rel = wall_relation(f, w);
      for (int r = 0; r < f.num_rays(); ++r) {
        const auto it = rel.find(r);
        const int expected = it == rel.end() ? 0 : sgn(it->second);
        ASSERT_EQ(sgn(intersection_number(f, Divisor::prime(f, r), w)), expected);
      }
    }
}

TEST(Properties, TrivialIffPolytopeIsAPoint) {
  std::mt19937_64 rng(5);
  for (const Fan& f : sample_fans())
    for (int it = 0; it < 6; ++it) {
      Divisor d = Divisor::zero(f);
      for (auto& c : d.coeffs) c = static_cast<long>(rng() % 5) - 2;
      const CartierData cd = cartier_data(f, d);
      bool all_equal = true;
      for (const RatVec& m : cd.m) all_equal = all_equal && m == cd.m[0];
      ASSERT_EQ(is_numerically_trivial(f, d), all_equal);
      if (is_nef(f, d).nef) ASSERT_EQ(divisor_polytope(f, d).dim() == 0, all_equal);
    }
}

// P_{D+E} = P_D + P_E for nef D and E, checked on direction spaces.
TEST(Properties, NefPolytopesAddUnderMinkowskiSum) {
  int pairs = 0;
  for (const Fan& f : sample_fans()) {
    std::vector<Divisor> nef;
    for (int r = 0; r < f.num_rays(); ++r) {
      const Divisor d = Divisor::prime(f, r);
      if (is_nef(f, d).nef) nef.push_back(d);
    }
    for (std::size_t i = 0; i < nef.size(); ++i)
      for (std::size_t j = i; j < nef.size(); ++j) {
        const Divisor s = nef[i] + nef[j];
        ASSERT_TRUE(is_nef(f, s).nef);
        ASSERT_EQ(divisor_polytope(f, s).direction,
                  exactlin::sum(divisor_polytope(f, nef[i]).direction, divisor_polytope(f, nef[j]).direction));
        ++pairs;
      }
  }
  EXPECT_GT(pairs, 20);
}

// Points are allowed, so only submodularity and monotonicity are claimed.
TEST(Properties, ConormalDimFunctionsAreSubmodular) {
  for (const Fan& f : sample_fans()) {
    if (!fan::is_locally_convex(f).locally_convex) continue;
    for (const Cone& c : fan::faces_of_size(f, std::min(2, f.dim() - 1))) {
      const LinkFan lk = fan::link(f, c);
      std::vector<Polytope> polys;
      for (int j : c) polys.push_back(divisor_polytope(lk.quotient, conormal_divisor(f, lk, {j})));
      const polymat::SubmodularReport r = polymat::check_submodular(minkowski_dim_function(polys));
      ASSERT_TRUE(r.submodular && r.monotone);
    }
  }
}

}  // namespace
}  // namespace fanlab::istheory
