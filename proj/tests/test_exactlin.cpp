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

#include "fanlab/exactlin.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fanlab/error.hpp"

namespace fanlab::exactlin {
namespace {

RatVec q(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Subspace span(std::size_t n, std::initializer_list<RatVec> vs) { return Subspace::span(n, vs); }

TEST(Rank, Examples) {
  EXPECT_EQ(rank(RatMat::identity(3)), 3u);
  EXPECT_EQ(rank(RatMat(3, 4)), 0u);
  EXPECT_EQ(rank(RatMat::from_int_rows({{1, 0}, {0, 1}, {1, 1}}, 2)), 2u);
}

TEST(Det, InverseAndSolve) {
  const RatMat m = RatMat::from_int_rows({{2, 1}, {1, 1}}, 2);
  EXPECT_EQ(det(m), 1);
  const RatMat inv = inverse(m);
  EXPECT_EQ(mat_mul(m, inv).row(0), q({1, 0}));
  EXPECT_EQ(solve_square(m, q({3, 2})), q({1, 1}));
  EXPECT_THROW(inverse(RatMat::from_int_rows({{1, 2}, {2, 4}}, 2)), PreconditionError);
  EXPECT_EQ(det(RatMat::from_int_rows({{1, 2}, {2, 4}}, 2)), 0);
}

TEST(Kernel, Examples) {
  const auto k = kernel(RatMat::from_int_rows({{1, 0, 1}, {0, 1, 1}}, 3));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0], q({-1, -1, 1}));
  EXPECT_EQ(kernel(RatMat::identity(2)).size(), 0u);
}

TEST(Subspace, CanonicalForm) {
  EXPECT_EQ(span(2, {q({2, 2})}), span(2, {q({-1, -1})}));
  EXPECT_EQ(span(3, {q({1, 1, 0}), q({1, -1, 0})}), span(3, {q({1, 0, 0}), q({0, 1, 0})}));
  EXPECT_EQ(span(3, {}).dim(), 0u);
  EXPECT_TRUE(span(3, {q({1, 0, 0})}).contains(q({5, 0, 0})));
  EXPECT_EQ(span(3, {q({1, 0, 0})}).annihilator(), span(3, {q({0, 1, 0}), q({0, 0, 1})}));
}

TEST(Intersect, Examples) {
  const Subspace xy = span(3, {q({1, 0, 0}), q({0, 1, 0})});
  const Subspace yz = span(3, {q({0, 1, 0}), q({0, 0, 1})});
  EXPECT_EQ(intersect(xy, yz), span(3, {q({0, 1, 0})}));
  EXPECT_EQ(intersect(xy, xy), xy);
  EXPECT_EQ(intersect(span(2, {q({1, 0})}), span(2, {q({0, 1})})).dim(), 0u);
  EXPECT_THROW(intersect(xy, span(2, {q({1, 0})})), PreconditionError);
}

TEST(LatticeBasisExtend, Examples) {
  const LatticeBasis a = lattice_basis_extend({{1, 0}}, 2);
  EXPECT_EQ(a.basis, (std::vector<IntVec>{{1, 0}, {0, 1}}));
  EXPECT_EQ(a.dual, (std::vector<RatVec>{q({1, 0}), q({0, 1})}));
  const LatticeBasis b = lattice_basis_extend({{1, 1}}, 2);
  EXPECT_EQ(b.basis, (std::vector<IntVec>{{1, 1}, {0, 1}}));
  EXPECT_EQ(b.dual, (std::vector<RatVec>{q({1, 0}), q({-1, 1})}));
  EXPECT_THROW(lattice_basis_extend({{2, 0}}, 2), PreconditionError);
  EXPECT_THROW(lattice_basis_extend({{1, 0}, {2, 0}}, 2), PreconditionError);
}

TEST(Primitive, Examples) {
  EXPECT_EQ(primitive(IntVec{2, 4}), (IntVec{1, 2}));
  EXPECT_EQ(primitive(IntVec{1, 0, 0}), (IntVec{1, 0, 0}));
  EXPECT_EQ(primitive(IntVec{-3, 6, -9}), (IntVec{-1, 2, -3}));
  EXPECT_EQ(primitive(RatVec{mpq_class(1, 2), mpq_class(1, 3)}), (IntVec{3, 2}));
  EXPECT_THROW(primitive(IntVec{0, 0}), PreconditionError);
}

TEST(HermiteNormalForm, Example) {
  const auto h = hermite_normal_form({{2, 4}, {1, 3}});
  EXPECT_EQ(h, (std::vector<ZVec>{{1, 1}, {0, 2}}));
}

TEST(SaturatedComplement, NonSaturatedInput) {
  // span{(2,0)} saturates to span{(1,0)}; (0,1) completes it.
  EXPECT_EQ(saturated_complement({{2, 0}}, 2), (std::vector<IntVec>{{0, 1}}));
}

TEST(Rational, RoundTrip) {
  EXPECT_EQ(parse_rational("-3/6"), mpq_class(-1, 2));
  EXPECT_EQ(to_string(mpq_class(-1, 2)), "-1/2");
  EXPECT_EQ(to_string(mpq_class(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), SchemaError);
  EXPECT_THROW(parse_rational("x"), SchemaError);
}

IntVec random_vec(std::mt19937_64& rng, std::size_t d, int range) {
  IntVec v(d);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
  return v;
}

TEST(Properties, IntersectLaws) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const std::size_t n = 2 + rng() % 3;
    auto rand_sub = [&] {
      std::vector<RatVec> vs;
      const std::size_t k = rng() % (n + 1);
      for (std::size_t i = 0; i < k; ++i) vs.push_back(to_rat(random_vec(rng, n, 2)));
      return Subspace::span(n, vs);
    };
    const Subspace a = rand_sub(), b = rand_sub(), c = rand_sub();
    ASSERT_EQ(intersect(a, b), intersect(b, a));
    ASSERT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
    ASSERT_EQ(intersect(a, a), a);
    ASSERT_GE(intersect(a, b).dim() + n, a.dim() + b.dim());
    ASSERT_EQ(intersect(a, b).dim() + sum(a, b).dim(), a.dim() + b.dim());
    ASSERT_EQ(a.annihilator().annihilator(), a);
  }
}

TEST(Properties, LatticeBasisIsUnimodularWithDualPairing) {
  std::mt19937_64 rng(12);
  int extended = 0;
  for (int it = 0; it < 400; ++it) {
    const std::size_t d = 2 + rng() % 3;
    const std::size_t k = 1 + rng() % (d - 1);
    std::vector<IntVec> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(random_vec(rng, d, 3));
    LatticeBasis lb;
    try {
      lb = lattice_basis_extend(vs, d);
    } catch (const PreconditionError&) {
      // Either dependent, or the lattice is not saturated.
      std::vector<RatVec> rows;
      for (const auto& v : vs) rows.push_back(to_rat(v));
      if (rank(RatMat::from_rows(rows, d)) == k) ASSERT_EQ(saturated_complement(vs, d).size(), d - k);
      continue;
    }
    ++extended;
    ASSERT_EQ(lb.basis.size(), d);
    for (std::size_t i = 0; i < k; ++i) ASSERT_EQ(lb.basis[i], vs[i]);
    std::vector<RatVec> rows;
    for (const auto& v : lb.basis) rows.push_back(to_rat(v));
    const mpq_class dt = det(RatMat::from_rows(rows, d));
    ASSERT_TRUE(dt == 1 || dt == -1);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) ASSERT_EQ(dot(lb.dual[i], rows[j]), i == j ? 1 : 0);
    const auto comp = saturated_complement(vs, d);
    ASSERT_EQ(comp, std::vector<IntVec>(lb.basis.begin() + static_cast<long>(k), lb.basis.end()));
  }
  EXPECT_GT(extended, 50);
}

TEST(Properties, PrimitiveIsScaleInvariant) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 500; ++it) {
    IntVec v = random_vec(rng, 1 + rng() % 4, 20);
    if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) continue;
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 9);
    IntVec kv = v;
    for (auto& x : kv) x *= k;
    ASSERT_EQ(primitive(kv), primitive(v));
  }
}

}  // namespace
}  // namespace fanlab::exactlin
