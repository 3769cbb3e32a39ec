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

#include <benchmark/benchmark.h>

#include <random>

#include "fanlab/corpus.hpp"
#include "fanlab/gammasig.hpp"
#include "fanlab/polymat.hpp"
#include "fanlab/structure.hpp"
#include "support/enumerate.hpp"
#include "support/random_polymat.hpp"

namespace {

using namespace fanlab;

void BM_SpecialRaysCrossPolytope(benchmark::State& state) {
  const fan::Fan f = corpus::cross_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structure::special_rays(f, {0, 1}, {0}));
}
BENCHMARK(BM_SpecialRaysCrossPolytope)->Arg(4)->Arg(5)->Arg(6);

// First locally convex member of the stellar family with at least 10 rays.
fan::Fan larger_random_fan() {
  for (std::uint64_t seed = 1;; ++seed) {
    fan::Fan f = corpus::random_stellar_3d(seed, 6);
    if (f.num_rays() >= 10 && fan::is_locally_convex(f).locally_convex) return f;
  }
}

void BM_SpecialRaysRandom3d(benchmark::State& state) {
  const fan::Fan f = larger_random_fan();
  const auto faces = fan::faces_of_size(f, 1);
  for (auto _ : state)
    for (const fan::Cone& c : faces) benchmark::DoNotOptimize(structure::special_rays(f, c, c));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(faces.size()));
}
BENCHMARK(BM_SpecialRaysRandom3d);

void BM_VanishingSuite(benchmark::State& state) {
  const fan::Fan f = corpus::product(corpus::sq2(), corpus::ngon(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(gammasig::vanishing_monomial_suite(f, 1));
}
BENCHMARK(BM_VanishingSuite)->DenseRange(4, 8, 2);

void BM_AllRaysIn4Cycles(benchmark::State& state) {
  const fan::Fan f = corpus::cross_polytope(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(structure::all_rays_in_4cycles(f));
}
BENCHMARK(BM_AllRaysIn4Cycles)->Arg(4)->Arg(6);

void BM_OddTupleAlgorithm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<polymat::DimFunction> fns;
  for (int i = 0; i < 256; ++i) fns.push_back(testing::random_polymatroid(rng, static_cast<int>(state.range(0)), true));
  const polymat::Permutation pi = polymat::identity_permutation(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const polymat::DimFunction& b = fns[i++ % fns.size()];
    const polymat::AlgorithmTrace t = polymat::odd_tuple_algorithm(b, pi);
    benchmark::DoNotOptimize(polymat::check_output_compat(b, t, false));
  }
}
BENCHMARK(BM_OddTupleAlgorithm)->DenseRange(2, 6, 2);

void BM_BruteForceOddTuples(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<polymat::DimFunction> fns;
  for (int i = 0; i < 256; ++i) fns.push_back(testing::random_polymatroid(rng, static_cast<int>(state.range(0)), true));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(polymat::brute_force_odd_tuples(fns[i++ % fns.size()]));
}
BENCHMARK(BM_BruteForceOddTuples)->DenseRange(2, 4, 1);

void BM_CanonicalEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    long count = 0;
    testing::for_each_polymatroid(3, static_cast<int>(state.range(0)), true, [&](const std::vector<int>&) { ++count; });
    benchmark::DoNotOptimize(count);
    state.counters["functions"] = static_cast<double>(count);
  }
}
BENCHMARK(BM_CanonicalEnumeration)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
