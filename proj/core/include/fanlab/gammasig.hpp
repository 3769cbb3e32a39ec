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

// f-, h- and gamma-vectors of a complete simplicial fan, its signature
// h(-1), and the vanishing-monomial suite: for each cone of at most d/2
// pairwise non-special rays and each odd exponent tuple summing to d - p,
// whether the mixed volume of the conormal polytopes can be nonzero.

#ifndef FANLAB_GAMMASIG_HPP_
#define FANLAB_GAMMASIG_HPP_

#include <vector>

#include "fanlab/fan.hpp"
#include "fanlab/polymat.hpp"

namespace fanlab::gammasig {

using fan::Cone;
using fan::Fan;

// f[i] = number of cones with i + 1 rays, for i = 0..d-1.
std::vector<long long> f_vector(const Fan& fan);
// h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_{i-1}, with f_{-1} = 1.
std::vector<long long> h_vector(const std::vector<long long>& f);
// Throws PreconditionError unless h is palindromic.
std::vector<long long> gamma_vector(const std::vector<long long>& h);

struct SignatureReport {
  std::vector<long long> f;
  std::vector<long long> h;
  std::vector<long long> gamma;
  long long signature = 0;        // h(-1)
  long long top_gamma = 0;        // gamma_{d/2}
  long long signed_top_gamma = 0; // (-1)^(d/2) gamma_{d/2}
};
// Throws PreconditionError for odd d.
SignatureReport signature(const Fan& fan);

struct MonomialWitness {
  int p = 0;
  Cone cone;
  polymat::ExponentTuple tuple;  // tuple[k] is the exponent of cone[k]
};

struct SuiteReport {
  std::vector<MonomialWitness> witnesses;
  std::vector<int> cones_checked;  // per p = 1..d/2, cones of pairwise non-special rays
  std::vector<int> cones_skipped;  // per p, cones with a special pair
};
// Only cones of pairwise non-special rays are checked unless
// include_special_pairs is set; then every cone with at most d/2 rays is.
// The two differ on products such as pent x pent, where the only nonzero
// monomials sit on pairs that are special for each other.
// Throws PreconditionError for odd d or a fan that is not locally convex.
SuiteReport vanishing_monomial_suite(const Fan& fan, int threads = 0,
                                     bool include_special_pairs = false);

struct PredicateReport {
  bool predicate = false;  // no witnesses
  SignatureReport signature;
  SuiteReport suite;
  bool agrees = false;     // predicate == (signature == 0)
  // The same with special pairs included.
  SuiteReport full_suite;
  bool full_predicate = false;
  bool full_agrees = false;
};
PredicateReport signature_zero_predicate(const Fan& fan, int threads = 0);

// Odd tuples of length p with entries >= 1 summing to total, lexicographic.
std::vector<polymat::ExponentTuple> odd_tuples(int p, int total);

}  // namespace fanlab::gammasig

#endif  // FANLAB_GAMMASIG_HPP_
