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

// Named fans used throughout the tests and the bundled corpus, plus the
// product and stellar subdivision constructions.

#ifndef FANLAB_CORPUS_HPP_
#define FANLAB_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fanlab/fan.hpp"

namespace fanlab::corpus {

using fan::Cone;
using fan::Fan;

// Rays (1,0), (0,1), (-1,0), (0,-1).
Fan sq2();
// Rays (1,0), (0,1), (-1,0), (0,-1), (1,1).
Fan pent();
// Rays e1, e2, -e1-e2.
Fan p2();
// Rays e1..ed, -e1..-ed; cones pick one sign per coordinate.
Fan cross_polytope(int d);
// Smooth complete polygon fan with n rays (4 <= n <= 8) in angular order,
// every ray having self-intersection <= 0.
Fan ngon(int n);

// Rays of a embedded as (r, 0), then rays of b as (0, r).
Fan product(const Fan& a, const Fan& b);

// Star subdivision at a face: inserts the primitive sum of its rays as a new
// last ray and replaces each maximal cone containing the face.
Fan stellar_subdivide(const Fan& f, const Cone& face);

// Repeated stellar subdivisions of two-dimensional faces of the 3D cross
// polytope fan, driven by a seeded generator. Every result is complete; it is
// not necessarily locally convex.
Fan random_stellar_3d(std::uint64_t seed, int steps);

struct Named {
  std::string name;
  Fan fan;
};
// sq2, pent, p2, cp4, sq2xsq2, sq2xpent, ngon4..ngon8.
std::vector<Named> bundled();

}  // namespace fanlab::corpus

#endif  // FANLAB_CORPUS_HPP_
