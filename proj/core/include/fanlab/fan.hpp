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

// Complete simplicial fans: structure, validation, walls, links, flagness and
// local convexity.

#ifndef FANLAB_FAN_HPP_
#define FANLAB_FAN_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fanlab/exactlin.hpp"

namespace fanlab::fan {

using exactlin::IntVec;
using exactlin::RatVec;

// Sorted list of ray indices.
using Cone = std::vector<int>;

struct Wall {
  Cone tau;
  Cone sigma;        // lexicographically smaller maximal cone containing tau
  Cone sigma_prime;  // the other one
  int gamma = -1;        // sigma \ tau
  int gamma_prime = -1;  // sigma_prime \ tau
};

// A simplicial fan given by primitive rays and maximal cones of size dim.
// Construction checks only the shape (lengths, index ranges, cone sizes);
// the geometric invariants are reported by validate().
class Fan {
 public:
  static constexpr int kMaxRays = 64;

  Fan() = default;
  Fan(int dim, std::vector<IntVec> rays, std::vector<Cone> max_cones);

  int dim() const { return dim_; }
  int num_rays() const { return static_cast<int>(rays_.size()); }
  const std::vector<IntVec>& rays() const { return rays_; }
  const IntVec& ray(int i) const { return rays_[static_cast<std::size_t>(i)]; }
  const RatVec& ray_q(int i) const { return rays_q_[static_cast<std::size_t>(i)]; }
  const std::vector<Cone>& max_cones() const { return cones_; }

  std::uint64_t mask(const Cone& c) const;
  bool is_face(const Cone& c) const;
  bool adjacent(int i, int j) const;
  // Indices into max_cones() of the cones containing c.
  std::vector<int> cones_containing(const Cone& c) const;
  int cone_index(const Cone& c) const;  // -1 if c is not a maximal cone

  // Throws PreconditionError when some (dim-1)-face lies in other than two
  // maximal cones. Sorted by tau.
  const std::vector<Wall>& walls() const;
  bool has_wall_structure() const { return wall_error_.empty(); }

 private:
  int dim_ = 0;
  std::vector<IntVec> rays_;
  std::vector<RatVec> rays_q_;
  std::vector<Cone> cones_;
  std::vector<std::uint64_t> cone_masks_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<Wall> walls_;
  std::string wall_error_;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<Check> checks;
  bool complete = false;
  bool valid() const;
  const Check* failure() const;
};

ValidationReport validate(const Fan& fan);

const std::vector<Wall>& walls(const Fan& fan);

// All faces with exactly k rays, sorted lexicographically.
std::vector<Cone> faces_of_size(const Fan& fan, int k);

// Star of a center cone, realized in the quotient lattice N / <center>.
struct LinkFan {
  Cone center;
  std::vector<int> parent_ray;      // local ray index -> parent ray index
  std::vector<Cone> parent_cones;   // maximal cones, in parent indices
  Fan quotient;                     // same cones in local indices
  std::vector<IntVec> basis;        // center rays, then a lattice complement
  std::vector<RatVec> dual;         // dual covectors of basis
  std::vector<mpz_class> multiplier;  // u_a = (center part) + c_a u'_a
  bool unimodular = true;           // basis is a Z-basis of Z^d

  int local_index(int parent) const;
  // Coordinates of a parent vector in the quotient.
  RatVec project(const RatVec& v) const;
};

// Throws PreconditionError when center is not a face.
LinkFan link(const Fan& fan, const Cone& center);

struct FlagReport {
  bool flag = true;
  Cone witness;  // a minimal non-face when not flag
};
FlagReport is_flag(const Fan& fan);

struct LocalConvexityReport {
  bool locally_convex = true;
  int ray = -1;     // witness ray
  Cone wall;        // witness wall containing the ray
  mpq_class value;  // its positive intersection number
};
LocalConvexityReport is_locally_convex(const Fan& fan);

Cone cone_union(const Cone& a, const Cone& b);
Cone cone_minus(const Cone& a, const Cone& b);
bool cone_contains(const Cone& big, const Cone& small);
std::string cone_string(const Cone& c);

}  // namespace fanlab::fan

#endif  // FANLAB_FAN_HPP_
