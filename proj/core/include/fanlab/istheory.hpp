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

// Intersection theory on complete simplicial toric varieties, computed from
// the fan: wall relations, Cartier data, intersection numbers with torus
// invariant curves, nefness, divisor polytopes and conormal restrictions.

#ifndef FANLAB_ISTHEORY_HPP_
#define FANLAB_ISTHEORY_HPP_

#include <map>
#include <optional>
#include <vector>

#include "fanlab/exactlin.hpp"
#include "fanlab/fan.hpp"
#include "fanlab/polymat.hpp"

namespace fanlab::istheory {

using exactlin::RatVec;
using exactlin::Subspace;
using fan::Cone;
using fan::Fan;
using fan::Wall;

// Torus-invariant Q-divisor sum_rho coeffs[rho] D_rho.
struct Divisor {
  std::vector<mpq_class> coeffs;

  static Divisor zero(const Fan& fan);
  static Divisor prime(const Fan& fan, int rho);
  Divisor operator+(const Divisor& other) const;
  Divisor operator-() const;
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.coeffs == b.coeffs; }
};

// Primitive integer relation among the rays of sigma u sigma', with positive
// coefficients on gamma and gamma'. Wall rays with coefficient 0 are kept.
using WallRelation = std::map<int, mpz_class>;
WallRelation wall_relation(const Fan& fan, const Wall& wall);

// m[k] solves <m, u_rho> = -a_rho for the rays of max_cones()[k].
struct CartierData {
  std::vector<RatVec> m;
};
CartierData cartier_data(const Fan& fan, const Divisor& d);

// D . V(tau) = <m_sigma - m_sigma', u_gamma'>. Its sign and vanishing are
// independent of lattice normalizations.
mpq_class intersection_number(const Fan& fan, const Divisor& d, const Wall& wall);
mpq_class intersection_number(const Fan& fan, const CartierData& cd, const Wall& wall);

struct NefReport {
  bool nef = true;
  std::optional<Wall> witness;  // first wall with a negative number
  mpq_class value;
};
NefReport is_nef(const Fan& fan, const Divisor& d);

// True when every intersection number with a wall vanishes.
bool is_numerically_trivial(const Fan& fan, const Divisor& d);

struct Polytope {
  std::vector<RatVec> vertices;  // distinct, sorted
  Subspace direction;            // span of vertex differences
  std::size_t dim() const { return direction.dim(); }
};
// Throws PreconditionError if d is not nef.
Polytope divisor_polytope(const Fan& fan, const Divisor& d);

struct ConormalRestriction {
  fan::LinkFan link;
  Divisor divisor;  // on link.quotient
};
// The restriction of sum_{j in subset} (-D_j) to V(pcone), as a divisor on the
// link fan. subset lists parent ray indices and must be a nonempty subset of
// pcone.
ConormalRestriction restrict_conormal(const Fan& fan, const Cone& pcone, const Cone& subset);
// Same, reusing a link that was already built for pcone.
Divisor conormal_divisor(const Fan& fan, const fan::LinkFan& link, const Cone& subset);

// Link rays (parent indices) orthogonal to the polytope of the restricted
// conormal sum over subset: <m_sigma, u'_a> is the same for every cone.
std::vector<int> perpendicular_rays(const Fan& fan, const Cone& pcone, const Cone& subset);

// b_A = dim(sum_{j in A} P_j).
polymat::DimFunction minkowski_dim_function(const std::vector<Polytope>& polys);

}  // namespace fanlab::istheory

#endif  // FANLAB_ISTHEORY_HPP_
