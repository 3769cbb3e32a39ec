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

#include <algorithm>

#include "fanlab/error.hpp"

namespace fanlab::istheory {

using exactlin::RatMat;

Divisor Divisor::zero(const Fan& fan) {
  return Divisor{std::vector<mpq_class>(static_cast<std::size_t>(fan.num_rays()))};
}

Divisor Divisor::prime(const Fan& fan, int rho) {
  if (rho < 0 || rho >= fan.num_rays()) throw PreconditionError("Divisor::prime: ray out of range");
  Divisor d = zero(fan);
  d.coeffs[static_cast<std::size_t>(rho)] = 1;
  return d;
}

Divisor Divisor::operator+(const Divisor& other) const {
  if (coeffs.size() != other.coeffs.size()) throw PreconditionError("divisors live on different fans");
  Divisor out = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += other.coeffs[i];
  return out;
}

Divisor Divisor::operator-() const {
  Divisor out = *this;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

WallRelation wall_relation(const Fan& fan, const Wall& wall) {
  Cone support = wall.tau;
  support.push_back(wall.gamma);
  support.push_back(wall.gamma_prime);
  std::sort(support.begin(), support.end());
  const auto d = static_cast<std::size_t>(fan.dim());
  RatMat m(d, support.size());
  for (std::size_t j = 0; j < support.size(); ++j)
    for (std::size_t i = 0; i < d; ++i) m(i, j) = fan.ray_q(support[j])[i];
  auto ker = exactlin::kernel(m);
  if (ker.size() != 1) throw PreconditionError("wall_relation: rays of the two cones are degenerate");
  exactlin::IntVec prim = exactlin::primitive(ker[0]);
  WallRelation rel;
  for (std::size_t j = 0; j < support.size(); ++j) rel[support[j]] = static_cast<long>(prim[j]);
  if (rel[wall.gamma] < 0)
    for (auto& [ray, c] : rel) c = -c;
  if (sgn(rel[wall.gamma]) <= 0 || sgn(rel[wall.gamma_prime]) <= 0)
    throw PreconditionError("wall_relation: off-wall rays of " + fan::cone_string(wall.tau) +
                            " are not on opposite sides");
  return rel;
}

CartierData cartier_data(const Fan& fan, const Divisor& d) {
  if (static_cast<int>(d.coeffs.size()) != fan.num_rays())
    throw PreconditionError("cartier_data: divisor does not match the fan");
  const auto dim = static_cast<std::size_t>(fan.dim());
  CartierData cd;
  for (const Cone& c : fan.max_cones()) {
    RatMat a(dim, dim);
    RatVec rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = fan.ray_q(c[i])[j];
      rhs[i] = -d.coeffs[static_cast<std::size_t>(c[i])];
    }
    cd.m.push_back(dim == 0 ? RatVec{} : exactlin::solve_square(a, rhs));
  }
  return cd;
}

mpq_class intersection_number(const Fan& fan, const CartierData& cd, const Wall& wall) {
  const int k = fan.cone_index(wall.sigma);
  const int kp = fan.cone_index(wall.sigma_prime);
  if (k < 0 || kp < 0) throw PreconditionError("intersection_number: wall does not belong to the fan");
  return exactlin::dot(exactlin::sub(cd.m[static_cast<std::size_t>(k)], cd.m[static_cast<std::size_t>(kp)]),
                       fan.ray_q(wall.gamma_prime));
}

mpq_class intersection_number(const Fan& fan, const Divisor& d, const Wall& wall) {
  return intersection_number(fan, cartier_data(fan, d), wall);
}

NefReport is_nef(const Fan& fan, const Divisor& d) {
  NefReport rep;
  CartierData cd = cartier_data(fan, d);
  for (const Wall& w : fan.walls()) {
    mpq_class v = intersection_number(fan, cd, w);
    if (sgn(v) < 0) {
      rep.nef = false;
      rep.witness = w;
      rep.value = v;
      return rep;
    }
  }
  return rep;
}

bool is_numerically_trivial(const Fan& fan, const Divisor& d) {
  CartierData cd = cartier_data(fan, d);
  for (const Wall& w : fan.walls())
    if (sgn(intersection_number(fan, cd, w)) != 0) return false;
  return true;
}

Polytope divisor_polytope(const Fan& fan, const Divisor& d) {
  NefReport nef = is_nef(fan, d);
  if (!nef.nef)
    throw PreconditionError("divisor_polytope: divisor is not nef (wall " +
                            fan::cone_string(nef.witness->tau) + ")");
  CartierData cd = cartier_data(fan, d);
  Polytope p;
  p.vertices = cd.m;
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < p.vertices.size(); ++i)
    diffs.push_back(exactlin::sub(p.vertices[i], p.vertices[0]));
  p.direction = Subspace::span(static_cast<std::size_t>(fan.dim()), diffs);
  return p;
}

Divisor conormal_divisor(const Fan& fan, const fan::LinkFan& lf, const Cone& subset) {
  if (subset.empty()) throw PreconditionError("restrict_conormal: empty subset");
  RatVec m(static_cast<std::size_t>(fan.dim()));
  for (int j : subset) {
    auto it = std::find(lf.center.begin(), lf.center.end(), j);
    if (it == lf.center.end())
      throw PreconditionError("restrict_conormal: ray " + std::to_string(j) + " is not in the cone");
    m = exactlin::add(m, lf.dual[static_cast<std::size_t>(it - lf.center.begin())]);
  }
  Divisor d = Divisor::zero(lf.quotient);
  for (std::size_t a = 0; a < lf.parent_ray.size(); ++a) {
    if (lf.multiplier[a] == 0) throw PreconditionError("restrict_conormal: zero lattice multiplier");
    d.coeffs[a] = exactlin::dot(m, fan.ray_q(lf.parent_ray[a])) / mpq_class(lf.multiplier[a]);
  }
  return d;
}

ConormalRestriction restrict_conormal(const Fan& fan, const Cone& pcone, const Cone& subset) {
  ConormalRestriction out{fan::link(fan, pcone), {}};
  out.divisor = conormal_divisor(fan, out.link, subset);
  return out;
}

std::vector<int> perpendicular_rays(const Fan& fan, const Cone& pcone, const Cone& subset) {
  ConormalRestriction cr = restrict_conormal(fan, pcone, subset);
  std::vector<int> out;
  if (cr.link.quotient.dim() == 0) return out;
  CartierData cd = cartier_data(cr.link.quotient, cr.divisor);
  for (std::size_t a = 0; a < cr.link.parent_ray.size(); ++a) {
    const RatVec& u = cr.link.quotient.ray_q(static_cast<int>(a));
    const mpq_class ref = exactlin::dot(cd.m[0], u);
    bool perp = true;
    for (const RatVec& m : cd.m)
      if (exactlin::dot(m, u) != ref) {
        perp = false;
        break;
      }
    if (perp) out.push_back(cr.link.parent_ray[a]);
  }
  return out;
}

polymat::DimFunction minkowski_dim_function(const std::vector<Polytope>& polys) {
  if (polys.empty()) throw PreconditionError("minkowski_dim_function: no polytopes");
  const std::size_t ambient = polys[0].direction.ambient_dim();
  for (const Polytope& p : polys)
    if (p.direction.ambient_dim() != ambient)
      throw PreconditionError("minkowski_dim_function: polytopes live in different spaces");
  const int n = static_cast<int>(polys.size());
  std::vector<int> b(std::size_t{1} << n, 0);
  for (polymat::Subset s = 1; s < b.size(); ++s) {
    Subspace acc(ambient);
    for (int j = 0; j < n; ++j)
      if (s >> j & 1) acc = exactlin::sum(acc, polys[static_cast<std::size_t>(j)].direction);
    b[s] = static_cast<int>(acc.dim());
  }
  return polymat::DimFunction(n, std::move(b));
}

}  // namespace fanlab::istheory
