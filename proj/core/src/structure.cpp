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

#include "fanlab/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "fanlab/error.hpp"
#include "fanlab/gammasig.hpp"
#include "fanlab/istheory.hpp"

namespace fanlab::structure {
namespace {

using exactlin::RatVec;
using fan::cone_contains;
using fan::cone_minus;
using fan::cone_string;
using fan::cone_union;
using fan::LinkFan;
using fan::Wall;
using istheory::WallRelation;

Cone sorted(Cone c) {
  std::sort(c.begin(), c.end());
  return c;
}

std::string list_string(const std::vector<int>& v) { return cone_string(v); }

void require_locally_convex(const Fan& fan, const char* op) {
  const fan::LocalConvexityReport lc = fan::is_locally_convex(fan);
  if (!lc.locally_convex)
    throw PreconditionError(std::string(op) + ": fan is not locally convex (ray " +
                            std::to_string(lc.ray) + ", wall " + cone_string(lc.wall) + ")");
}

void require_flag(const Fan& fan, const char* op) {
  const fan::FlagReport fr = fan::is_flag(fan);
  if (!fr.flag)
    throw PreconditionError(std::string(op) + ": fan is not flag, minimal non-face " +
                            cone_string(fr.witness));
}

const Wall& find_wall(const Fan& fan, const Cone& tau, const char* op) {
  const auto& ws = fan.walls();
  auto it = std::lower_bound(ws.begin(), ws.end(), tau,
                             [](const Wall& w, const Cone& t) { return w.tau < t; });
  if (it == ws.end() || it->tau != tau)
    throw PreconditionError(std::string(op) + ": " + cone_string(tau) + " is not a wall");
  return *it;
}

// Restricted conormal of -D_j over the subset vanishes (as a class).
bool conormal_vanishes(const Fan& fan, const LinkFan& lk, const Cone& subset) {
  if (lk.quotient.dim() == 0) return true;
  return istheory::is_numerically_trivial(lk.quotient, istheory::conormal_divisor(fan, lk, subset));
}

std::size_t restricted_polytope_dim(const Fan& fan, const LinkFan& lk, const Cone& subset) {
  if (lk.quotient.dim() == 0) return 0;
  return istheory::divisor_polytope(lk.quotient, istheory::conormal_divisor(fan, lk, subset)).dim();
}

// Coordinates in N / <rest>, the realization the special rays are lifted to.
class Lifter {
 public:
  Lifter(const Fan& fan, const Cone& rest) : fan_(fan) {
    if (!rest.empty()) link_ = fan::link(fan, rest);
    ambient_ = static_cast<std::size_t>(fan.dim()) - rest.size();
  }
  RatVec operator()(int ray) const {
    return link_ ? link_->project(fan_.ray_q(ray)) : fan_.ray_q(ray);
  }
  Subspace span(const std::vector<int>& rays) const {
    std::vector<RatVec> vs;
    for (int r : rays) vs.push_back((*this)(r));
    return Subspace::span(ambient_, vs);
  }

 private:
  const Fan& fan_;
  std::optional<LinkFan> link_;
  std::size_t ambient_ = 0;
};

// Transports u_g through the maximal cones containing pcone and keeps g when
// every crossed wall on which some D_j (j in subset) has nonzero degree is
// crossed with a zero coefficient on the dropped ray.
std::vector<char> special_by_transport(const Fan& fan, const Cone& pcone, const Cone& subset,
                                       const LinkFan& lk) {
  const auto& walls = fan.walls();
  std::map<Cone, std::size_t> wall_at;
  for (std::size_t k = 0; k < walls.size(); ++k) wall_at.emplace(walls[k].tau, k);
  std::map<std::size_t, WallRelation> relations;
  auto relation = [&](std::size_t k) -> const WallRelation& {
    auto it = relations.find(k);
    if (it == relations.end()) it = relations.emplace(k, istheory::wall_relation(fan, walls[k])).first;
    return it->second;
  };
  const std::vector<int> star = fan.cones_containing(pcone);

  std::vector<char> out(lk.parent_ray.size(), 0);
  for (std::size_t a = 0; a < lk.parent_ray.size(); ++a) {
    const int g = lk.parent_ray[a];
    int start = -1;
    for (int s : star)
      if (cone_contains(fan.max_cones()[static_cast<std::size_t>(s)], {g})) {
        start = s;
        break;
      }
    std::map<int, std::map<int, mpq_class>> coords;
    for (int w : fan.max_cones()[static_cast<std::size_t>(start)]) coords[start][w] = 0;
    coords[start][g] = 1;
    std::deque<int> queue{start};
    bool ok = true;
    while (!queue.empty() && ok) {
      const int s = queue.front();
      queue.pop_front();
      const Cone& sigma = fan.max_cones()[static_cast<std::size_t>(s)];
      for (int x : sigma) {
        if (cone_contains(pcone, {x})) continue;
        const Cone tau = cone_minus(sigma, {x});
        const std::size_t k = wall_at.at(tau);
        const Wall& w = walls[k];
        const WallRelation& rel = relation(k);
        bool flat = true;
        for (int j : subset)
          if (rel.at(j) != 0) flat = false;
        const mpq_class ax = coords[s].at(x);
        if (!flat && ax != 0) {
          ok = false;
          break;
        }
        const Cone& other = w.sigma == sigma ? w.sigma_prime : w.sigma;
        const int xp = x == w.gamma ? w.gamma_prime : w.gamma;
        const int t = fan.cone_index(other);
        if (coords.count(t)) continue;
        const mpq_class cx(rel.at(x));
        std::map<int, mpq_class> nc;
        for (int om : tau) nc[om] = coords[s].at(om) - ax * mpq_class(rel.at(om)) / cx;
        nc[xp] = -ax * mpq_class(rel.at(xp)) / cx;
        coords.emplace(t, std::move(nc));
        queue.push_back(t);
      }
    }
    out[a] = ok;
  }
  return out;
}

std::vector<std::vector<int>> ray_specials(const Fan& fan) {
  std::vector<std::vector<int>> s;
  for (int r = 0; r < fan.num_rays(); ++r) s.push_back(special_rays(fan, {r}, {r}).special);
  return s;
}

bool contains_ray(const std::vector<int>& sorted_rays, int r) {
  return std::binary_search(sorted_rays.begin(), sorted_rays.end(), r);
}

RatVec dual_in_cone(const Fan& fan, const Cone& cone, int alpha) {
  const auto d = static_cast<std::size_t>(fan.dim());
  std::vector<exactlin::IntVec> rows;
  RatVec e(d, 0);
  for (std::size_t i = 0; i < cone.size(); ++i) {
    rows.push_back(fan.ray(cone[i]));
    if (cone[i] == alpha) e[i] = 1;
  }
  return exactlin::solve_square(exactlin::RatMat::from_int_rows(rows, d), e);
}

void require_flat_wall(const Fan& fan, const Wall& w, int alpha, const char* op) {
  if (!cone_contains(w.tau, {alpha}))
    throw PreconditionError(std::string(op) + ": ray " + std::to_string(alpha) + " is not in " +
                            cone_string(w.tau));
  const mpq_class v = istheory::intersection_number(fan, istheory::Divisor::prime(fan, alpha), w);
  if (v != 0)
    throw PreconditionError(std::string(op) + ": D_" + std::to_string(alpha) + " . V(" +
                            cone_string(w.tau) + ") = " + v.get_str() + " is not zero");
}

}  // namespace

SpecialRayReport special_rays(const Fan& fan, const Cone& pcone_in, const Cone& subset_in) {
  const Cone pcone = sorted(pcone_in);
  const Cone subset = sorted(subset_in);
  if (subset.empty() || !cone_contains(pcone, subset))
    throw PreconditionError("special_rays: " + cone_string(subset_in) +
                            " is not a nonempty subset of " + cone_string(pcone_in));
  const LinkFan lk = fan::link(fan, pcone);
  require_locally_convex(fan, "special_rays");
  const Fan& q = lk.quotient;
  const auto n = static_cast<std::size_t>(q.dim());

  SpecialRayReport r;
  r.pcone = pcone;
  r.subset = subset;
  const Lifter lift(fan, cone_minus(pcone, subset));
  if (n == 0) {
    r.subspace = lift.span({});
    r.link_subspace = Subspace(0);
    r.link_subspace_is_annihilator = r.specials_span_link_subspace = r.lifted_dim_matches = true;
    r.uniform_count = true;
    r.special_count_per_cone.assign(1, 0);
    return r;
  }

  const istheory::Divisor div = istheory::conormal_divisor(fan, lk, subset);
  const istheory::CartierData cd = istheory::cartier_data(q, div);
  const istheory::Polytope poly = istheory::divisor_polytope(q, div);
  r.polytope_dim = poly.dim();

  const auto& qwalls = q.walls();
  Subspace w = Subspace::full(n);
  for (const Wall& qw : qwalls) {
    if (istheory::intersection_number(q, cd, qw) == 0) continue;
    std::vector<RatVec> span;
    for (int a : qw.tau) span.push_back(q.ray_q(a));
    w = exactlin::intersect(w, Subspace::span(n, span));
  }
  std::vector<char> by_span(lk.parent_ray.size());
  for (std::size_t a = 0; a < by_span.size(); ++a) by_span[a] = w.contains(q.ray_q(static_cast<int>(a)));
  const std::vector<char> by_transport = special_by_transport(fan, pcone, subset, lk);
  if (by_span != by_transport) {
    std::ostringstream msg;
    msg << "special_rays: methods disagree on pcone " << cone_string(pcone) << ", subset "
        << cone_string(subset) << " at rays";
    for (std::size_t a = 0; a < by_span.size(); ++a)
      if (by_span[a] != by_transport[a]) msg << ' ' << lk.parent_ray[a];
    throw InconsistencyError(msg.str());
  }

  std::vector<RatVec> special_q;
  for (std::size_t a = 0; a < by_span.size(); ++a) {
    if (by_span[a]) {
      r.special.push_back(lk.parent_ray[a]);
      special_q.push_back(q.ray_q(static_cast<int>(a)));
    } else {
      r.non_special.push_back(lk.parent_ray[a]);
    }
  }
  r.link_subspace = w;
  r.subspace = lift.span(r.special);
  r.link_subspace_is_annihilator = poly.direction.annihilator() == w;
  r.specials_span_link_subspace = Subspace::span(n, special_q) == w;
  r.lifted_dim_matches = r.subspace.dim() == w.dim();

  for (const Cone& c : q.max_cones()) {
    int count = 0;
    for (int a : c) count += by_span[static_cast<std::size_t>(a)];
    r.special_count_per_cone.push_back(count);
  }
  r.uniform_count = std::adjacent_find(r.special_count_per_cone.begin(), r.special_count_per_cone.end(),
                                       std::not_equal_to<>()) == r.special_count_per_cone.end();

  std::map<Cone, const Wall*> qwall_at;
  for (const Wall& qw : qwalls) {
    qwall_at.emplace(qw.tau, &qw);
    if (by_span[static_cast<std::size_t>(qw.gamma)] != by_span[static_cast<std::size_t>(qw.gamma_prime)])
      ++r.crossing_violations;
  }
  std::map<const Wall*, WallRelation> qrel;
  for (const Cone& c : q.max_cones())
    for (int g : c) {
      if (!by_span[static_cast<std::size_t>(g)]) continue;
      const Wall* qw = qwall_at.at(cone_minus(c, {g}));
      auto it = qrel.find(qw);
      if (it == qrel.end()) it = qrel.emplace(qw, istheory::wall_relation(q, *qw)).first;
      for (int dl : c)
        if (!by_span[static_cast<std::size_t>(dl)] && it->second.at(dl) != 0) ++r.cross_condition_violations;
    }
  return r;
}

std::vector<Cone> enumerate_pcones(const Fan& fan) {
  std::vector<Cone> out;
  for (int p = 1; p <= fan.dim() / 2; ++p) {
    auto f = fan::faces_of_size(fan, p);
    out.insert(out.end(), f.begin(), f.end());
  }
  return out;
}

FlatLinkReport flat_link(const Fan& fan, const Cone& pcone_in, const Cone& subset, const Cone& m_in) {
  const Cone pcone = sorted(pcone_in);
  const Cone m = sorted(m_in);
  const SpecialRayReport rep = special_rays(fan, pcone, subset);
  bool is_nonspecial_part = false;
  for (int k : fan.cones_containing(pcone)) {
    Cone part;
    for (int a : cone_minus(fan.max_cones()[static_cast<std::size_t>(k)], pcone))
      if (contains_ray(rep.non_special, a)) part.push_back(a);
    if (part == m) {
      is_nonspecial_part = true;
      break;
    }
  }
  if (!is_nonspecial_part)
    throw PreconditionError("flat_link: " + cone_string(m_in) +
                            " is not the non-special part of a maximal cone of the link");

  FlatLinkReport out;
  const Cone center = cone_union(pcone, m);
  const Lifter lift(fan, cone_minus(pcone, rep.subset));
  std::optional<Subspace> common;
  for (int k : fan.cones_containing(center)) {
    const Cone rest = cone_minus(fan.max_cones()[static_cast<std::size_t>(k)], center);
    if (rest.empty()) {
      out.reason = "lk(pcone u M) has no rays";
      return out;
    }
    for (int a : rest)
      if (!contains_ray(rep.special, a)) {
        out.reason = "ray " + std::to_string(a) + " of lk(pcone u M) is not special";
        return out;
      }
    Subspace s = lift.span(rest);
    if (common && !(*common == s)) {
      out.reason = "maximal cones of lk(pcone u M) span different subspaces";
      return out;
    }
    common = std::move(s);
  }
  out.flat = true;
  out.subspace = *common;
  return out;
}

CrossPolytopeReport detect_cross_polytope(const Fan& fan) {
  CrossPolytopeReport r;
  for (int i = 0; i < fan.num_rays(); ++i)
    if (!conormal_vanishes(fan, fan::link(fan, {i}), {i})) r.nonvanishing.push_back(i);
  if (!r.nonvanishing.empty()) return r;

  const int d = fan.dim();
  auto fail = [&](const std::string& why) {
    throw InconsistencyError("detect_cross_polytope: every conormal vanishes but " + why);
  };
  if (fan.num_rays() != 2 * d) fail("there are " + std::to_string(fan.num_rays()) + " rays");
  std::vector<int> partner(static_cast<std::size_t>(fan.num_rays()), -1);
  for (int i = 0; i < fan.num_rays(); ++i) {
    exactlin::IntVec neg = fan.ray(i);
    for (auto& x : neg) x = -x;
    for (int j = 0; j < fan.num_rays(); ++j)
      if (fan.ray(j) == neg) partner[static_cast<std::size_t>(i)] = j;
    if (partner[static_cast<std::size_t>(i)] < 0) fail("ray " + std::to_string(i) + " has no antipode");
    if (i < partner[static_cast<std::size_t>(i)]) r.pairs.emplace_back(i, partner[static_cast<std::size_t>(i)]);
  }
  for (const Cone& c : fan.max_cones()) {
    for (int i : c)
      if (contains_ray(c, partner[static_cast<std::size_t>(i)])) fail("cone " + cone_string(c) + " holds an antipodal pair");
    ++r.cones_certified;
  }
  if (r.cones_certified != (1 << d)) fail("there are " + std::to_string(r.cones_certified) + " cones");
  r.cross = true;
  return r;
}

AntipodeReport antipode_partner(const Fan& fan, const Cone& pcone_in, int r) {
  const Cone pcone = sorted(pcone_in);
  if (!contains_ray(pcone, r))
    throw PreconditionError("antipode_partner: ray " + std::to_string(r) + " is not in " + cone_string(pcone));
  const LinkFan lk = fan::link(fan, pcone);
  if (!conormal_vanishes(fan, lk, {r}))
    throw PreconditionError("antipode_partner: restricted conormal of ray " + std::to_string(r) +
                            " over " + cone_string(pcone) + " does not vanish");
  const Cone base = cone_minus(pcone, {r});
  std::vector<int> found;
  for (int b = 0; b < fan.num_rays(); ++b) {
    if (b == r || contains_ray(pcone, b) || fan.adjacent(b, r)) continue;
    const Cone c = cone_union(base, {b});
    if (!fan.is_face(c)) continue;
    const LinkFan lb = fan::link(fan, c);
    if (lb.parent_cones == lk.parent_cones && conormal_vanishes(fan, lb, {b})) found.push_back(b);
  }
  if (found.size() > 1)
    throw InconsistencyError("antipode_partner: several partners " + list_string(found));
  AntipodeReport out;
  if (found.empty()) return out;
  out.beta = found[0];
  exactlin::IntVec neg = fan.ray(r);
  for (auto& x : neg) x = -x;
  out.antipodal = fan.ray(found[0]) == neg;
  return out;
}

SuspensionDecomposition suspension_structure(const Fan& fan, int ray) {
  const SpecialRayReport rep = special_rays(fan, {ray}, {ray});
  SuspensionDecomposition out;
  out.ray = ray;
  out.core = rep.subspace;
  out.core_rays = rep.special;
  for (int a : rep.non_special) {
    std::vector<int> partners;
    for (int b : rep.non_special)
      if (b != a && !fan.adjacent(a, b)) partners.push_back(b);
    bool paired = false;
    if (partners.size() == 1) {
      const int b = partners[0];
      int back = 0;
      for (int c : rep.non_special)
        if (c != b && !fan.adjacent(b, c)) ++back;
      paired = back == 1;
      if (paired && a < b) out.pairs.emplace_back(a, b);
    }
    if (!paired) out.residual.push_back(a);
  }
  out.pair_count_matches =
      static_cast<int>(out.pairs.size()) == fan.dim() - 1 - static_cast<int>(out.core.dim());
  return out;
}

BlockCoverReport special_block_cover(const Fan& fan) {
  require_locally_convex(fan, "special_block_cover");
  const std::vector<std::vector<int>> spec = ray_specials(fan);
  BlockCoverReport out;
  for (int g = 0; g < fan.num_rays(); ++g) {
    Block b;
    b.gamma = g;
    for (int r = 0; r < fan.num_rays(); ++r)
      if (contains_ray(spec[static_cast<std::size_t>(r)], g)) b.centers.push_back(r);
    if (b.centers.empty()) continue;
    bool matching = true;
    for (int c : b.centers) {
      std::vector<int> non;
      for (int e : b.centers)
        if (e != c && !fan.adjacent(c, e)) non.push_back(e);
      if (non.empty()) {
        b.cone_part.push_back(c);
      } else if (non.size() == 1) {
        int back = 0;
        for (int e : b.centers)
          if (e != non[0] && !fan.adjacent(non[0], e)) ++back;
        if (back != 1) matching = false;
        if (c < non[0]) b.pairs.emplace_back(c, non[0]);
      } else {
        matching = false;
      }
    }
    b.join = matching;
    if (matching) {
      const std::size_t choices = std::size_t{1} << b.pairs.size();
      for (std::size_t mask = 0; mask < choices && b.join; ++mask) {
        Cone c = b.cone_part;
        for (std::size_t k = 0; k < b.pairs.size(); ++k)
          c.push_back(mask >> k & 1 ? b.pairs[k].second : b.pairs[k].first);
        if (!fan.is_face(sorted(c))) b.join = false;
      }
    }
    if (!b.join) {
      out.centers_form_joins = false;
      out.counterexamples.push_back("centers " + list_string(b.centers) + " of ray " +
                                    std::to_string(g) + " are not a cone or repeated suspension");
    }
    out.blocks.push_back(std::move(b));
  }

  const int d = fan.dim();
  for (int i = 0; i < fan.num_rays(); ++i)
    for (int j = i + 1; j < fan.num_rays(); ++j) {
      if (!fan.adjacent(i, j)) continue;
      const auto& si = spec[static_cast<std::size_t>(i)];
      const auto& sj = spec[static_cast<std::size_t>(j)];
      if (contains_ray(si, j) || contains_ray(sj, i)) continue;
      const std::size_t summed = restricted_polytope_dim(fan, fan::link(fan, {i, j}), {i, j});
      if (static_cast<int>(summed) <= d - 3) continue;  // same block
      std::vector<int> shared;
      std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(shared));
      if (!shared.empty()) {
        out.non_sharing = false;
        out.counterexamples.push_back("rays " + std::to_string(i) + ", " + std::to_string(j) +
                                      " are in different blocks but share " + list_string(shared));
      }
    }
  return out;
}

DichotomyReport pcone_dichotomy(const Fan& fan, const Cone& pcone_in) {
  const Cone pcone = sorted(pcone_in);
  const LinkFan lk = fan::link(fan, pcone);
  require_locally_convex(fan, "pcone_dichotomy");
  const int d = fan.dim();
  const int p = static_cast<int>(pcone.size());

  DichotomyReport r;
  r.pairwise_non_special = true;
  for (int i : pcone) {
    const auto s = special_rays(fan, {i}, {i}).special;
    for (int j : pcone)
      if (j != i && contains_ray(s, j)) r.pairwise_non_special = false;
  }
  std::vector<istheory::Polytope> polys;
  for (int j : pcone) {
    if (conormal_vanishes(fan, lk, {j})) r.vanishing.push_back(j);
    if (lk.quotient.dim() > 0) {
      polys.push_back(istheory::divisor_polytope(lk.quotient, istheory::conormal_divisor(fan, lk, {j})));
      r.dims.push_back(static_cast<int>(polys.back().dim()));
    } else {
      r.dims.push_back(0);
    }
  }
  r.summed_polytope_dim = restricted_polytope_dim(fan, lk, pcone);
  if (!polys.empty()) {
    const polymat::DimFunction b = istheory::minkowski_dim_function(polys);
    if (b.full() != static_cast<int>(r.summed_polytope_dim))
      throw InconsistencyError("pcone_dichotomy: summed polytope has dimension " +
                               std::to_string(r.summed_polytope_dim) + ", Minkowski sum " +
                               std::to_string(b.full()));
  }
  r.flat_subspace = static_cast<int>(r.summed_polytope_dim) <= d - p - 1;

  std::vector<std::vector<int>> spec;
  for (int j : pcone) spec.push_back(special_rays(fan, pcone, {j}).special);
  r.all_non_special = true;
  for (int a : lk.parent_ray) {
    bool some = false;
    for (const auto& s : spec) some = some || !contains_ray(s, a);
    r.all_non_special = r.all_non_special && some;
  }

  if (!r.pairwise_non_special) r.tag = "TRIVIAL";
  else if (!r.vanishing.empty()) r.tag = "VANISHING_CONORMAL";
  else if (r.flat_subspace) r.tag = "FLAT_SUBSPACE";
  else if (r.all_non_special) r.tag = "ALL_NONSPECIAL_SUSPENSION";
  else {
    r.tag = "NONE";
    if (d % 2 == 0 && gammasig::signature(fan).signature == 0)
      throw InconsistencyError("pcone_dichotomy: no case holds for " + cone_string(pcone) +
                               " on a signature-zero fan");
  }
  return r;
}

std::vector<Pdover2Certificate> pdover2_certificates(const Fan& fan, const Cone& tuple_in) {
  const Cone tuple = sorted(tuple_in);
  const int d = fan.dim();
  if (d % 2 != 0) throw PreconditionError("pdover2_certificates: dimension is odd");
  if (static_cast<int>(tuple.size()) != d / 2)
    throw PreconditionError("pdover2_certificates: tuple must have d/2 rays");
  const LinkFan lk = fan::link(fan, tuple);
  if (!gammasig::vanishing_monomial_suite(fan).witnesses.empty())
    throw PreconditionError("pdover2_certificates: some signature-zero monomial does not vanish");

  const std::size_t p = tuple.size();
  const auto n = static_cast<std::size_t>(lk.quotient.dim());
  std::vector<Subspace> v;
  for (int j : tuple)
    v.push_back(istheory::divisor_polytope(lk.quotient, istheory::conormal_divisor(fan, lk, {j})).direction);
  auto sum_of = [&](const std::vector<std::size_t>& idx) {
    Subspace s(n);
    for (std::size_t i : idx) s = exactlin::sum(s, v[i]);
    return s;
  };

  bool pairwise_non_special = true;
  for (int i : tuple) {
    const auto s = special_rays(fan, {i}, {i}).special;
    for (int j : tuple)
      if (j != i && contains_ray(s, j)) pairwise_non_special = false;
  }

  std::vector<std::size_t> order(p);
  for (std::size_t i = 0; i < p; ++i) order[i] = i;
  std::vector<Pdover2Certificate> out;
  bool any = false;
  do {
    Pdover2Certificate c;
    for (std::size_t i : order) c.ordering.push_back(tuple[i]);
    std::vector<std::size_t> prefix;
    Subspace acc(n);
    for (std::size_t t = 0; t < p; ++t) {
      const Subspace& rr = v[order[t]];
      const Subspace next = exactlin::sum(acc, rr);
      if (c.k < 0 && t > 0) {
        const std::size_t gain = next.dim() - acc.dim();
        if (gain == 0) {
          if (!rr.annihilator().contains(acc.annihilator()))
            throw InconsistencyError("pdover2_certificates: zero gain but omega_P is not in omega_R");
          ++c.containments_checked;
        }
        const Subspace omega_pr = exactlin::sum(acc.annihilator(), rr.annihilator());
        for (std::size_t mask = 1; mask < (std::size_t{1} << prefix.size()); ++mask) {
          std::vector<std::size_t> sub;
          for (std::size_t k = 0; k < prefix.size(); ++k)
            if (mask >> k & 1) sub.push_back(prefix[k]);
          const Subspace qs = sum_of(sub);
          if (exactlin::sum(qs, rr).dim() - qs.dim() != gain) continue;
          if (!omega_pr.contains(qs.annihilator()))
            throw InconsistencyError("pdover2_certificates: omega_Q is not in omega_P + omega_R");
          ++c.containments_checked;
        }
      }
      acc = next;
      prefix.push_back(order[t]);
      c.running_dims.push_back(static_cast<int>(acc.dim()));
      if (c.k < 0 && acc.dim() + 1 <= t + 1) c.k = static_cast<int>(t + 1);
    }
    any = any || c.k > 0;
    out.push_back(std::move(c));
  } while (std::next_permutation(order.begin(), order.end()));
  if (!any && pairwise_non_special)
    throw InconsistencyError("pdover2_certificates: no ordering of " + cone_string(tuple) +
                             " has a dimension deficit");
  return out;
}

std::array<int, 4> FourCycle::canonical() const {
  std::array<int, 4> best = rays;
  for (int rev = 0; rev < 2; ++rev)
    for (int s = 0; s < 4; ++s) {
      std::array<int, 4> c{};
      for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] =
          rays[static_cast<std::size_t>(rev ? (s - i + 4) % 4 : (s + i) % 4)];
      best = std::min(best, c);
    }
  return best;
}

bool is_induced_four_cycle(const Fan& fan, const Cone& tau, int alpha, const FourCycle& c) {
  const Cone base = cone_minus(sorted(tau), {alpha});
  for (std::size_t i = 0; i < 4; ++i) {
    const Cone cone = cone_union(base, sorted({c.rays[i], c.rays[(i + 1) % 4]}));
    if (cone.size() != base.size() + 2 || fan.cone_index(cone) < 0) return false;
  }
  return !fan.adjacent(c.rays[0], c.rays[2]) && !fan.adjacent(c.rays[1], c.rays[3]);
}

FourCycle four_cycle_from_flat_wall(const Fan& fan, const Cone& tau_in, int alpha) {
  const Cone tau = sorted(tau_in);
  const Wall& w = find_wall(fan, tau, "four_cycle_from_flat_wall");
  require_flag(fan, "four_cycle_from_flat_wall");
  require_locally_convex(fan, "four_cycle_from_flat_wall");
  require_flat_wall(fan, w, alpha, "four_cycle_from_flat_wall");

  const RatVec astar = dual_in_cone(fan, w.sigma_prime, alpha);
  const Cone base = cone_minus(tau, {alpha});
  std::vector<int> found;
  for (int b = 0; b < fan.num_rays(); ++b) {
    if (b == alpha || b == w.gamma || b == w.gamma_prime || contains_ray(base, b)) continue;
    if (fan.cone_index(cone_union(base, sorted({b, w.gamma}))) < 0) continue;
    if (fan.cone_index(cone_union(base, sorted({b, w.gamma_prime}))) < 0) continue;
    if (sgn(exactlin::dot(astar, fan.ray_q(b))) < 0) found.push_back(b);
  }
  if (found.size() != 1)
    throw InconsistencyError("four_cycle_from_flat_wall: " + std::to_string(found.size()) +
                             " candidates for the opposite ray at wall " + cone_string(tau));
  FourCycle c;
  c.rays = {alpha, w.gamma, found[0], w.gamma_prime};
  if (!is_induced_four_cycle(fan, tau, alpha, c))
    throw InconsistencyError("four_cycle_from_flat_wall: cycle through wall " + cone_string(tau) +
                             " is not induced");
  return c;
}

SideReport verify_4cycle_side_structure(const Fan& fan, const Cone& tau_in, int alpha) {
  const Cone tau = sorted(tau_in);
  const Wall& w = find_wall(fan, tau, "verify_4cycle_side_structure");
  require_flag(fan, "verify_4cycle_side_structure");
  require_locally_convex(fan, "verify_4cycle_side_structure");
  require_flat_wall(fan, w, alpha, "verify_4cycle_side_structure");

  const RatVec astar = dual_in_cone(fan, w.sigma_prime, alpha);
  const Cone base = cone_minus(tau, {alpha});
  SideReport r;
  int sign_gamma = 1, sign_gamma_prime = 1;
  for (int x = 0; x < fan.num_rays(); ++x) {
    if (contains_ray(base, x) || !fan.is_face(cone_union(base, {x}))) continue;
    const int s = sgn(exactlin::dot(astar, fan.ray_q(x)));
    r.sides.emplace_back(x, s);
    if (s < 0) {
      ++r.negative_count;
      r.partner = x;
    }
    if (x == alpha) r.tau_positive = s > 0;
    if (x == w.gamma) sign_gamma = s;
    if (x == w.gamma_prime) sign_gamma_prime = s;
  }
  r.replacements_on_hyperplane = sign_gamma == 0 && sign_gamma_prime == 0;
  if (r.negative_count == 1) {
    const Cone partner_wall = cone_union(base, {r.partner});
    const Wall& pw = find_wall(fan, partner_wall, "verify_4cycle_side_structure");
    r.partner_flat =
        istheory::intersection_number(fan, istheory::Divisor::prime(fan, r.partner), pw) == 0;
  } else {
    r.partner = -1;
  }
  return r;
}

AllCyclesReport all_rays_in_4cycles(const Fan& fan) {
  require_flag(fan, "all_rays_in_4cycles");
  require_locally_convex(fan, "all_rays_in_4cycles");
  std::vector<WallRelation> rel;
  for (const Wall& w : fan.walls()) rel.push_back(istheory::wall_relation(fan, w));

  AllCyclesReport out;
  std::set<std::array<int, 4>> distinct;
  for (int r = 0; r < fan.num_rays(); ++r) {
    RayCycleWitness wit;
    wit.ray = r;
    std::vector<Cone> flat_walls;
    for (std::size_t k = 0; k < fan.walls().size() && !wit.witnessed; ++k) {
      const Wall& w = fan.walls()[k];
      if (!cone_contains(w.tau, {r}) || rel[k].at(r) != 0) continue;
      flat_walls.push_back(w.tau);
      try {
        wit.cycle = four_cycle_from_flat_wall(fan, w.tau, r);
        wit.wall = w.tau;
        wit.witnessed = true;
        distinct.insert(wit.cycle.canonical());
      } catch (const InconsistencyError&) {
      }
    }
    if (!wit.witnessed) {
      out.all_witnessed = false;
      if (flat_walls.empty()) {
        wit.reason = "no wall tau with D . V(tau) = 0";
      } else {
        wit.reason = "no induced 4-cycle at flat walls";
        for (const Cone& c : flat_walls) wit.reason += " " + cone_string(c);
      }
    }
    out.rays.push_back(std::move(wit));
  }
  out.distinct_cycles.assign(distinct.begin(), distinct.end());
  return out;
}

}  // namespace fanlab::structure
