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

#include "fanlab/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "fanlab/error.hpp"
#include "fanlab/istheory.hpp"

namespace fanlab::fan {

using exactlin::RatMat;

namespace {

std::string vec_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::string cone_string(const Cone& c) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "}";
  return os.str();
}

Cone cone_union(const Cone& a, const Cone& b) {
  Cone out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Cone cone_minus(const Cone& a, const Cone& b) {
  Cone out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool cone_contains(const Cone& big, const Cone& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Fan::Fan(int dim, std::vector<IntVec> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  if (dim_ < 0) throw SchemaError("negative fan dimension");
  if (num_rays() > kMaxRays)
    throw SchemaError("at most " + std::to_string(kMaxRays) + " rays are supported");
  for (const IntVec& r : rays_) {
    if (static_cast<int>(r.size()) != dim_)
      throw SchemaError("ray " + vec_string(r) + " does not have length " + std::to_string(dim_));
    rays_q_.push_back(exactlin::to_rat(r));
  }
  for (Cone& c : cones_) {
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != dim_)
      throw SchemaError("cone " + cone_string(c) + " does not have " + std::to_string(dim_) + " rays");
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw SchemaError("cone " + cone_string(c) + " repeats a ray");
    for (int i : c)
      if (i < 0 || i >= num_rays())
        throw SchemaError("cone " + cone_string(c) + " has an out-of-range ray index");
  }
  std::sort(cones_.begin(), cones_.end());
  for (const Cone& c : cones_) cone_masks_.push_back(mask(c));

  adjacency_.assign(rays_.size(), 0);
  for (std::uint64_t m : cone_masks_)
    for (int i = 0; i < num_rays(); ++i)
      if (m >> i & 1) adjacency_[static_cast<std::size_t>(i)] |= m & ~(std::uint64_t{1} << i);

  if (dim_ == 0) return;
  std::map<Cone, std::vector<int>> by_face;
  for (std::size_t k = 0; k < cones_.size(); ++k)
    for (std::size_t drop = 0; drop < cones_[k].size(); ++drop) {
      Cone tau = cones_[k];
      tau.erase(tau.begin() + static_cast<long>(drop));
      by_face[tau].push_back(static_cast<int>(k));
    }
  for (auto& [tau, ks] : by_face) {
    if (ks.size() != 2) {
      if (wall_error_.empty())
        wall_error_ = "face " + cone_string(tau) + " lies in " + std::to_string(ks.size()) +
                      " maximal cone(s)";
      continue;
    }
    Wall w;
    w.tau = tau;
    w.sigma = cones_[static_cast<std::size_t>(ks[0])];
    w.sigma_prime = cones_[static_cast<std::size_t>(ks[1])];
    if (w.sigma_prime < w.sigma) std::swap(w.sigma, w.sigma_prime);
    w.gamma = cone_minus(w.sigma, tau).at(0);
    w.gamma_prime = cone_minus(w.sigma_prime, tau).at(0);
    walls_.push_back(std::move(w));
  }
}

std::uint64_t Fan::mask(const Cone& c) const {
  std::uint64_t m = 0;
  for (int i : c) m |= std::uint64_t{1} << i;
  return m;
}

bool Fan::is_face(const Cone& c) const {
  for (int i : c)
    if (i < 0 || i >= num_rays()) return false;
  const std::uint64_t m = mask(c);
  if (std::popcount(m) != static_cast<int>(c.size())) return false;
  return std::any_of(cone_masks_.begin(), cone_masks_.end(),
                     [m](std::uint64_t cm) { return (cm & m) == m; });
}

bool Fan::adjacent(int i, int j) const {
  return (adjacency_[static_cast<std::size_t>(i)] >> j & 1) != 0;
}

std::vector<int> Fan::cones_containing(const Cone& c) const {
  const std::uint64_t m = mask(c);
  std::vector<int> out;
  for (std::size_t k = 0; k < cone_masks_.size(); ++k)
    if ((cone_masks_[k] & m) == m) out.push_back(static_cast<int>(k));
  return out;
}

int Fan::cone_index(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || *it != c) return -1;
  return static_cast<int>(it - cones_.begin());
}

const std::vector<Wall>& Fan::walls() const {
  if (!wall_error_.empty()) throw PreconditionError("fan is not complete: " + wall_error_);
  return walls_;
}

const std::vector<Wall>& walls(const Fan& fan) { return fan.walls(); }

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* ValidationReport::failure() const {
  for (const Check& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

// Coefficients of v in the basis given by the rays of a maximal cone.
RatVec cone_coords(const Fan& fan, const Cone& c, const RatVec& v) {
  std::vector<RatVec> cols;
  for (int i : c) cols.push_back(fan.ray_q(i));
  return exactlin::solve_square(RatMat::from_rows(cols, v.size()).transpose(), v);
}

}  // namespace

ValidationReport validate(const Fan& fan) {
  ValidationReport rep;
  const int d = fan.dim();
  auto add = [&rep](std::string name, std::string witness) {
    rep.checks.push_back({std::move(name), witness.empty(), std::move(witness)});
  };

  std::string w;
  for (int i = 0; i < fan.num_rays() && w.empty(); ++i) {
    const IntVec& r = fan.ray(i);
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; })) {
      w = "ray " + std::to_string(i) + " is zero";
    } else if (exactlin::primitive(r) != r) {
      w = "ray " + std::to_string(i) + " " + vec_string(r) + " is not primitive";
    }
  }
  add("rays_primitive", w);

  w.clear();
  for (int i = 0; i < fan.num_rays() && w.empty(); ++i)
    for (int j = i + 1; j < fan.num_rays() && w.empty(); ++j)
      if (fan.ray(i) == fan.ray(j))
        w = "rays " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
  add("rays_distinct", w);

  w.clear();
  const auto& cones = fan.max_cones();
  for (std::size_t k = 1; k < cones.size() && w.empty(); ++k)
    if (cones[k] == cones[k - 1]) w = "cone " + cone_string(cones[k]) + " is listed twice";
  add("cones_distinct", w);

  w.clear();
  for (const Cone& c : cones) {
    std::vector<IntVec> rows;
    for (int i : c) rows.push_back(fan.ray(i));
    if (d > 0 && exactlin::rank(RatMat::from_int_rows(rows, static_cast<std::size_t>(d))) !=
                     static_cast<std::size_t>(d)) {
      w = "cone " + cone_string(c) + " is not full-dimensional simplicial";
      break;
    }
  }
  add("simplicial", w);
  const bool simplicial = rep.checks.back().pass;

  std::map<Cone, int> occurrences;
  for (const Cone& c : cones)
    for (std::size_t drop = 0; drop < c.size(); ++drop) {
      Cone tau = c;
      tau.erase(tau.begin() + static_cast<long>(drop));
      ++occurrences[tau];
    }
  w.clear();
  for (const auto& [tau, n] : occurrences)
    if (n > 2) {
      w = "face " + cone_string(tau) + " lies in " + std::to_string(n) + " maximal cones";
      break;
    }
  add("wall_multiplicity", w);
  w.clear();
  for (const auto& [tau, n] : occurrences)
    if (n == 1) {
      w = "face " + cone_string(tau) + " lies in only one maximal cone";
      break;
    }
  add("walls_two_sided", w);

  w.clear();
  if (simplicial && fan.has_wall_structure()) {
    for (const Wall& wall : fan.walls()) {
      std::vector<IntVec> rows;
      for (int i : wall.tau) rows.push_back(fan.ray(i));
      RatVec normal;
      if (rows.empty()) {
        normal.assign(static_cast<std::size_t>(d), 0);
        normal[0] = 1;
      } else {
        auto ker = exactlin::kernel(RatMat::from_int_rows(rows, static_cast<std::size_t>(d)));
        normal = ker.at(0);
      }
      const int s1 = sgn(exactlin::dot(normal, fan.ray_q(wall.gamma)));
      const int s2 = sgn(exactlin::dot(normal, fan.ray_q(wall.gamma_prime)));
      if (s1 * s2 >= 0) {
        w = "wall " + cone_string(wall.tau) + ": rays " + std::to_string(wall.gamma) + " and " +
            std::to_string(wall.gamma_prime) + " are not strictly on opposite sides";
        break;
      }
    }
  } else if (!simplicial) {
    w = "skipped: fan is not simplicial";
  } else {
    w = "skipped: walls are not two-sided";
  }
  add("walls_opposite_sides", w);

  w.clear();
  if (!cones.empty()) {
    std::vector<bool> seen(cones.size(), false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::map<Cone, std::vector<std::size_t>> by_face;
    for (std::size_t k = 0; k < cones.size(); ++k)
      for (std::size_t drop = 0; drop < cones[k].size(); ++drop) {
        Cone tau = cones[k];
        tau.erase(tau.begin() + static_cast<long>(drop));
        by_face[tau].push_back(k);
      }
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (std::size_t drop = 0; drop < cones[k].size(); ++drop) {
        Cone tau = cones[k];
        tau.erase(tau.begin() + static_cast<long>(drop));
        for (std::size_t nb : by_face[tau])
          if (!seen[nb]) {
            seen[nb] = true;
            queue.push_back(nb);
          }
      }
    }
    for (std::size_t k = 0; k < cones.size(); ++k)
      if (!seen[k]) {
        w = "cone " + cone_string(cones[k]) + " is not reachable from " + cone_string(cones[0]);
        break;
      }
  } else {
    w = "fan has no maximal cones";
  }
  add("dual_graph_connected", w);

  // A pseudomanifold with consistent sides can still wrap around more than
  // once; count the cones containing a generic point.
  w.clear();
  const bool prior_ok = rep.valid();
  if (prior_ok && d > 0) {
    std::mt19937 gen(20240611u);
    std::uniform_int_distribution<long> num(-997, 997), den(1, 97);
    bool decided = false;
    for (int attempt = 0; attempt < 16 && !decided; ++attempt) {
      RatVec v(static_cast<std::size_t>(d));
      for (auto& x : v) {
        x = mpq_class(num(gen), den(gen));
        x.canonicalize();
      }
      if (exactlin::is_zero(v)) continue;
      int inside = 0;
      bool on_boundary = false;
      for (const Cone& c : cones) {
        RatVec coords = cone_coords(fan, c, v);
        bool pos = true;
        for (const mpq_class& x : coords) {
          if (sgn(x) == 0) on_boundary = true;
          if (sgn(x) <= 0) pos = false;
        }
        if (pos) ++inside;
      }
      if (on_boundary) continue;
      decided = true;
      if (inside != 1)
        w = "a generic vector lies in " + std::to_string(inside) + " maximal cones";
    }
    if (!decided) w = "could not find a generic test vector";
  } else if (!prior_ok) {
    w = "skipped: earlier checks failed";
  }
  add("covering_degree_one", w);
  rep.complete = rep.valid();
  return rep;
}

std::vector<Cone> faces_of_size(const Fan& fan, int k) {
  std::vector<Cone> out;
  if (k < 0 || k > fan.dim()) return out;
  for (const Cone& c : fan.max_cones()) {
    const int n = static_cast<int>(c.size());
    std::vector<bool> pick(static_cast<std::size_t>(n), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      Cone f;
      for (int i = 0; i < n; ++i)
        if (pick[static_cast<std::size_t>(i)]) f.push_back(c[static_cast<std::size_t>(i)]);
      out.push_back(std::move(f));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int LinkFan::local_index(int parent) const {
  auto it = std::lower_bound(parent_ray.begin(), parent_ray.end(), parent);
  if (it == parent_ray.end() || *it != parent) return -1;
  return static_cast<int>(it - parent_ray.begin());
}

RatVec LinkFan::project(const RatVec& v) const {
  RatVec out;
  for (std::size_t k = center.size(); k < dual.size(); ++k) out.push_back(exactlin::dot(dual[k], v));
  return out;
}

LinkFan link(const Fan& fan, const Cone& center_in) {
  Cone center = center_in;
  std::sort(center.begin(), center.end());
  if (std::adjacent_find(center.begin(), center.end()) != center.end() || !fan.is_face(center))
    throw PreconditionError("link: " + cone_string(center_in) + " is not a cone of the fan");
  const int d = fan.dim();
  LinkFan lf;
  lf.center = center;

  std::vector<IntVec> center_rays;
  for (int i : center) center_rays.push_back(fan.ray(i));
  try {
    exactlin::LatticeBasis lb = exactlin::lattice_basis_extend(center_rays, static_cast<std::size_t>(d));
    lf.basis = std::move(lb.basis);
    lf.dual = std::move(lb.dual);
  } catch (const PreconditionError&) {
    // Non-unimodular center: complement the saturation instead.
    lf.unimodular = false;
    lf.basis = center_rays;
    auto comp = exactlin::saturated_complement(center_rays, static_cast<std::size_t>(d));
    lf.basis.insert(lf.basis.end(), comp.begin(), comp.end());
    RatMat dual = exactlin::inverse(RatMat::from_int_rows(lf.basis, static_cast<std::size_t>(d))).transpose();
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) lf.dual.push_back(dual.row(i));
  }

  for (int k : fan.cones_containing(center))
    lf.parent_cones.push_back(cone_minus(fan.max_cones()[static_cast<std::size_t>(k)], center));
  std::sort(lf.parent_cones.begin(), lf.parent_cones.end());
  for (const Cone& c : lf.parent_cones) lf.parent_ray.insert(lf.parent_ray.end(), c.begin(), c.end());
  std::sort(lf.parent_ray.begin(), lf.parent_ray.end());
  lf.parent_ray.erase(std::unique(lf.parent_ray.begin(), lf.parent_ray.end()), lf.parent_ray.end());

  std::vector<IntVec> qrays;
  for (int a : lf.parent_ray) {
    RatVec pv = lf.project(fan.ray_q(a));
    IntVec iv;
    mpz_class g = 0;
    for (const mpq_class& x : pv) {
      if (x.get_den() != 1) throw InconsistencyError("link: non-integral quotient coordinate");
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
      iv.push_back(x.get_num().get_si());
    }
    if (g == 0) throw InconsistencyError("link: ray projects to zero");
    lf.multiplier.push_back(g);
    qrays.push_back(exactlin::primitive(iv));
  }
  std::vector<Cone> qcones;
  for (const Cone& c : lf.parent_cones) {
    Cone q;
    for (int a : c) q.push_back(lf.local_index(a));
    qcones.push_back(std::move(q));
  }
  lf.quotient = Fan(d - static_cast<int>(center.size()), std::move(qrays), std::move(qcones));
  return lf;
}

FlagReport is_flag(const Fan& fan) {
  FlagReport rep;
  const int n = fan.num_rays();
  const int max_size = fan.dim() + 1;
  Cone best;
  Cone clique;
  // Extends cliques only through faces, so the first non-face of least size is
  // a minimal non-face.
  auto dfs = [&](auto&& self, int next) -> void {
    for (int v = next; v < n; ++v) {
      bool ok = true;
      for (int u : clique)
        if (!fan.adjacent(u, v)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      clique.push_back(v);
      if (!fan.is_face(clique)) {
        if (best.empty() || clique.size() < best.size() ||
            (clique.size() == best.size() && clique < best))
          best = clique;
      } else if (static_cast<int>(clique.size()) < max_size) {
        self(self, v + 1);
      }
      clique.pop_back();
    }
  };
  dfs(dfs, 0);
  if (!best.empty()) {
    rep.flag = false;
    rep.witness = best;
  }
  return rep;
}

LocalConvexityReport is_locally_convex(const Fan& fan) {
  LocalConvexityReport rep;
  // D_rho . V(tau) = c_rho / c_gamma' in the primitive wall relation.
  for (const Wall& w : fan.walls()) {
    const istheory::WallRelation rel = istheory::wall_relation(fan, w);
    for (int rho : w.tau) {
      const mpz_class& c = rel.at(rho);
      if (sgn(c) > 0) {
        const mpq_class v(c, rel.at(w.gamma_prime));
        rep.locally_convex = false;
        rep.ray = rho;
        rep.wall = w.tau;
        rep.value = v;
        rep.value.canonicalize();
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace fanlab::fan
