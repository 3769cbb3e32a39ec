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

#include "fanlab/corpus.hpp"

#include <algorithm>
#include <random>

#include "fanlab/error.hpp"

namespace fanlab::corpus {

using exactlin::IntVec;

namespace {

// Consecutive rays of a polygon, listed in angular order, span the cones.
Fan polygon(std::vector<IntVec> rays) {
  const int n = static_cast<int>(rays.size());
  std::vector<Cone> cones;
  for (int i = 0; i < n; ++i) cones.push_back({i, (i + 1) % n});
  return Fan(2, std::move(rays), std::move(cones));
}

}  // namespace

Fan sq2() { return Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

Fan pent() {
  return Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}, {{0, 4}, {4, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Fan p2() { return Fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}); }

Fan cross_polytope(int d) {
  if (d < 1 || d > 16) throw PreconditionError("cross_polytope: dimension out of range");
  std::vector<IntVec> rays;
  for (int sign : {1, -1})
    for (int i = 0; i < d; ++i) {
      IntVec r(static_cast<std::size_t>(d), 0);
      r[static_cast<std::size_t>(i)] = sign;
      rays.push_back(std::move(r));
    }
  std::vector<Cone> cones;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    Cone c;
    for (int i = 0; i < d; ++i) c.push_back((mask >> i & 1) ? i + d : i);
    cones.push_back(std::move(c));
  }
  return Fan(d, std::move(rays), std::move(cones));
}

Fan ngon(int n) {
  switch (n) {
    case 4:
      return polygon({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    case 5:
      return polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}});
    case 6:
      return polygon({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
    case 7:
      return polygon({{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
    case 8:
      return polygon({{1, 0}, {2, 1}, {1, 1}, {0, 1}, {-1, 0}, {-2, -1}, {-1, -1}, {0, -1}});
    default:
      throw PreconditionError("ngon: n must be between 4 and 8");
  }
}

Fan product(const Fan& a, const Fan& b) {
  const int d = a.dim() + b.dim();
  std::vector<IntVec> rays;
  for (const IntVec& r : a.rays()) {
    IntVec v = r;
    v.resize(static_cast<std::size_t>(d), 0);
    rays.push_back(std::move(v));
  }
  for (const IntVec& r : b.rays()) {
    IntVec v(static_cast<std::size_t>(a.dim()), 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const Cone& ca : a.max_cones())
    for (const Cone& cb : b.max_cones()) {
      Cone c = ca;
      for (int i : cb) c.push_back(i + a.num_rays());
      cones.push_back(std::move(c));
    }
  return Fan(d, std::move(rays), std::move(cones));
}

Fan stellar_subdivide(const Fan& f, const Cone& face_in) {
  Cone face = face_in;
  std::sort(face.begin(), face.end());
  if (face.size() < 2 || !f.is_face(face))
    throw PreconditionError("stellar_subdivide: need a face with at least two rays");
  IntVec sum(static_cast<std::size_t>(f.dim()), 0);
  for (int i : face)
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += f.ray(i)[k];
  std::vector<IntVec> rays = f.rays();
  rays.push_back(exactlin::primitive(sum));
  const int fresh = f.num_rays();
  std::vector<Cone> cones;
  for (const Cone& c : f.max_cones()) {
    if (!fan::cone_contains(c, face)) {
      cones.push_back(c);
      continue;
    }
    for (int rho : face) {
      Cone nc = fan::cone_minus(c, {rho});
      nc.push_back(fresh);
      cones.push_back(std::move(nc));
    }
  }
  return Fan(f.dim(), std::move(rays), std::move(cones));
}

Fan random_stellar_3d(std::uint64_t seed, int steps) {
  std::mt19937_64 gen(seed);
  Fan f = cross_polytope(3);
  for (int s = 0; s < steps; ++s) {
    std::vector<Cone> edges = fan::faces_of_size(f, 2);
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    f = stellar_subdivide(f, edges[pick(gen)]);
  }
  return f;
}

std::vector<Named> bundled() {
  std::vector<Named> out = {
      {"sq2", sq2()},
      {"pent", pent()},
      {"p2", p2()},
      {"cp4", cross_polytope(4)},
      {"sq2xsq2", product(sq2(), sq2())},
      {"sq2xpent", product(sq2(), pent())},
  };
  for (int n = 4; n <= 8; ++n) out.push_back({"ngon" + std::to_string(n), ngon(n)});
  return out;
}

}  // namespace fanlab::corpus
