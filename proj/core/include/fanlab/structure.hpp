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

// Structural analysis of locally convex complete simplicial fans: special
// rays of conormal restrictions, flat links, cross-polytope and suspension
// detection, special-ray covers, the p-cone dichotomy, prefix certificates
// for d/2-cones, and induced 4-cycles through flat walls.
//
// Ray indices in every report are indices of the input fan.

#ifndef FANLAB_STRUCTURE_HPP_
#define FANLAB_STRUCTURE_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanlab/exactlin.hpp"
#include "fanlab/fan.hpp"

namespace fanlab::structure {

using exactlin::Subspace;
using fan::Cone;
using fan::Fan;

struct SpecialRayReport {
  Cone pcone;
  Cone subset;
  std::vector<int> special;
  std::vector<int> non_special;
  // Span of the special rays in N / <pcone \ subset> (N itself when the
  // subset is all of pcone), in the coordinates of link(fan, pcone \ subset).
  Subspace subspace;
  // Intersection of Span(tau) over link walls where the restricted divisor
  // has nonzero degree, in the coordinates of link(fan, pcone).
  Subspace link_subspace;
  std::size_t polytope_dim = 0;

  // Checks on the output. The first three always hold when the methods
  // agree; the others are reported because they can fail for general nef
  // restrictions.
  bool link_subspace_is_annihilator = false;
  bool specials_span_link_subspace = false;
  bool lifted_dim_matches = false;
  bool uniform_count = false;
  std::vector<int> special_count_per_cone;  // per link maximal cone
  int crossing_violations = 0;   // link walls with exactly one special off-wall ray
  int cross_condition_violations = 0;  // D_delta . V(sigma \ gamma) != 0, gamma special, delta not
};

// Computes the special rays twice: from the Cartier data of the link, and by
// transporting each ray through the maximal cones of the fan that contain
// pcone. Throws InconsistencyError if they differ and PreconditionError if the
// fan is not locally convex or subset is not a nonempty subset of pcone.
SpecialRayReport special_rays(const Fan& fan, const Cone& pcone, const Cone& subset);

// All faces with 1..d/2 rays.
std::vector<Cone> enumerate_pcones(const Fan& fan);

struct FlatLinkReport {
  bool flat = false;
  Subspace subspace;  // lifted coordinates, as in SpecialRayReport::subspace
  std::string reason;
};
// M must be the set of non-special rays of some maximal cone of lk(pcone).
FlatLinkReport flat_link(const Fan& fan, const Cone& pcone, const Cone& subset, const Cone& m);

struct CrossPolytopeReport {
  bool cross = false;
  std::vector<std::pair<int, int>> pairs;  // (i, j) with u_j = -u_i, i < j
  int cones_certified = 0;
  std::vector<int> nonvanishing;  // rays whose conormal restriction is not zero
};
// Throws InconsistencyError when every conormal vanishes but the cone list is
// not that of a cross polytope.
CrossPolytopeReport detect_cross_polytope(const Fan& fan);

struct AntipodeReport {
  std::optional<int> beta;
  bool antipodal = false;  // u_beta = -u_r
};
// Requires the restriction of -D_r to V(pcone) to vanish.
AntipodeReport antipode_partner(const Fan& fan, const Cone& pcone, int r);

struct SuspensionDecomposition {
  int ray = -1;
  Subspace core;  // ambient coordinates
  std::vector<int> core_rays;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> residual;
  bool pair_count_matches = false;  // pairs = (d - 1) - dim core
  bool valid() const { return residual.empty() && pair_count_matches; }
};
SuspensionDecomposition suspension_structure(const Fan& fan, int ray);

struct Block {
  int gamma = -1;
  std::vector<int> centers;  // rays rho with gamma special in lk(rho)
  Cone cone_part;
  std::vector<std::pair<int, int>> pairs;
  bool join = false;  // cone_part joined with the pairs, every choice a face
};
struct BlockCoverReport {
  std::vector<Block> blocks;  // rays with at least one center
  bool centers_form_joins = true;
  bool non_sharing = true;
  std::vector<std::string> counterexamples;
};
BlockCoverReport special_block_cover(const Fan& fan);

struct DichotomyReport {
  std::string tag;  // TRIVIAL, VANISHING_CONORMAL, FLAT_SUBSPACE,
                    // ALL_NONSPECIAL_SUSPENSION or NONE
  bool pairwise_non_special = false;
  std::vector<int> vanishing;  // rays with zero restricted conormal
  std::size_t summed_polytope_dim = 0;
  bool flat_subspace = false;  // summed dim <= d - p - 1
  bool all_non_special = false;  // every link ray non-special for some j
  std::vector<int> dims;  // b restricted to singletons, pcone order
};
// NONE is returned only when the fan does not have signature zero; on a
// signature-zero fan it raises InconsistencyError.
DichotomyReport pcone_dichotomy(const Fan& fan, const Cone& pcone);

struct Pdover2Certificate {
  std::vector<int> ordering;     // rays of the tuple
  std::vector<int> running_dims; // dim of the first k summands, k = 1..|tuple|
  int k = -1;                    // first k with running_dims[k-1] <= k - 1, or -1
  int containments_checked = 0;
};
// Requires even d, |tuple| = d/2 forming a cone, local convexity and an empty
// vanishing-monomial suite. Throws InconsistencyError if no ordering yields a
// certificate or a containment fails.
std::vector<Pdover2Certificate> pdover2_certificates(const Fan& fan, const Cone& tuple);

struct FourCycle {
  std::array<int, 4> rays{};  // (alpha, gamma, alpha', gamma')
  std::array<int, 4> canonical() const;
};
// Requires a flag, locally convex fan and D_alpha . V(tau) = 0 for the wall
// tau containing alpha.
FourCycle four_cycle_from_flat_wall(const Fan& fan, const Cone& tau, int alpha);
// Recheck against the cone list: consecutive pairs span cones with the rest of
// the wall, opposite pairs do not.
bool is_induced_four_cycle(const Fan& fan, const Cone& tau, int alpha, const FourCycle& c);

struct SideReport {
  std::vector<std::pair<int, int>> sides;  // (ray x of lk(tau \ alpha), sign of <alpha*, u_x>)
  int negative_count = 0;
  int partner = -1;
  bool tau_positive = false;
  bool replacements_on_hyperplane = false;
  bool partner_flat = false;
  bool ok() const {
    return negative_count == 1 && tau_positive && replacements_on_hyperplane && partner_flat;
  }
};
SideReport verify_4cycle_side_structure(const Fan& fan, const Cone& tau, int alpha);

struct RayCycleWitness {
  int ray = -1;
  bool witnessed = false;
  Cone wall;
  FourCycle cycle;
  std::string reason;
};
struct AllCyclesReport {
  std::vector<RayCycleWitness> rays;
  bool all_witnessed = true;
  std::vector<std::array<int, 4>> distinct_cycles;  // canonical, sorted
};
AllCyclesReport all_rays_in_4cycles(const Fan& fan);

}  // namespace fanlab::structure

#endif  // FANLAB_STRUCTURE_HPP_
