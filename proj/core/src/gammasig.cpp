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

#include "fanlab/gammasig.hpp"

#include <string>

#include "fanlab/error.hpp"
#include "fanlab/istheory.hpp"
#include "fanlab/parallel.hpp"

namespace fanlab::gammasig {
namespace {

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void odd_tuples_rec(int p, int total, polymat::ExponentTuple& cur,
                    std::vector<polymat::ExponentTuple>& out) {
  if (static_cast<int>(cur.size()) == p - 1) {
    if (total >= 1 && total % 2 == 1) {
      cur.push_back(total);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  const int rest = p - 1 - static_cast<int>(cur.size());
  for (int a = 1; a <= total - rest; a += 2) {
    cur.push_back(a);
    odd_tuples_rec(p, total - a, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<long long> f_vector(const Fan& fan) {
  std::vector<long long> f(static_cast<std::size_t>(fan.dim()), 0);
  for (int k = 1; k <= fan.dim(); ++k)
    f[static_cast<std::size_t>(k - 1)] =
        static_cast<long long>(fan::faces_of_size(fan, k).size());
  return f;
}

std::vector<long long> h_vector(const std::vector<long long>& f) {
  const int d = static_cast<int>(f.size());
  std::vector<long long> h(static_cast<std::size_t>(d + 1), 0);
  for (int k = 0; k <= d; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) {
      const long long fi = i == 0 ? 1 : f[static_cast<std::size_t>(i - 1)];
      const long long term = binom(d - i, k - i) * fi;
      s += (k - i) % 2 == 0 ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = s;
  }
  return h;
}

std::vector<long long> gamma_vector(const std::vector<long long>& h) {
  if (h.empty()) throw PreconditionError("gamma_vector: empty h-vector");
  const int d = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= d; ++i)
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)])
      throw PreconditionError("gamma_vector: h-vector is not palindromic at index " +
                              std::to_string(i));
  std::vector<long long> g(static_cast<std::size_t>(d / 2 + 1), 0);
  for (int i = 0; i <= d / 2; ++i) {
    long long v = h[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) v -= g[static_cast<std::size_t>(j)] * binom(d - 2 * j, i - j);
    g[static_cast<std::size_t>(i)] = v;
  }
  // h(t) = sum_i g_i t^i (1+t)^(d-2i), checked coefficientwise.
  for (int k = 0; k <= d; ++k) {
    long long v = 0;
    for (int i = 0; i <= d / 2; ++i) v += g[static_cast<std::size_t>(i)] * binom(d - 2 * i, k - i);
    if (v != h[static_cast<std::size_t>(k)])
      throw InconsistencyError("gamma_vector: reconstruction differs at index " +
                               std::to_string(k));
  }
  return g;
}

SignatureReport signature(const Fan& fan) {
  if (fan.dim() % 2 != 0)
    throw PreconditionError("signature: dimension " + std::to_string(fan.dim()) + " is odd");
  SignatureReport r;
  r.f = f_vector(fan);
  r.h = h_vector(r.f);
  r.gamma = gamma_vector(r.h);
  for (std::size_t i = 0; i < r.h.size(); ++i) r.signature += i % 2 == 0 ? r.h[i] : -r.h[i];
  r.top_gamma = r.gamma.back();
  r.signed_top_gamma = (fan.dim() / 2) % 2 == 0 ? r.top_gamma : -r.top_gamma;
  return r;
}

std::vector<polymat::ExponentTuple> odd_tuples(int p, int total) {
  std::vector<polymat::ExponentTuple> out;
  if (p <= 0) return out;
  polymat::ExponentTuple cur;
  odd_tuples_rec(p, total, cur, out);
  return out;
}

SuiteReport vanishing_monomial_suite(const Fan& fan, int threads, bool include_special_pairs) {
  const int d = fan.dim();
  if (d % 2 != 0) throw PreconditionError("vanishing_monomial_suite: dimension is odd");
  const fan::LocalConvexityReport lc = fan::is_locally_convex(fan);
  if (!lc.locally_convex)
    throw PreconditionError("vanishing_monomial_suite: not locally convex at ray " +
                            std::to_string(lc.ray) + ", wall " + fan::cone_string(lc.wall));
  if (threads <= 0) threads = default_threads();

  // special[i] = rays special in lk(i) with respect to {i}.
  const int n = fan.num_rays();
  std::vector<std::uint64_t> special(static_cast<std::size_t>(n), 0);
  parallel_for(
      static_cast<std::size_t>(n),
      [&](std::size_t i) {
        const int r = static_cast<int>(i);
        for (int g : istheory::perpendicular_rays(fan, {r}, {r}))
          special[i] |= std::uint64_t{1} << g;
      },
      threads);

  SuiteReport rep;
  for (int p = 1; p <= d / 2; ++p) {
    const std::vector<Cone> cones = fan::faces_of_size(fan, p);
    const std::vector<polymat::ExponentTuple> tuples = odd_tuples(p, d - p);
    std::vector<char> eligible(cones.size(), 1);
    for (std::size_t c = 0; c < cones.size() && !include_special_pairs; ++c)
      for (int i : cones[c])
        if (special[static_cast<std::size_t>(i)] & fan.mask(cones[c])) eligible[c] = 0;
    std::vector<std::vector<MonomialWitness>> found(cones.size());
    parallel_for(
        cones.size(),
        [&](std::size_t c) {
          if (!eligible[c]) return;
          const Cone& pc = cones[c];
          fan::LinkFan lk = fan::link(fan, pc);
          std::vector<istheory::Polytope> polys;
          for (int j : pc)
            polys.push_back(
                istheory::divisor_polytope(lk.quotient, istheory::conormal_divisor(fan, lk, {j})));
          const polymat::DimFunction b = istheory::minkowski_dim_function(polys);
          for (const auto& t : tuples)
            if (polymat::in_nonzero_region(b, t).inside) found[c].push_back({p, pc, t});
        },
        threads);
    int checked = 0;
    for (std::size_t c = 0; c < cones.size(); ++c) {
      checked += eligible[c];
      for (auto& w : found[c]) rep.witnesses.push_back(std::move(w));
    }
    rep.cones_checked.push_back(checked);
    rep.cones_skipped.push_back(static_cast<int>(cones.size()) - checked);
  }
  return rep;
}

PredicateReport signature_zero_predicate(const Fan& fan, int threads) {
  PredicateReport r;
  r.signature = signature(fan);
  r.suite = vanishing_monomial_suite(fan, threads);
  r.predicate = r.suite.witnesses.empty();
  r.agrees = r.predicate == (r.signature.signature == 0);
  r.full_suite = vanishing_monomial_suite(fan, threads, true);
  r.full_predicate = r.full_suite.witnesses.empty();
  r.full_agrees = r.full_predicate == (r.signature.signature == 0);
  return r;
}

}  // namespace fanlab::gammasig
