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

#include "fanlab/polymat.hpp"

#include <algorithm>
#include <bit>

#include "fanlab/error.hpp"

namespace fanlab::polymat {

namespace {

int popcount(Subset s) { return std::popcount(s); }

void check_permutation(const Permutation& pi, int n) {
  if (static_cast<int>(pi.size()) != n) throw PreconditionError("permutation has the wrong length");
  Subset seen = 0;
  for (int x : pi) {
    if (x < 0 || x >= n || (seen >> x & 1)) throw PreconditionError("not a permutation of [N]");
    seen |= Subset{1} << x;
  }
}

bool odd(int x) { return (x & 1) != 0; }

}  // namespace

DimFunction::DimFunction(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n_ < 1 || n_ > kMaxN) throw PreconditionError("DimFunction: N must be in [1, 16]");
  if (values_.size() != (std::size_t{1} << n_))
    throw PreconditionError("DimFunction: expected 2^N values");
  if (values_[0] != 0) throw PreconditionError("DimFunction: b of the empty set must be 0");
  for (std::size_t s = 0; s < values_.size(); ++s)
    if (values_[s] < 0)
      throw PreconditionError("DimFunction: negative value at " + subset_digits(static_cast<Subset>(s)));
}

std::string subset_digits(Subset s) {
  std::string out;
  for (int j = 0; s >> j; ++j)
    if (s >> j & 1) out += std::to_string(j + 1);
  return out;
}

Subset parse_subset_digits(const std::string& digits, int n) {
  if (digits.empty()) throw SchemaError("empty subset key");
  if (n > 9) throw SchemaError("digit subset keys support N <= 9");
  Subset s = 0;
  for (char ch : digits) {
    if (ch < '1' || ch > '9' || ch - '0' > n)
      throw SchemaError("subset key '" + digits + "' names an element outside [N]");
    Subset bit = Subset{1} << (ch - '1');
    if (s & bit) throw SchemaError("subset key '" + digits + "' repeats an element");
    s |= bit;
  }
  return s;
}

DimFunction DimFunction::from_digits(int n, const std::map<std::string, int>& values) {
  if (n < 1 || n > 9) throw SchemaError("N must be in [1, 9] for digit keys");
  std::vector<int> v(std::size_t{1} << n, -1);
  v[0] = 0;
  for (const auto& [key, val] : values) {
    Subset s = parse_subset_digits(key, n);
    if (v[s] != -1) throw SchemaError("subset '" + key + "' is given twice");
    v[s] = val;
  }
  for (std::size_t s = 1; s < v.size(); ++s)
    if (v[s] == -1) throw SchemaError("missing value for subset '" + subset_digits(static_cast<Subset>(s)) + "'");
  return DimFunction(n, std::move(v));
}

SubmodularReport check_submodular(const DimFunction& b) {
  SubmodularReport rep;
  const Subset full = b.full_mask();
  for (Subset s = 1; s <= full && rep.submodular; ++s)
    for (Subset t = s + 1; t <= full; ++t) {
      if ((s & t) == s || (s & t) == t) continue;
      if (b[s] + b[t] < b[s | t] + b[s & t]) {
        rep.submodular = false;
        rep.sub_s = s;
        rep.sub_t = t;
        break;
      }
    }
  for (Subset s = 1; s <= full && rep.monotone; ++s)
    for (int j = 0; j < b.n(); ++j) {
      if (!(s >> j & 1)) continue;
      Subset r = s & ~(Subset{1} << j);
      if (b[r] > b[s]) {
        rep.monotone = false;
        rep.mono_small = r;
        rep.mono_big = s;
        break;
      }
    }
  for (Subset s = 1; s <= full; ++s)
    if (b[s] < popcount(s)) {
      rep.lower_bound = false;
      rep.lower_witness = s;
      break;
    }
  return rep;
}

void require_polymatroid(const DimFunction& b, const char* context) {
  SubmodularReport r = check_submodular(b);
  if (!r.submodular)
    throw PreconditionError(std::string(context) + ": not submodular at S=" + subset_digits(r.sub_s) +
                            ", T=" + subset_digits(r.sub_t));
  if (!r.monotone)
    throw PreconditionError(std::string(context) + ": not monotone at " + subset_digits(r.mono_small) +
                            " in " + subset_digits(r.mono_big));
  if (!r.lower_bound)
    throw PreconditionError(std::string(context) + ": b_A < |A| at A=" + subset_digits(r.lower_witness));
}

RegionReport in_nonzero_region(const DimFunction& b, const ExponentTuple& a) {
  if (static_cast<int>(a.size()) != b.n()) throw PreconditionError("exponent tuple has the wrong length");
  RegionReport rep;
  const Subset full = b.full_mask();
  for (Subset s = 1; s <= full; ++s) {
    int sum = 0;
    for (int j = 0; j < b.n(); ++j)
      if (s >> j & 1) sum += a[static_cast<std::size_t>(j)];
    if (sum > b[s]) {
      rep.inside = false;
      rep.witness = s;
      rep.lhs = sum;
      rep.rhs = b[s];
      return rep;
    }
  }
  return rep;
}

DimFunction clamp(const DimFunction& b, int c) {
  std::vector<int> v = b.values();
  for (std::size_t s = 1; s < v.size(); ++s) v[s] = std::min(c, v[s]);
  return DimFunction(b.n(), std::move(v));
}

ExponentTuple lift_point(const DimFunction& b, const ExponentTuple& point, int k) {
  const int n = b.n();
  if (k < 0 || k >= n) throw PreconditionError("lift_point: k outside [N]");
  if (static_cast<int>(point.size()) != n - 1) throw PreconditionError("lift_point: point needs N-1 entries");
  ExponentTuple a(static_cast<std::size_t>(n), 0);
  for (int j = 0, i = 0; j < n; ++j)
    if (j != k) a[static_cast<std::size_t>(j)] = point[static_cast<std::size_t>(i++)];
  const Subset kbit = Subset{1} << k;
  for (Subset s = 1; s <= b.full_mask(); ++s) {
    if (s & kbit) continue;
    int sum = 0;
    for (int j = 0; j < n; ++j)
      if (s >> j & 1) sum += a[static_cast<std::size_t>(j)];
    if (sum > b[s])
      throw PreconditionError("lift_point: point violates the restricted region at " + subset_digits(s));
  }
  a[static_cast<std::size_t>(k)] = b.full() - b[b.full_mask() & ~kbit];
  return a;
}

ExponentTuple greedy_extreme_point(const DimFunction& b, const Permutation& pi) {
  check_permutation(pi, b.n());
  ExponentTuple v(static_cast<std::size_t>(b.n()));
  Subset rest = b.full_mask();
  for (int x : pi) {
    Subset next = rest & ~(Subset{1} << x);
    v[static_cast<std::size_t>(x)] = b[rest] - b[next];
    rest = next;
  }
  return v;
}

AlgorithmTrace odd_tuple_algorithm(const DimFunction& b, const Permutation& pi) {
  const int n = b.n();
  check_permutation(pi, n);
  if (odd(b.full() - n))
    throw PreconditionError("odd_tuple_algorithm: b_[N] = " + std::to_string(b.full()) +
                            " does not have the parity of N = " + std::to_string(n));
  AlgorithmTrace tr;
  tr.pi = pi;
  tr.a.assign(static_cast<std::size_t>(n), 0);
  int total = b.full();
  Subset rest = b.full_mask();
  int last_w = 0;
  int prev_fix = 0;
  for (int q = 1; q <= n; ++q) {
    tr.totals.push_back(total);
    const int x = pi[static_cast<std::size_t>(q - 1)];
    rest &= ~(Subset{1} << x);
    const int bound = b[rest];
    const int m = std::min(total, bound);
    int a = total - m;
    if (!odd(a)) ++a;
    if (a > total || (q == n && a != total)) {
      tr.degenerate = true;
      tr.failure = "entry for element " + std::to_string(x + 1) + " at position " + std::to_string(q) +
                   " cannot be made odd and positive (running total " + std::to_string(total) + ")";
      return tr;
    }
    tr.a[static_cast<std::size_t>(x)] = a;
    if (total > bound) {
      Transition t;
      t.position = q;
      t.element = x;
      t.value = a;
      t.gap = q - last_w - 1;
      t.prev_parity_fix = prev_fix;
      t.parity_fix = odd(bound - (n - q)) ? 1 : 0;
      t.mu = t.parity_fix - t.prev_parity_fix;
      tr.transitions.push_back(t);
      prev_fix = t.parity_fix;
      last_w = q;
    }
    total -= a;
  }
  return tr;
}

CompatReport check_output_compat(const DimFunction& b, const AlgorithmTrace& trace, bool keep_ledgers) {
  const int n = b.n();
  if (trace.degenerate) throw PreconditionError("check_output_compat: degenerate trace");
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) pos[static_cast<std::size_t>(trace.pi[static_cast<std::size_t>(q)])] = q;
  Subset transition_mask = 0;
  for (const Transition& t : trace.transitions) transition_mask |= Subset{1} << t.element;
  // Elements ordered by decreasing position in pi.
  std::vector<int> order(trace.pi.rbegin(), trace.pi.rend());

  CompatReport rep;
  for (Subset s = 1; s <= b.full_mask(); ++s) {
    SubsetLedger led;
    led.subset = s;
    Subset prefix = 0;
    int running = 0;
    bool first = true;
    int first_term = 0, positive = 0;
    for (int x : order) {
      if (!(s >> x & 1)) continue;
      const Subset next = prefix | (Subset{1} << x);
      const int change = (b[next] - b[prefix]) - trace.a[static_cast<std::size_t>(x)];
      running += change;
      if (first) {
        first_term = change;
        first = false;
      } else if (change < 0) {
        ++led.negative_steps;
      } else {
        positive += change;
      }
      if (keep_ledgers) led.entries.push_back({x, change, running, (transition_mask >> x & 1) != 0});
      prefix = next;
    }
    led.cushion = first_term + positive;
    led.ok = running >= 0;
    if (!led.ok) {
      if (rep.compatible) rep.first_failure = s;
      rep.compatible = false;
      if (led.negative_steps <= led.cushion) rep.counting_condition_holds = false;
    }
    if (keep_ledgers) rep.ledgers.push_back(std::move(led));
  }
  return rep;
}

ExtremeComparison compare_to_extreme(const DimFunction& b, const AlgorithmTrace& trace) {
  if (trace.degenerate) throw PreconditionError("compare_to_extreme: degenerate trace");
  ExtremeComparison cmp;
  Subset before = b.full_mask();
  int q = 0;
  for (const Transition& t : trace.transitions) {
    for (; q < t.position - 1; ++q) before &= ~(Subset{1} << trace.pi[static_cast<std::size_t>(q)]);
    const Subset after = before & ~(Subset{1} << t.element);
    ExtremeComparison::Row row;
    row.position = t.position;
    row.value = t.value;
    row.extreme = b[before] - b[after];
    row.alpha = t.parity_fix;
    row.holds = row.value - row.alpha <= row.extreme;
    row.alpha_prev = t.prev_parity_fix;
    row.holds_prev = row.value - row.alpha_prev <= row.extreme;
    cmp.holds = cmp.holds && row.holds;
    cmp.holds_prev = cmp.holds_prev && row.holds_prev;
    cmp.rows.push_back(row);
  }
  if (!cmp.holds) throw InconsistencyError("compare_to_extreme: transition exceeds the extreme point bound");
  return cmp;
}

P2Report p2_analysis(int b1, int b2, int b12, int c) {
  if (b1 < 1 || b2 < 1) throw PreconditionError("p2_analysis: b1 and b2 must be at least 1");
  if (b12 > b1 + b2 || b12 < std::max(b1, b2))
    throw PreconditionError("p2_analysis: pair data is not submodular and monotone");
  if (odd(c) || c < 2 || c > b12) throw PreconditionError("p2_analysis: need C even with 2 <= C <= b12");
  P2Report rep;
  const int lo = std::max(0, c - b2);
  const int hi = std::min(b1, c);
  rep.entry = {lo, c - lo};
  rep.exit = {hi, c - hi};
  const bool predicted = c < b1 + b2 || (c == b1 + b2 && odd(b1) && odd(b2));
  for (int a1 = std::max(1, lo); a1 <= std::min(hi, c - 1); ++a1)
    if (odd(a1)) {
      rep.example = {a1, c - a1};
      break;
    }
  rep.exists = !rep.example.empty();
  if (rep.exists != predicted) throw InconsistencyError("p2_analysis: closed form disagrees with the segment scan");
  if (c < b1 + b2) {
    rep.reason = "C < b1 + b2: the segment has at least two lattice points";
  } else if (rep.exists) {
    rep.reason = "C = b1 + b2 with b1, b2 odd: the single point is odd";
  } else {
    rep.reason = "C = b1 + b2 with an even entry: the single point is not odd";
  }
  return rep;
}

P3Report p3_closed_form(const DimFunction& b, const Permutation& sigma) {
  if (b.n() != 3) throw PreconditionError("p3_closed_form: N must be 3");
  check_permutation(sigma, 3);
  require_polymatroid(b, "p3_closed_form");
  const Subset full = b.full_mask();
  if (!odd(b.full())) throw PreconditionError("p3_closed_form: b_[3] must be odd");
  for (int l = 0; l < 3; ++l)
    if (odd(b.full() - b[full & ~(Subset{1} << l)]))
      throw PreconditionError("p3_closed_form: b_[3] - b_{[3]\\" + std::to_string(l + 1) +
                              "} is odd; lift a point with lift_point instead");
  const int s1 = sigma[0], s2 = sigma[1], s3 = sigma[2];
  const Subset m1 = Subset{1} << s1, m3 = Subset{1} << s3;
  const Subset m12 = full & ~m3;
  const int top = b.full() - b[m12];
  const std::string n1 = std::to_string(s1 + 1), n3 = std::to_string(s3 + 1);
  P3Report rep;
  rep.point.assign(3, 0);
  const bool c2 = top <= b[m3] - 1;
  const std::string c2_name = "b_[3] - b_{[3]\\" + n3 + "} <= b_" + n3 + " - 1";
  if (!odd(b[m1])) {
    rep.part = 1;
    rep.point[static_cast<std::size_t>(s1)] = b[m1] - 1;
    rep.point[static_cast<std::size_t>(s2)] = b[m12] - b[m1];
    rep.point[static_cast<std::size_t>(s3)] = top + 1;
    const bool c1 = b.full() - b[full & ~m1] <= b[m1] - 1;
    rep.conditions = {{"b_[3] - b_{[3]\\" + n1 + "} <= b_" + n1 + " - 1", c1}, {c2_name, c2}};
  } else {
    rep.part = 2;
    rep.point[static_cast<std::size_t>(s1)] = b[m1];
    rep.point[static_cast<std::size_t>(s2)] = b[m12] - b[m1] - 1;
    rep.point[static_cast<std::size_t>(s3)] = top + 1;
    const bool c3 = top <= b[m1 | m3] - b[m1] - 1;
    rep.conditions = {{c2_name, c2},
                      {"b_[3] - b_{[3]\\" + n3 + "} <= b_" + subset_digits(m1 | m3) + " - b_" + n1 + " - 1", c3}};
  }
  for (int x : rep.point)
    if (x <= 0)
      throw PreconditionError("p3_closed_form: closed form has a non-positive entry (b_" +
                              subset_digits(m12) + " = b_" + n1 + ")");
  rep.compatible = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                               [](const auto& c) { return c.second; });
  return rep;
}

std::vector<ExponentTuple> brute_force_odd_tuples(const DimFunction& b) {
  const int n = b.n();
  std::vector<ExponentTuple> out;
  ExponentTuple a(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int j, int remaining) -> void {
    const int cap = b[Subset{1} << j];
    if (j == n - 1) {
      if (remaining >= 1 && odd(remaining) && remaining <= cap) {
        a[static_cast<std::size_t>(j)] = remaining;
        if (in_nonzero_region(b, a).inside) out.push_back(a);
      }
      return;
    }
    const int hi = std::min(cap, remaining - (n - 1 - j));
    for (int x = 1; x <= hi; x += 2) {
      a[static_cast<std::size_t>(j)] = x;
      self(self, j + 1, remaining - x);
    }
  };
  rec(rec, 0, b.full());
  return out;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  return p;
}

}  // namespace fanlab::polymat
