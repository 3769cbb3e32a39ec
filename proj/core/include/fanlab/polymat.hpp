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

// Submodular dimension functions b_A on subsets of [N] and the exponent
// tuples (a_1, ..., a_N) in the region sum_{j in A} a_j <= b_A.
//
// Elements are 0-based; a subset is a bitmask with bit j for element j. In
// JSON, subsets are written as ascending 1-based digit strings ("13").

#ifndef FANLAB_POLYMAT_HPP_
#define FANLAB_POLYMAT_HPP_

#include <map>
#include <string>
#include <vector>

namespace fanlab::polymat {

using Subset = unsigned;
using ExponentTuple = std::vector<int>;
// perm[q] is the element placed at position q (0-based).
using Permutation = std::vector<int>;

class DimFunction {
 public:
  static constexpr int kMaxN = 16;

  DimFunction() = default;
  // values[S] for every S in [0, 2^n); values[0] must be 0.
  DimFunction(int n, std::vector<int> values);
  // Keys are digit strings such as "1", "12"; missing subsets are an error.
  static DimFunction from_digits(int n, const std::map<std::string, int>& values);

  int n() const { return n_; }
  Subset full_mask() const { return (Subset{1} << n_) - 1; }
  int operator[](Subset s) const { return values_[s]; }
  int full() const { return values_[full_mask()]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const DimFunction& a, const DimFunction& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_ = 0;
  std::vector<int> values_;
};

std::string subset_digits(Subset s);
Subset parse_subset_digits(const std::string& digits, int n);

struct SubmodularReport {
  bool submodular = true;
  Subset sub_s = 0, sub_t = 0;  // b_S + b_T < b_{S u T} + b_{S n T}
  bool monotone = true;
  Subset mono_small = 0, mono_big = 0;  // small subset of big, b_small > b_big
  bool lower_bound = true;
  Subset lower_witness = 0;  // b_A < |A|
  bool ok() const { return submodular && monotone && lower_bound; }
};
SubmodularReport check_submodular(const DimFunction& b);

// Throws PreconditionError unless b is submodular, monotone and b_A >= |A|.
void require_polymatroid(const DimFunction& b, const char* context);

struct RegionReport {
  bool inside = true;
  Subset witness = 0;  // first subset (in mask order) with sum_A a > b_A
  int lhs = 0;
  int rhs = 0;
};
RegionReport in_nonzero_region(const DimFunction& b, const ExponentTuple& a);

// c_A = min(C, b_A).
DimFunction clamp(const DimFunction& b, int c);

// point has N-1 entries for the elements of [N] \ {k} in increasing order and
// must lie in the region of b restricted to [N] \ {k}. Appends
// a_k = b_[N] - b_{[N] \ k}.
ExponentTuple lift_point(const DimFunction& b, const ExponentTuple& point, int k);

// v_{pi(q)} = b_{[N] \ pi([q-1])} - b_{[N] \ pi([q])}.
ExponentTuple greedy_extreme_point(const DimFunction& b, const Permutation& pi);

struct Transition {
  int position = 0;   // w_i, 1-based position in pi
  int element = 0;    // pi(w_i)
  int value = 0;      // a_{pi(w_i)}
  int gap = 0;        // w_i - w_{i-1} - 1, the number of forced 1s before it
  int prev_parity_fix = 0;  // 1 if b_{[N] \ pi([w_{i-1}])} has parity N - w_{i-1} - 1
  int parity_fix = 0;       // 1 if b_{[N] \ pi([w_i])} has parity N - w_i - 1
  int mu = 0;               // parity_fix - prev_parity_fix
};

struct AlgorithmTrace {
  Permutation pi;
  ExponentTuple a;            // indexed by element
  std::vector<int> totals;    // T_1..T_N
  std::vector<Transition> transitions;
  bool degenerate = false;    // some entry was <= 0 or even
  std::string failure;
};

// Assigns a_{pi(q)} greedily from the front. Throws PreconditionError when
// b_[N] and N have different parity or pi is not a permutation.
AlgorithmTrace odd_tuple_algorithm(const DimFunction& b, const Permutation& pi);

struct LedgerEntry {
  int element = 0;
  int change = 0;   // contribution of this element to b_prefix - sum a
  int running = 0;  // b_prefix - sum_{prefix} a after adding it
  bool transition = false;
};

struct SubsetLedger {
  Subset subset = 0;
  std::vector<LedgerEntry> entries;  // elements by decreasing position in pi
  bool ok = true;                    // final running total is >= 0
  int negative_steps = 0;
  int cushion = 0;  // first term plus the positive changes
};

struct CompatReport {
  bool compatible = true;
  Subset first_failure = 0;
  std::vector<SubsetLedger> ledgers;  // empty unless requested
  // Failure of a subset forces more negative steps than cushion.
  bool counting_condition_holds = true;
};
CompatReport check_output_compat(const DimFunction& b, const AlgorithmTrace& trace,
                                 bool keep_ledgers = true);

struct ExtremeComparison {
  struct Row {
    int position = 0;
    int value = 0;
    int extreme = 0;          // b_{[N] \ pi([w_i - 1])} - b_{[N] \ pi([w_i])}
    int alpha = 0;            // parity correction at this transition
    bool holds = true;        // value - alpha <= extreme
    int alpha_prev = 0;       // correction of the previous block
    bool holds_prev = true;   // value - alpha_prev <= extreme
  };
  std::vector<Row> rows;
  bool holds = true;
  bool holds_prev = true;
};
// Throws InconsistencyError if value - alpha <= extreme fails anywhere.
ExtremeComparison compare_to_extreme(const DimFunction& b, const AlgorithmTrace& trace);

struct P2Report {
  bool exists = false;
  ExponentTuple example;      // an odd pair when one exists
  ExponentTuple entry, exit;  // ends of the segment a1 + a2 = C inside the region
  std::string reason;
};
// Requires C even, 2 <= C <= b12, 1 <= b1, b2 and submodular monotone data.
P2Report p2_analysis(int b1, int b2, int b12, int c);

struct P3Report {
  int part = 0;  // 1 when b_{sigma(1)} is even, 2 when odd
  ExponentTuple point;  // indexed by element
  std::vector<std::pair<std::string, bool>> conditions;
  bool compatible = false;
};
// sigma lists the elements in the order of the closed form; it corresponds to
// running odd_tuple_algorithm with the reversed permutation. Requires b_[3]
// odd, every b_[3] - b_{[3] \ l} even, and a point with positive entries.
P3Report p3_closed_form(const DimFunction& b, const Permutation& sigma);

// Odd tuples with sum b_[N] in the region, in lexicographic order.
std::vector<ExponentTuple> brute_force_odd_tuples(const DimFunction& b);

Permutation identity_permutation(int n);

}  // namespace fanlab::polymat

#endif  // FANLAB_POLYMAT_HPP_
