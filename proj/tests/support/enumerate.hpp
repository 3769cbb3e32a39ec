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

// Exhaustive enumeration of integer polymatroids used as oracles: submodular,
// monotone, b_A >= |A|, all values <= max_value.

#ifndef FANLAB_TESTS_SUPPORT_ENUMERATE_HPP_
#define FANLAB_TESTS_SUPPORT_ENUMERATE_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "fanlab/polymat.hpp"

namespace fanlab::testing {

// Calls fn(values) for every polymatroid on n <= 4 elements with b_[n] <=
// max_value. With canonical set, only the representative of each S_n orbit
// whose value vector ordered by (|A|, mask) is lexicographically least is
// visited. values has 2^n entries indexed by mask.
template <typename Fn>
void for_each_polymatroid(int n, int max_value, bool canonical, Fn&& fn) {
  const int full = (1 << n) - 1;
  std::array<int, 16> b{};
  std::vector<std::array<int, 16>> relabel;  // relabel[p][mask] = image mask
  std::vector<int> order;                    // masks by (size, mask)
  for (int m = 1; m <= full; ++m) order.push_back(m);
  std::stable_sort(order.begin(), order.end(),
                   [](int x, int y) { return std::popcount(unsigned(x)) < std::popcount(unsigned(y)); });
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    std::array<int, 16> r{};
    for (int m = 0; m <= full; ++m) {
      int img = 0;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) img |= 1 << perm[static_cast<std::size_t>(i)];
      r[static_cast<std::size_t>(m)] = img;
    }
    relabel.push_back(r);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto is_canonical = [&] {
    for (std::size_t p = 1; p < relabel.size(); ++p) {
      for (int m : order) {
        // Value of the relabelled function at m.
        const int mine = b[static_cast<std::size_t>(m)];
        const int other = b[static_cast<std::size_t>(relabel[p][static_cast<std::size_t>(m)])];
        if (other < mine) return false;
        if (other > mine) break;
      }
    }
    return true;
  };

  std::vector<int> values(static_cast<std::size_t>(full + 1));
  auto rec = [&](auto&& self, int m) -> void {
    if (m > full) {
      if (canonical && !is_canonical()) return;
      std::copy(b.begin(), b.begin() + full + 1, values.begin());
      fn(values);
      return;
    }
    int lo = std::popcount(unsigned(m));
    int hi = max_value;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) lo = std::max(lo, b[static_cast<std::size_t>(m ^ (1 << i))]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((m >> i & 1) && (m >> j & 1)) {
          const int a = m ^ (1 << i) ^ (1 << j);
          hi = std::min(hi, b[static_cast<std::size_t>(a | 1 << i)] + b[static_cast<std::size_t>(a | 1 << j)] -
                                b[static_cast<std::size_t>(a)]);
        }
    // Canonical representatives have non-decreasing singleton values.
    if (canonical && std::popcount(unsigned(m)) == 1 && m > 1) lo = std::max(lo, b[static_cast<std::size_t>(m >> 1)]);
    for (int v = lo; v <= hi; ++v) {
      b[static_cast<std::size_t>(m)] = v;
      self(self, m + 1);
    }
  };
  rec(rec, 1);
}

}  // namespace fanlab::testing

#endif  // FANLAB_TESTS_SUPPORT_ENUMERATE_HPP_
