//  Copyright 2026 The latticeforge Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef INCLUDE_LATTICEFORGE_ISOMORPHISM_HPP_
#define INCLUDE_LATTICEFORGE_ISOMORPHISM_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"

namespace latticeforge {

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

/// Iterated cover-degree invariants, the usual color-refinement on the Hasse
/// diagram with direction kept apart.
inline std::vector<std::uint64_t> node_invariants(const FiniteLattice& L) {
  const std::size_t n = L.size();
  std::vector<std::uint64_t> inv(n);
  for (Elt x = 0; x < n; ++x) {
    std::uint64_t h = 1469598103934665603ULL;
    h = mix(h, L.lower_covers(x).size());
    h = mix(h, L.upper_covers(x).size());
    h = mix(h, L.down_set(x).size());
    h = mix(h, L.height(x));
    inv[x] = h;
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(n);
    for (Elt x = 0; x < n; ++x) {
      std::vector<std::uint64_t> lo, hi;
      for (Elt y : L.lower_covers(x)) lo.push_back(inv[y]);
      for (Elt y : L.upper_covers(x)) hi.push_back(inv[y]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      std::uint64_t h = mix(inv[x], 0x517cc1b727220a95ULL);
      for (auto v : lo) h = mix(h, v);
      h = mix(h, 0xff51afd7ed558ccdULL);
      for (auto v : hi) h = mix(h, v);
      next[x] = h;
    }
    inv = std::move(next);
  }
  return inv;
}

}  // namespace detail

/// Searches for an order isomorphism A -> B by backtracking over
/// invariant-compatible images.  Intended for the few-hundred-element
/// lattices this library materializes.
inline std::optional<std::vector<Elt>> find_isomorphism(const FiniteLattice& A,
                                                        const FiniteLattice& B) {
  if (A.size() != B.size()) return std::nullopt;
  const std::size_t n = A.size();
  auto ia = detail::node_invariants(A);
  auto ib = detail::node_invariants(B);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Assign elements rarest invariant class first.
  std::vector<std::size_t> freq_order(n);
  {
    std::vector<std::pair<std::uint64_t, std::size_t>> keyed(n);
    std::vector<std::size_t> freq(n, 0);
    for (Elt x = 0; x < n; ++x) {
      std::size_t f = 0;
      for (Elt y = 0; y < n; ++y)
        if (ia[y] == ia[x]) ++f;
      freq[x] = f;
    }
    for (Elt x = 0; x < n; ++x) keyed[x] = {(static_cast<std::uint64_t>(freq[x]) << 32) | x, x};
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 0; i < n; ++i) freq_order[i] = keyed[i].second;
  }

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    Elt x = static_cast<Elt>(freq_order[depth]);
    for (Elt y = 0; y < n; ++y) {
      if (used[y] || ib[y] != ia[x]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        Elt x2 = static_cast<Elt>(freq_order[d]);
        Elt y2 = static_cast<Elt>(img[x2]);
        if (A.leq(x, x2) != B.leq(y, y2) || A.leq(x2, x) != B.leq(y2, y)) ok = false;
      }
      if (!ok) continue;
      img[x] = static_cast<int>(y);
      used[y] = true;
      if (self(self, depth + 1)) return true;
      img[x] = -1;
      used[y] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  std::vector<Elt> out(n);
  for (Elt x = 0; x < n; ++x) out[x] = static_cast<Elt>(img[x]);
  return out;
}

inline bool isomorphic(const FiniteLattice& A, const FiniteLattice& B) {
  return find_isomorphism(A, B).has_value();
}

/// An order-reversing bijection A -> B, i.e. an isomorphism A -> dual(B).
inline std::optional<std::vector<Elt>> find_dual_isomorphism(const FiniteLattice& A,
                                                             const FiniteLattice& B) {
  return find_isomorphism(A, B.dual());
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_ISOMORPHISM_HPP_
