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

#ifndef INCLUDE_LATTICEFORGE_DOUBLING_HPP_
#define INCLUDE_LATTICEFORGE_DOUBLING_HPP_

#include <string>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"

namespace latticeforge {

/// Interval doubling: the closed interval [a,b] is replaced by [a,b] x 2.
/// Elements outside keep their relative order; (u,i) <= (v,j) iff u <= v and
/// i <= j; for x outside the interval, (u,i) <= x iff u <= x and
/// x <= (u,i) iff x <= u.
///
/// Id scheme: original ids in order, where interval members stand for their
/// lower copies; upper copies are appended afterwards in id order.
inline FiniteLattice double_interval(const FiniteLattice& L, Elt a, Elt b) {
  if (!L.leq(a, b)) throw BadInterval("interval endpoints are not ordered");
  const std::size_t n = L.size();
  std::vector<bool> in_iv(n, false);
  std::vector<Elt> upper_copy(n, 0);
  std::size_t iv_count = 0;
  for (Elt x = 0; x < n; ++x)
    if (L.leq(a, x) && L.leq(x, b)) in_iv[x] = true;
  for (Elt x = 0; x < n; ++x)
    if (in_iv[x]) upper_copy[x] = static_cast<Elt>(n + iv_count++);

  const std::size_t m = n + iv_count;
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      if (!L.leq(x, y)) continue;
      if (!in_iv[x] && !in_iv[y]) {
        pairs.emplace_back(x, y);
      } else if (in_iv[x] && !in_iv[y]) {
        pairs.emplace_back(x, y);
        pairs.emplace_back(upper_copy[x], y);
      } else if (!in_iv[x] && in_iv[y]) {
        pairs.emplace_back(x, y);  // x <= lower copy only
      } else {
        pairs.emplace_back(x, y);
        pairs.emplace_back(upper_copy[x], upper_copy[y]);
        pairs.emplace_back(x, upper_copy[y]);
      }
    }

  std::vector<std::string> names;
  if (!L.names().empty()) {
    names.resize(m);
    for (Elt x = 0; x < n; ++x) {
      names[x] = L.name(x);
      if (in_iv[x]) names[upper_copy[x]] = L.name(x) + "*";
    }
  }
  return FiniteLattice::from_order(m, pairs, std::move(names));
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_DOUBLING_HPP_
