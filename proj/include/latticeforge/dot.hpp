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

#ifndef INCLUDE_LATTICEFORGE_DOT_HPP_
#define INCLUDE_LATTICEFORGE_DOT_HPP_

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "latticeforge/lattice.hpp"

namespace latticeforge {

/// Hasse diagram as DOT: cover edges drawn bottom-up, nodes grouped by
/// height, join-irreducible elements marked with doubled circles.
inline void write_dot(const FiniteLattice& L, std::ostream& os) {
  if (L.size() > 200) throw SizeLimit("diagram emission capped at 200 elements");
  os << "digraph lattice {\n";
  os << "  rankdir=BT;\n";
  os << "  edge [arrowhead=none];\n";
  std::map<std::size_t, std::vector<Elt>> by_height;
  for (Elt x = 0; x < L.size(); ++x) by_height[L.height(x)].push_back(x);
  for (Elt x = 0; x < L.size(); ++x) {
    std::string label = L.name(x).empty() ? std::to_string(x) : L.name(x);
    os << "  n" << x << " [label=\"" << label << "\", shape="
       << (L.is_ji(x) ? "doublecircle" : "circle") << "];\n";
  }
  for (const auto& [h, nodes] : by_height) {
    os << "  { rank=same;";
    for (Elt x : nodes) os << " n" << x << ";";
    os << " }\n";
  }
  for (Elt x = 0; x < L.size(); ++x)
    for (Elt y : L.upper_covers(x)) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_DOT_HPP_
