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

#ifndef INCLUDE_LATTICEFORGE_BMN_HPP_
#define INCLUDE_LATTICEFORGE_BMN_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/congruence.hpp"
#include "latticeforge/lattice.hpp"

namespace latticeforge {

/// B(m,n): the join of the m a-atoms doubled inside the Boolean lattice on
/// m+n atoms.  Ids 0 .. 2^{m+n}-1 are the subsets by atom mask (a_i = bit
/// i-1, b_j = bit m+j-1); the doubled element p gets the last id.  Order on
/// p is closed-form: z <= p iff z is a subset of the a-atoms, p <= z iff z
/// strictly contains them.
struct BmnLattice {
  unsigned m = 0, n = 0;
  FiniteLattice lattice;

  Elt subset_id(std::uint32_t mask) const { return mask; }
  Elt p_id() const { return static_cast<Elt>(std::size_t{1} << (m + n)); }
  std::uint32_t a_mask() const { return (std::uint32_t{1} << m) - 1; }
  Elt a_id() const { return a_mask(); }
  Elt atom_a(unsigned i) const { return std::uint32_t{1} << (i - 1); }
  Elt atom_b(unsigned j) const { return std::uint32_t{1} << (m + j - 1); }

  std::vector<Elt> ji_expected() const {
    std::vector<Elt> r;
    for (unsigned i = 1; i <= m; ++i) r.push_back(atom_a(i));
    for (unsigned j = 1; j <= n; ++j) r.push_back(atom_b(j));
    r.push_back(p_id());
    return r;
  }

  static BmnLattice build(unsigned m, unsigned n) {
    if (m + n > 12) throw SizeLimit("doubled boolean lattice supports m + n <= 12");
    BmnLattice b;
    b.m = m;
    b.n = n;
    const std::uint32_t subsets = std::uint32_t{1} << (m + n);
    const Elt p = subsets;
    std::vector<std::pair<Elt, Elt>> pairs;
    for (std::uint32_t z = 0; z < subsets; ++z)
      for (unsigned bit = 0; bit < m + n; ++bit)
        if (!(z >> bit & 1)) pairs.emplace_back(z, z | (std::uint32_t{1} << bit));
    const std::uint32_t amask = (std::uint32_t{1} << m) - 1;
    pairs.emplace_back(amask, p);
    for (unsigned j = 1; j <= n; ++j)
      pairs.emplace_back(p, amask | (std::uint32_t{1} << (m + j - 1)));

    std::vector<std::string> names(subsets + 1);
    for (std::uint32_t z = 0; z < subsets; ++z) {
      std::string s;
      for (unsigned i = 1; i <= m; ++i)
        if (z >> (i - 1) & 1) s += "a" + std::to_string(i);
      for (unsigned j = 1; j <= n; ++j)
        if (z >> (m + j - 1) & 1) s += "b" + std::to_string(j);
      names[z] = s.empty() ? "0" : s;
    }
    names[p] = "p";
    b.lattice = FiniteLattice::from_order(subsets + 1, pairs, std::move(names));
    return b;
  }
};

/// The dual isomorphism B(m,n) -> dual(B(n,m)): complement the atom set with
/// a-atoms and b-atoms exchanged; the a-join and the doubled point swap
/// roles.
struct BmnDualIso {
  BmnLattice from, to;
  FiniteLattice to_dualized;
  std::vector<Elt> image;

  LatticeMap lattice_map() const {
    LatticeMap f;
    f.source = &from.lattice;
    f.target = &to_dualized;
    f.image = image;
    return f;
  }
};

inline BmnDualIso bmn_dual_iso(unsigned m, unsigned n) {
  BmnDualIso d;
  d.from = BmnLattice::build(m, n);
  d.to = BmnLattice::build(n, m);
  d.to_dualized = d.to.lattice.dual();
  d.image.resize(d.from.lattice.size());

  // Atom relabeling: a_i of B(m,n) pairs with b_i of B(n,m) and vice versa.
  auto relabel = [&](std::uint32_t z) {
    std::uint32_t out = 0;
    for (unsigned i = 1; i <= m; ++i)
      if (z >> (i - 1) & 1) out |= std::uint32_t{1} << (n + i - 1);
    for (unsigned j = 1; j <= n; ++j)
      if (z >> (m + j - 1) & 1) out |= std::uint32_t{1} << (j - 1);
    return out;
  };
  const std::uint32_t all = (std::uint32_t{1} << (m + n)) - 1;
  for (std::uint32_t z = 0; z <= all; ++z) {
    if (z == d.from.a_mask())
      d.image[z] = d.to.p_id();
    else
      d.image[z] = d.to.subset_id(relabel(all & ~z));
  }
  d.image[d.from.p_id()] = d.to.subset_id(relabel(all & ~d.from.a_mask()));
  return d;
}

struct BmnStructureReport {
  bool bounded = false;
  bool semidistributive = false;
  bool subdirectly_irreducible = false;
  bool ji_as_expected = false;
  std::vector<std::vector<Elt>> p_min_covers;
};

inline BmnStructureReport bmn_structure_report(const BmnLattice& b) {
  BmnStructureReport r;
  r.bounded = b.lattice.is_bounded();
  r.semidistributive = b.lattice.is_semidistributive();
  r.subdirectly_irreducible = is_subdirectly_irreducible(b.lattice);
  auto ji = b.lattice.ji();
  auto expect = b.ji_expected();
  std::sort(expect.begin(), expect.end());
  r.ji_as_expected = (ji == expect);
  r.p_min_covers = b.lattice.minimal_join_covers(b.p_id());
  return r;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_BMN_HPP_
