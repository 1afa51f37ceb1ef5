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

#ifndef INCLUDE_LATTICEFORGE_CONGRUENCE_HPP_
#define INCLUDE_LATTICEFORGE_CONGRUENCE_HPP_

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"

namespace latticeforge {

/// A partition of the element ids of a lattice.  Block ids are normalized to
/// first-occurrence order, so equal partitions compare equal directly.
struct Congruence {
  std::vector<Elt> block_of;
  std::size_t block_count = 0;

  bool same(Elt x, Elt y) const { return block_of[x] == block_of[y]; }

  bool operator==(const Congruence& o) const { return block_of == o.block_of; }

  /// Refinement order: *this <= o iff every block of *this lies inside a
  /// block of o.
  bool finer_or_equal(const Congruence& o) const {
    std::vector<int> img(block_count, -1);
    for (std::size_t x = 0; x < block_of.size(); ++x) {
      int& slot = img[block_of[x]];
      if (slot < 0)
        slot = static_cast<int>(o.block_of[x]);
      else if (slot != static_cast<int>(o.block_of[x]))
        return false;
    }
    return true;
  }

  bool is_identity() const { return block_count == block_of.size(); }
  bool is_all() const { return block_count == 1; }

  static Congruence normalize(std::vector<Elt> raw_block_of) {
    Congruence c;
    c.block_of.assign(raw_block_of.size(), 0);
    std::vector<int> remap(raw_block_of.size(), -1);
    Elt next = 0;
    for (std::size_t x = 0; x < raw_block_of.size(); ++x) {
      int& r = remap[raw_block_of[x]];
      if (r < 0) r = static_cast<int>(next++);
      c.block_of[x] = static_cast<Elt>(r);
    }
    c.block_count = next;
    return c;
  }
};

inline Congruence identity_congruence(const FiniteLattice& L) {
  std::vector<Elt> b(L.size());
  std::iota(b.begin(), b.end(), 0);
  return Congruence::normalize(std::move(b));
}

inline Congruence all_congruence(const FiniteLattice& L) {
  return Congruence::normalize(std::vector<Elt>(L.size(), 0));
}

/// Compatibility check: x ~ y forces x^z ~ y^z and xvz ~ yvz for all z.
inline bool is_congruence(const FiniteLattice& L, const Congruence& c) {
  if (c.block_of.size() != L.size()) return false;
  for (Elt x = 0; x < L.size(); ++x)
    for (Elt y = x + 1; y < L.size(); ++y) {
      if (!c.same(x, y)) continue;
      for (Elt z = 0; z < L.size(); ++z) {
        if (!c.same(L.meet(x, z), L.meet(y, z))) return false;
        if (!c.same(L.join(x, z), L.join(y, z))) return false;
      }
    }
  return true;
}

/// Least congruence identifying every given pair.  Seeds a union-find with
/// the pairs, then repeatedly merges blocks that violate compatibility until
/// a fixpoint is reached.
inline Congruence congruence_generated(const FiniteLattice& L,
                                       const std::vector<std::pair<Elt, Elt>>& pairs) {
  const std::size_t n = L.size();
  std::vector<Elt> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Elt x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::pair<Elt, Elt>> work;
  auto unite = [&](Elt x, Elt y) {
    Elt rx = find(x), ry = find(y);
    if (rx == ry) return;
    if (rx > ry) std::swap(rx, ry);
    parent[ry] = rx;
    work.emplace_back(x, y);
  };
  for (auto [x, y] : pairs) unite(x, y);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (Elt z = 0; z < n; ++z) {
      unite(L.meet(x, z), L.meet(y, z));
      unite(L.join(x, z), L.join(y, z));
    }
  }
  std::vector<Elt> block(n);
  for (Elt x = 0; x < n; ++x) block[x] = find(x);
  return Congruence::normalize(std::move(block));
}

/// Theta(p): least congruence collapsing the prime quotient [p_*, p].
inline Congruence theta(const FiniteLattice& L, Elt p) {
  return congruence_generated(L, {{p, L.ji_lower_cover(p)}});
}

/// Psi(p): the largest congruence not collapsing [p_*, p].  The congruence
/// lattice of a lattice is distributive and its join-irreducible members are
/// the Theta(q), so Psi(p) is the join of every Theta(q) avoiding the
/// quotient.  The result is verified not to collapse it.
inline Congruence psi(const FiniteLattice& L, Elt p) {
  Elt ps = L.ji_lower_cover(p);
  std::vector<std::pair<Elt, Elt>> gens;
  for (Elt q : L.ji()) {
    Congruence t = theta(L, q);
    if (!t.same(p, ps)) gens.emplace_back(q, L.ji_lower_cover(q));
  }
  Congruence r = congruence_generated(L, gens);
  if (r.same(p, ps))
    throw Error("psi construction collapsed its own prime quotient");
  return r;
}

/// Lattice of blocks, with the canonical projection.
inline std::pair<FiniteLattice, LatticeMap> quotient(const FiniteLattice& L,
                                                     const Congruence& c) {
  if (!is_congruence(L, c)) throw NotACongruence("partition is not compatible");
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x = 0; x < L.size(); ++x)
    for (Elt y = 0; y < L.size(); ++y)
      if (L.leq(x, y)) pairs.emplace_back(c.block_of[x], c.block_of[y]);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  FiniteLattice Q = FiniteLattice::from_order(c.block_count, pairs);
  LatticeMap proj;
  proj.source = &L;
  proj.target = nullptr;  // caller owns the quotient; fixed up below
  proj.image = c.block_of;
  return {std::move(Q), std::move(proj)};
}

/// True iff the congruence lattice has a least nonzero element, i.e. the set
/// {Theta(p) : p in Ji(L)} has a minimum.
inline bool is_subdirectly_irreducible(const FiniteLattice& L) {
  if (L.size() < 2) throw TrivialLattice("the one-element lattice has no monolith");
  std::vector<Congruence> thetas;
  for (Elt p : L.ji()) thetas.push_back(theta(L, p));
  for (const auto& cand : thetas) {
    bool least = true;
    for (const auto& other : thetas)
      if (!cand.finer_or_equal(other)) {
        least = false;
        break;
      }
    if (least) return true;
  }
  return false;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_CONGRUENCE_HPP_
