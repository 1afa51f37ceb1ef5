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

#ifndef INCLUDE_LATTICEFORGE_LATTICE_HPP_
#define INCLUDE_LATTICEFORGE_LATTICE_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/bits.hpp"
#include "latticeforge/errors.hpp"

namespace latticeforge {

using Elt = std::uint32_t;

/// Hard cap on explicitly tabulated lattices.  Large combinatorial families
/// (Cambrian lattices past n = 8, permutohedra past n = 7) are traversed
/// through their element-level algebra instead of being materialized.
inline constexpr std::size_t kMaxDenseElements = 8192;

/// Meet/join tables are only cached when they fit comfortably in cache;
/// larger lattices compute glb/lub on demand from the order bitsets.
inline constexpr std::size_t kTableCacheLimit = 512;

/// An explicit finite lattice.  Immutable after construction; construction
/// verifies that every pair of elements has a unique glb and lub.  Element
/// ids are assigned in construction order and never renumbered; internally
/// the order is stored as down-/up-sets indexed by topological rank.
class FiniteLattice {
 public:
  /// Inert empty placeholder; every usable instance comes from from_order.
  FiniteLattice() = default;

  /// Builds the lattice from any relation whose reflexive-transitive closure
  /// is the intended order.  Cover pairs are enough.
  static FiniteLattice from_order(std::size_t size,
                                  const std::vector<std::pair<Elt, Elt>>& leq_pairs,
                                  std::vector<std::string> names = {}) {
    if (size == 0) throw BadParams("lattice must have at least one element");
    if (size > kMaxDenseElements)
      throw SizeLimit("lattice too large to tabulate: " + std::to_string(size));
    FiniteLattice L;
    L.n_ = size;
    L.names_ = std::move(names);
    if (!L.names_.empty() && L.names_.size() != size)
      throw BadParams("names must be empty or match the element count");

    // Successor adjacency from the raw pairs (self-loops dropped).
    std::vector<std::vector<Elt>> succ(size), pred(size);
    for (auto [x, y] : leq_pairs) {
      if (x >= size || y >= size) throw BadParams("element id out of range");
      if (x == y) continue;
      succ[x].push_back(y);
      pred[y].push_back(x);
    }

    // Kahn topological sort, smallest id first for determinism.  A cycle
    // means the input violates antisymmetry.
    std::vector<std::size_t> indeg(size, 0);
    for (Elt v = 0; v < size; ++v) {
      std::sort(pred[v].begin(), pred[v].end());
      pred[v].erase(std::unique(pred[v].begin(), pred[v].end()), pred[v].end());
      indeg[v] = pred[v].size();
    }
    for (Elt v = 0; v < size; ++v) {
      std::sort(succ[v].begin(), succ[v].end());
      succ[v].erase(std::unique(succ[v].begin(), succ[v].end()), succ[v].end());
    }
    std::vector<Elt> ready;
    for (Elt v = 0; v < size; ++v)
      if (indeg[v] == 0) ready.push_back(v);
    L.id_at_rank_.reserve(size);
    L.rank_of_.assign(size, 0);
    std::size_t head = 0;
    while (head < ready.size()) {
      // Keep the frontier sorted so rank assignment is reproducible.
      std::sort(ready.begin() + static_cast<std::ptrdiff_t>(head), ready.end());
      Elt v = ready[head++];
      L.rank_of_[v] = L.id_at_rank_.size();
      L.id_at_rank_.push_back(v);
      for (Elt w : succ[v])
        if (--indeg[w] == 0) ready.push_back(w);
    }
    if (L.id_at_rank_.size() != size)
      throw NotAPoset("order relation has a cycle (antisymmetry fails)");

    // Down-sets accumulated along the topological order.
    L.down_.assign(size, Bits(size));
    for (Elt v : L.id_at_rank_) {
      L.down_[v].set(L.rank_of_[v]);
      for (Elt u : pred[v]) L.down_[v] |= L.down_[u];
    }
    L.up_.assign(size, Bits(size));
    for (Elt v = 0; v < size; ++v) {
      const Elt vr = static_cast<Elt>(L.rank_of_[v]);
      L.down_[v].for_each([&](std::size_t r) {
        L.up_[L.id_at_rank_[r]].set(vr);
      });
    }

    L.validate_lattice();
    L.compute_covers();
    L.compute_irreducibles();
    if (size <= kTableCacheLimit) L.build_tables();
    return L;
  }

  std::size_t size() const { return n_; }

  bool leq(Elt x, Elt y) const { return down_[y].test(rank_of_[x]); }
  bool lt(Elt x, Elt y) const { return x != y && leq(x, y); }

  Elt bottom() const { return bottom_; }
  Elt top() const { return top_; }

  Elt meet(Elt x, Elt y) const {
    if (!meet_tab_.empty()) return meet_tab_[x * n_ + y];
    Bits common = down_[x] & down_[y];
    return id_at_rank_[static_cast<std::size_t>(common.highest())];
  }

  Elt join(Elt x, Elt y) const {
    if (!join_tab_.empty()) return join_tab_[x * n_ + y];
    Bits common = up_[x] & up_[y];
    return id_at_rank_[static_cast<std::size_t>(common.lowest())];
  }

  const std::vector<Elt>& lower_covers(Elt x) const { return lower_covers_[x]; }
  const std::vector<Elt>& upper_covers(Elt x) const { return upper_covers_[x]; }

  /// Join-irreducible element ids, ascending.
  const std::vector<Elt>& ji() const { return ji_; }
  /// Meet-irreducible element ids, ascending.
  const std::vector<Elt>& mi() const { return mi_; }

  bool is_ji(Elt x) const { return lower_covers_[x].size() == 1; }
  bool is_mi(Elt x) const { return upper_covers_[x].size() == 1; }

  /// The unique lower cover p_* of a join-irreducible element.
  Elt ji_lower_cover(Elt p) const {
    if (!is_ji(p)) throw NotJoinIrreducible("element " + std::to_string(p) + " is not join-irreducible");
    return lower_covers_[p][0];
  }

  /// The unique upper cover u^* of a meet-irreducible element.
  Elt mi_upper_cover(Elt u) const {
    if (!is_mi(u)) throw NotJoinIrreducible("element " + std::to_string(u) + " is not meet-irreducible");
    return upper_covers_[u][0];
  }

  // Arrow relations.  x up-arrow y needs y meet-irreducible; y down-arrow x
  // needs x join-irreducible.
  bool up_arrow(Elt x, Elt y) const {
    return is_mi(y) && !leq(x, y) && leq(x, mi_upper_cover(y));
  }
  bool down_arrow(Elt y, Elt x) const {
    return is_ji(x) && !leq(x, y) && leq(ji_lower_cover(x), y);
  }

  std::vector<std::pair<Elt, Elt>> up_arrows() const {
    std::vector<std::pair<Elt, Elt>> r;
    for (Elt x = 0; x < n_; ++x)
      for (Elt y : mi_)
        if (up_arrow(x, y)) r.emplace_back(x, y);
    return r;
  }

  std::vector<std::pair<Elt, Elt>> down_arrows() const {
    std::vector<std::pair<Elt, Elt>> r;
    for (Elt y = 0; y < n_; ++y)
      for (Elt x : ji_)
        if (down_arrow(y, x)) r.emplace_back(y, x);
    return r;
  }

  /// kappa(p): the largest u with u down-arrow p, when it exists.
  std::optional<Elt> kappa(Elt p) const {
    Elt ps = ji_lower_cover(p);  // throws if p not Ji
    Bits cand = up_[ps];
    cand.and_not(up_[p]);
    int hi = cand.highest();
    if (hi < 0) return std::nullopt;
    // cand is nonempty: the top candidate in topological order is maximal;
    // it is the maximum iff it dominates every other candidate.
    Elt z = id_at_rank_[static_cast<std::size_t>(hi)];
    if (!cand.is_subset_of(down_[z])) return std::nullopt;
    return z;
  }

  /// Join-dependency a D q, computed from the definition: q join-irreducible,
  /// a != q, and some x has a <= q v x but a not<= q_* v x.
  bool join_dependency(Elt a, Elt q) const {
    if (!is_ji(q) || a == q) return false;
    Elt qs = ji_lower_cover(q);
    for (Elt x = 0; x < n_; ++x)
      if (leq(a, join(q, x)) && !leq(a, join(qs, x))) return true;
    return false;
  }

  /// The full D relation on L x Ji(L).
  std::vector<std::pair<Elt, Elt>> join_dependency_relation() const {
    std::vector<std::pair<Elt, Elt>> r;
    for (Elt a = 0; a < n_; ++a)
      for (Elt q : ji_)
        if (join_dependency(a, q)) r.emplace_back(a, q);
    return r;
  }

  /// Secondary route: p D q on Ji x Ji iff p up-arrow u down-arrow q for some
  /// meet-irreducible u.
  std::vector<std::pair<Elt, Elt>> join_dependency_ji_via_arrows() const {
    std::vector<std::pair<Elt, Elt>> r;
    for (Elt p : ji_)
      for (Elt q : ji_) {
        if (p == q) continue;
        for (Elt u : mi_)
          if (up_arrow(p, u) && down_arrow(u, q)) {
            r.emplace_back(p, q);
            break;
          }
      }
    return r;
  }

  /// All minimal nontrivial join-covers of a: antichains C of join-irreducible
  /// elements with a <= vC, a below no single member, and minimal under
  /// refinement.  Exponential in the candidate pool, guarded.
  std::vector<std::vector<Elt>> minimal_join_covers(Elt a) const {
    std::vector<Elt> pool;
    for (Elt q : ji_)
      if (!leq(a, q)) pool.push_back(q);
    if (pool.size() > 24)
      throw BudgetExceeded("join-cover pool too large: " + std::to_string(pool.size()));

    // Enumerate antichain subsets of the pool that cover a and cannot drop
    // any member.
    std::vector<std::vector<Elt>> cands;
    std::vector<Elt> cur;
    auto covers_a = [&](const std::vector<Elt>& c) {
      Elt v = bottom_;
      for (Elt q : c) v = join(v, q);
      return leq(a, v);
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (covers_a(cur)) {
        if (cur.size() >= 2) {
          bool irredundant = true;
          for (std::size_t k = 0; k < cur.size() && irredundant; ++k) {
            std::vector<Elt> less;
            for (std::size_t l = 0; l < cur.size(); ++l)
              if (l != k) less.push_back(cur[l]);
            if (covers_a(less)) irredundant = false;
          }
          if (irredundant) cands.push_back(cur);
        }
        return;  // supersets cannot be irredundant
      }
      if (i == pool.size()) return;
      for (std::size_t k = i; k < pool.size(); ++k) {
        Elt q = pool[k];
        bool anti = true;
        for (Elt c : cur)
          if (leq(c, q) || leq(q, c)) {
            anti = false;
            break;
          }
        if (!anti) continue;
        cur.push_back(q);
        self(self, k + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);

    // Keep C only if every refining candidate contains it.
    auto refines = [&](const std::vector<Elt>& d, const std::vector<Elt>& c) {
      for (Elt x : d) {
        bool below = false;
        for (Elt y : c)
          if (leq(x, y)) {
            below = true;
            break;
          }
        if (!below) return false;
      }
      return true;
    };
    std::vector<std::vector<Elt>> out;
    for (const auto& c : cands) {
      bool minimal = true;
      for (const auto& e : cands) {
        if (&e == &c) continue;
        if (refines(e, c) && !std::includes(e.begin(), e.end(), c.begin(), c.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_join_semidistributive() const {
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = 0; y < n_; ++y)
        for (Elt z = 0; z < n_; ++z)
          if (join(x, y) == join(x, z) &&
              join(x, y) != join(x, meet(y, z)))
            return false;
    return true;
  }

  bool is_meet_semidistributive() const {
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = 0; y < n_; ++y)
        for (Elt z = 0; z < n_; ++z)
          if (meet(x, y) == meet(x, z) &&
              meet(x, y) != meet(x, join(y, z)))
            return false;
    return true;
  }

  bool is_semidistributive() const {
    return is_join_semidistributive() && is_meet_semidistributive();
  }

  /// Bounded iff the join-dependency relation is cycle-free on the
  /// join-irreducibles of both the lattice and its dual.
  bool is_bounded() const {
    return d_acyclic_on_ji() && dual().d_acyclic_on_ji();
  }

  FiniteLattice dual() const {
    std::vector<std::pair<Elt, Elt>> pairs;
    for (Elt x = 0; x < n_; ++x)
      for (Elt y : upper_covers_[x]) pairs.emplace_back(y, x);
    return from_order(n_, pairs, names_);
  }

  const std::string& name(Elt x) const {
    static const std::string empty;
    return names_.empty() ? empty : names_[x];
  }
  const std::vector<std::string>& names() const { return names_; }

  /// Down-set of x as element ids.
  std::vector<Elt> down_set(Elt x) const {
    std::vector<Elt> r;
    down_[x].for_each([&](std::size_t rk) { r.push_back(id_at_rank_[rk]); });
    std::sort(r.begin(), r.end());
    return r;
  }

  /// Height = length of a longest chain from bottom to x.
  std::size_t height(Elt x) const {
    std::vector<std::size_t> h(n_, 0);
    for (Elt v : id_at_rank_) {
      for (Elt u : lower_covers_[v]) h[v] = std::max(h[v], h[u] + 1);
    }
    return h[x];
  }

  const std::vector<Elt>& topological_order() const { return id_at_rank_; }

 private:
  void validate_lattice() {
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = x + 1; y < n_; ++y) {
        Bits lo = down_[x] & down_[y];
        int hi = lo.highest();
        if (hi < 0)
          throw NotALattice("elements have no common lower bound", x, y);
        if (!lo.is_subset_of(down_[id_at_rank_[static_cast<std::size_t>(hi)]]))
          throw NotALattice("elements have no unique meet", x, y);
        Bits upb = up_[x] & up_[y];
        int lo2 = upb.lowest();
        if (lo2 < 0)
          throw NotALattice("elements have no common upper bound", x, y);
        if (!upb.is_subset_of(up_[id_at_rank_[static_cast<std::size_t>(lo2)]]))
          throw NotALattice("elements have no unique join", x, y);
      }
    bottom_ = id_at_rank_[0];
    top_ = id_at_rank_[n_ - 1];
  }

  void compute_covers() {
    lower_covers_.assign(n_, {});
    upper_covers_.assign(n_, {});
    for (Elt x = 0; x < n_; ++x) {
      Bits strict = down_[x];
      strict.reset(rank_of_[x]);
      strict.for_each([&](std::size_t rk) {
        Elt y = id_at_rank_[rk];
        // y is a lower cover of x iff nothing strictly between them.
        Bits between = up_[y] & down_[x];
        if (between.count() == 2) {
          lower_covers_[x].push_back(y);
          upper_covers_[y].push_back(x);
        }
      });
    }
    for (Elt x = 0; x < n_; ++x) {
      std::sort(lower_covers_[x].begin(), lower_covers_[x].end());
      std::sort(upper_covers_[x].begin(), upper_covers_[x].end());
    }
  }

  void compute_irreducibles() {
    for (Elt x = 0; x < n_; ++x) {
      if (lower_covers_[x].size() == 1) ji_.push_back(x);
      if (upper_covers_[x].size() == 1) mi_.push_back(x);
    }
  }

  void build_tables() {
    meet_tab_.assign(n_ * n_, 0);
    join_tab_.assign(n_ * n_, 0);
    for (Elt x = 0; x < n_; ++x)
      for (Elt y = 0; y < n_; ++y) {
        Bits lo = down_[x] & down_[y];
        meet_tab_[x * n_ + y] = id_at_rank_[static_cast<std::size_t>(lo.highest())];
        Bits hi = up_[x] & up_[y];
        join_tab_[x * n_ + y] = id_at_rank_[static_cast<std::size_t>(hi.lowest())];
      }
  }

  bool d_acyclic_on_ji() const {
    // DFS 3-coloring on the D digraph restricted to Ji(L).
    std::vector<std::vector<Elt>> adj(n_);
    for (Elt p : ji_)
      for (Elt q : ji_)
        if (join_dependency(p, q)) adj[p].push_back(q);
    std::vector<int> color(n_, 0);
    for (Elt s : ji_) {
      if (color[s]) continue;
      std::vector<std::pair<Elt, std::size_t>> stack{{s, 0}};
      color[s] = 1;
      while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < adj[v].size()) {
          Elt w = adj[v][i++];
          if (color[w] == 1) return false;
          if (color[w] == 0) {
            color[w] = 1;
            stack.emplace_back(w, 0);
          }
        } else {
          color[v] = 2;
          stack.pop_back();
        }
      }
    }
    return true;
  }

  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<Elt> id_at_rank_;
  std::vector<std::size_t> rank_of_;
  std::vector<Bits> down_, up_;  // indexed by id, bits indexed by rank
  std::vector<std::vector<Elt>> lower_covers_, upper_covers_;
  std::vector<Elt> ji_, mi_;
  Elt bottom_ = 0, top_ = 0;
  std::vector<Elt> meet_tab_, join_tab_;
};

/// Componentwise-order product.
inline FiniteLattice product(const FiniteLattice& a, const FiniteLattice& b) {
  const std::size_t nb = b.size();
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt i = 0; i < a.size(); ++i)
    for (Elt j = 0; j < nb; ++j) {
      for (Elt i2 : a.upper_covers(i))
        pairs.emplace_back(static_cast<Elt>(i * nb + j), static_cast<Elt>(i2 * nb + j));
      for (Elt j2 : b.upper_covers(j))
        pairs.emplace_back(static_cast<Elt>(i * nb + j), static_cast<Elt>(i * nb + j2));
    }
  std::vector<std::string> names;
  if (!a.names().empty() && !b.names().empty()) {
    names.reserve(a.size() * nb);
    for (Elt i = 0; i < a.size(); ++i)
      for (Elt j = 0; j < nb; ++j)
        names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  }
  return FiniteLattice::from_order(a.size() * nb, pairs, std::move(names));
}

/// Least subset of L containing the seed and closed under meet and join.
inline std::vector<Elt> sublattice_closure(const FiniteLattice& L,
                                           std::vector<Elt> seed) {
  std::vector<bool> in(L.size(), false);
  std::vector<Elt> members;
  std::vector<Elt> work;
  auto push = [&](Elt x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
      work.push_back(x);
    }
  };
  for (Elt s : seed) push(s);
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    // Snapshot: new members get their own turn from the worklist.
    std::vector<Elt> snapshot = members;
    for (Elt y : snapshot) {
      push(L.meet(x, y));
      push(L.join(x, y));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

/// A total map between two lattices, the carrier for embeddings,
/// retractions, and isomorphisms.
struct LatticeMap {
  const FiniteLattice* source = nullptr;
  const FiniteLattice* target = nullptr;
  std::vector<Elt> image;

  Elt operator()(Elt x) const { return image[x]; }
};

/// True iff the map is injective and preserves both meet and join.
inline bool verify_embedding(const LatticeMap& f) {
  const FiniteLattice& K = *f.source;
  const FiniteLattice& L = *f.target;
  if (f.image.size() != K.size()) return false;
  for (Elt x = 0; x < K.size(); ++x)
    for (Elt y = x + 1; y < K.size(); ++y)
      if (f.image[x] == f.image[y]) return false;
  for (Elt x = 0; x < K.size(); ++x)
    for (Elt y = 0; y < K.size(); ++y) {
      if (f.image[K.meet(x, y)] != L.meet(f.image[x], f.image[y])) return false;
      if (f.image[K.join(x, y)] != L.join(f.image[x], f.image[y])) return false;
    }
  return true;
}

/// Composition g after f.
inline LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  LatticeMap h;
  h.source = f.source;
  h.target = g.target;
  h.image.reserve(f.image.size());
  for (Elt y : f.image) h.image.push_back(g.image[y]);
  return h;
}

/// K (given as element ids of L) join-fits within L when K is a
/// (v,0,1)-subsemilattice and every join-dependency of a Ji(K) element leads
/// back into K.
inline bool join_fits(const FiniteLattice& L, const std::vector<Elt>& k_elements) {
  std::vector<bool> in_k(L.size(), false);
  for (Elt x : k_elements) in_k[x] = true;
  if (!in_k[L.bottom()] || !in_k[L.top()])
    throw NotSubsemilattice("subset does not contain 0 and 1");
  for (Elt x : k_elements)
    for (Elt y : k_elements)
      if (!in_k[L.join(x, y)])
        throw NotSubsemilattice("subset not closed under join");

  // Build K as a lattice in its own right to find Ji(K).
  std::vector<Elt> sorted = k_elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Elt> local(L.size(), 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) local[sorted[i]] = static_cast<Elt>(i);
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt x : sorted)
    for (Elt y : sorted)
      if (L.leq(x, y)) pairs.emplace_back(local[x], local[y]);
  FiniteLattice K = FiniteLattice::from_order(sorted.size(), pairs);

  for (Elt pk : K.ji()) {
    Elt p = sorted[pk];
    for (Elt q : L.ji())
      if (L.join_dependency(p, q) && !in_k[q]) return false;
  }
  return true;
}

// Small named lattices used throughout the test batteries.

inline FiniteLattice make_chain(std::size_t k) {
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt i = 0; i + 1 < k; ++i) pairs.emplace_back(i, i + 1);
  return FiniteLattice::from_order(k, pairs);
}

inline FiniteLattice make_boolean(unsigned k) {
  if (k > 12) throw SizeLimit("boolean lattice exponent too large");
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::pair<Elt, Elt>> pairs;
  for (Elt s = 0; s < n; ++s)
    for (unsigned b = 0; b < k; ++b)
      if (!(s >> b & 1)) pairs.emplace_back(s, s | (Elt{1} << b));
  return FiniteLattice::from_order(n, pairs);
}

/// N5: 0 < a < b < 1 and 0 < c < 1, ids (0,a,b,c,1) = (0,1,2,3,4).
inline FiniteLattice make_n5() {
  return FiniteLattice::from_order(
      5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}},
      {"0", "a", "b", "c", "1"});
}

/// M3: three atoms x,y,z between 0 and 1, ids (0,x,y,z,1) = (0,1,2,3,4).
inline FiniteLattice make_m3() {
  return FiniteLattice::from_order(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
      {"0", "x", "y", "z", "1"});
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_LATTICE_HPP_
