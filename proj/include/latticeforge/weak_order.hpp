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

#ifndef INCLUDE_LATTICEFORGE_WEAK_ORDER_HPP_
#define INCLUDE_LATTICEFORGE_WEAK_ORDER_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "latticeforge/lattice.hpp"
#include "latticeforge/pairset.hpp"

namespace latticeforge {

/// Index sets over [n] as masks: bit k-1 stands for k.
using IndexSet = std::uint64_t;

inline bool iset_has(IndexSet u, int k) { return (u >> (k - 1)) & 1; }
inline IndexSet iset_single(int k) { return IndexSet{1} << (k - 1); }
inline IndexSet iset_range(int lo, int hi) {  // [lo, hi], empty when lo > hi
  if (lo > hi) return 0;
  IndexSet top = (hi >= 64) ? ~IndexSet{0} : ((IndexSet{1} << hi) - 1);
  return top & ~((IndexSet{1} << (lo - 1)) - 1);
}

inline std::string iset_to_string(IndexSet u) {
  std::string s = "{";
  bool first = true;
  for (int k = 1; k <= 64; ++k)
    if (iset_has(u, k)) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(k);
    }
  return s + "}";
}

/// A triple (a,b,U) indexing a join-irreducible of the permutohedron:
/// (a,b) in J_n, U inside [a,b] with a excluded and b included.
struct JiTriple {
  int a = 0;
  int b = 0;
  IndexSet u = 0;

  bool operator==(const JiTriple& o) const {
    return a == o.a && b == o.b && u == o.u;
  }
  bool operator<(const JiTriple& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return u < o.u;
  }
};

inline bool in_Fn(const JiTriple& t, unsigned n) {
  if (!PairSet::valid_pair(n, t.a, t.b)) return false;
  if (t.u & ~iset_range(t.a, t.b)) return false;
  return !iset_has(t.u, t.a) && iset_has(t.u, t.b);
}

inline void require_Fn(const JiTriple& t, unsigned n) {
  if (!in_Fn(t, n))
    throw NotInFn("triple (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                  "," + iset_to_string(t.u) + ") is not in F_n");
}

/// The element <a,b;U> = J_n  ∩ (([a,b] \ U) x U).
inline PairSet triple_set(const JiTriple& t, unsigned n) {
  require_Fn(t, n);
  PairSet r(n);
  for (int i = t.a; i <= t.b; ++i) {
    if (iset_has(t.u, i)) continue;
    for (int j = i + 1; j <= t.b; ++j)
      if (iset_has(t.u, j)) r.add(i, j);
  }
  return r;
}

/// All of F_n, ordered by (a, b, U).  Count = sum over d of (n-d) 2^{d-1}.
inline std::vector<JiTriple> enumerate_F(unsigned n) {
  std::vector<JiTriple> out;
  for (int a = 1; a <= static_cast<int>(n); ++a)
    for (int b = a + 1; b <= static_cast<int>(n); ++b) {
      IndexSet interior = iset_range(a + 1, b - 1);
      // Iterate the subsets of the open interval, adding b each time.
      IndexSet s = 0;
      while (true) {
        out.push_back({a, b, s | iset_single(b)});
        if (s == interior) break;
        s = (s - interior) & interior;  // next subset
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// <a,b;U>_* = <a,b;U> minus the pair (a,b): the unique lower cover in P(n).
inline PairSet lower_cover_formula(const JiTriple& t, unsigned n) {
  PairSet r = triple_set(t, n);
  r.remove(t.a, t.b);
  return r;
}

/// U restricted to [i,j]: members of U strictly inside, plus j.  The left
/// endpoint never enters, keeping the result in F_n.
inline IndexSet restrict_interval(IndexSet u, int i, int j) {
  return (u & iset_range(i + 1, j - 1)) | iset_single(j);
}

/// kappa(<a,b;U>) = complement of <a,b;U~> where U~ flips the interior of U
/// and keeps b.
inline PairSet kappa_formula(const JiTriple& t, unsigned n) {
  require_Fn(t, n);
  IndexSet flipped = (iset_range(t.a + 1, t.b - 1) & ~t.u) | iset_single(t.b);
  return triple_set({t.a, t.b, flipped}, n).complement();
}

/// Join-dependency between two join-irreducibles of P(n): strict interval
/// containment with matching restricted polarity.
inline bool d_formula(const JiTriple& s, const JiTriple& t) {
  bool contained = s.a <= t.a && t.b <= s.b;
  bool strict = contained && (t.a != s.a || t.b != s.b);
  return strict && t.u == restrict_interval(s.u, t.a, t.b);
}

/// Nontrivial minimal join-covers of <a,b;U>: one cover per subdivision
/// a = z_0 < ... < z_k = b with k >= 2, the pieces carrying the restricted
/// polarity.
inline std::vector<std::vector<JiTriple>> min_covers_formula(const JiTriple& t,
                                                             unsigned n) {
  require_Fn(t, n);
  std::vector<std::vector<JiTriple>> out;
  IndexSet interior = iset_range(t.a + 1, t.b - 1);
  if (!interior) return out;
  // Iterate nonempty subsets of the open interval as interior cut points.
  IndexSet s = 0;
  while (true) {
    s = (s - interior) & interior;
    if (s == 0) break;
    std::vector<int> cuts{t.a};
    for (int k = t.a + 1; k < t.b; ++k)
      if (iset_has(s, k)) cuts.push_back(k);
    cuts.push_back(t.b);
    std::vector<JiTriple> cover;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      cover.push_back({cuts[i], cuts[i + 1],
                       restrict_interval(t.u, cuts[i], cuts[i + 1])});
    out.push_back(std::move(cover));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x < y; });
  return out;
}

inline std::uint64_t factorial(unsigned n) {
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

/// The permutohedron P(n) as an element list: all clopen subsets of J_n in
/// canonical order, enumerated through the permutations.  The element-level
/// algebra (meet/join via interior/closure) works without tabulating the
/// order; to_lattice() materializes the generic engine when feasible.
struct Permutohedron {
  unsigned n = 0;
  std::vector<PairSet> elements;
  std::unordered_map<PairSet, Elt, PairSetHash> index;

  static Permutohedron build(unsigned n) {
    if (n < 1 || n > 8) throw SizeLimit("permutohedron build supports 1 <= n <= 8");
    Permutohedron p;
    p.n = n;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      p.elements.push_back(inversions(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::sort(p.elements.begin(), p.elements.end(), PairSet::canonical_less);
    for (Elt i = 0; i < p.elements.size(); ++i) p.index[p.elements[i]] = i;
    return p;
  }

  std::size_t size() const { return elements.size(); }

  Elt id_of(const PairSet& x) const {
    auto it = index.find(x);
    if (it == index.end()) throw BadParams("pair set is not an element");
    return it->second;
  }

  PairSet meet(const PairSet& x, const PairSet& y) const {
    return (x & y).interior();
  }
  PairSet join(const PairSet& x, const PairSet& y) const {
    return (x | y).closure();
  }

  FiniteLattice to_lattice() const {
    if (elements.size() > kMaxDenseElements)
      throw SizeLimit("permutohedron too large to tabulate");
    std::vector<std::pair<Elt, Elt>> pairs;
    std::vector<std::string> names;
    names.reserve(elements.size());
    for (Elt i = 0; i < elements.size(); ++i) {
      names.push_back(permutation_word(permutation_of(elements[i])));
      for (Elt j = 0; j < elements.size(); ++j)
        if (i != j && elements[i].subset_of(elements[j])) pairs.emplace_back(i, j);
    }
    return FiniteLattice::from_order(elements.size(), pairs, std::move(names));
  }
};

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_WEAK_ORDER_HPP_
