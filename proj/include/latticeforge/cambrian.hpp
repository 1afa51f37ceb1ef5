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

#ifndef INCLUDE_LATTICEFORGE_CAMBRIAN_HPP_
#define INCLUDE_LATTICEFORGE_CAMBRIAN_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "latticeforge/congruence.hpp"
#include "latticeforge/isomorphism.hpp"
#include "latticeforge/lattice.hpp"
#include "latticeforge/weak_order.hpp"

namespace latticeforge {

inline std::uint64_t catalan(unsigned n) {
  // C_n = binom(2n, n) / (n+1)
  std::uint64_t c = 1;
  for (unsigned k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

/// Orientation data for a Cambrian lattice: ground size n and U inside [n].
/// Only the interior of U matters, so it is normalized on construction.
struct CambrianSpec {
  unsigned n = 0;
  IndexSet u = 0;  // normalized: subset of {2, ..., n-1}

  static CambrianSpec make(unsigned n, IndexSet u) {
    if (n < 1 || n > 64) throw SizeLimit("cambrian ground size out of range");
    CambrianSpec s;
    s.n = n;
    s.u = u & iset_range(2, static_cast<int>(n) - 1);
    return s;
  }

  static CambrianSpec tamari(unsigned n) {
    return make(n, iset_range(1, static_cast<int>(n)));
  }

  bool operator==(const CambrianSpec& o) const { return n == o.n && u == o.u; }

  std::string to_string() const {
    return "A_" + iset_to_string(u) + "(" + std::to_string(n) + ")";
  }
};

/// Membership in D_U(n): (i,k) forces (i,j) when the middle point j lies in
/// U and (j,k) when it does not.
inline bool in_DU(const CambrianSpec& s, const PairSet& x) {
  for (auto [i, k] : x.pairs())
    for (int j = i + 1; j < k; ++j) {
      if (iset_has(s.u, j)) {
        if (!x.contains(i, j)) return false;
      } else {
        if (!x.contains(j, k)) return false;
      }
    }
  return true;
}

/// Membership in A_U(n): transitive members of D_U(n).
inline bool in_AU(const CambrianSpec& s, const PairSet& x) {
  return x.is_transitive() && in_DU(s, x);
}

/// The join-irreducible <i,j>_U: least element of A_U(n) containing (i,j).
inline PairSet cambrian_ji(const CambrianSpec& s, int i, int j) {
  if (!PairSet::valid_pair(s.n, i, j)) throw BadParams("pair out of range");
  return triple_set({i, j, restrict_interval(s.u, i, j)}, s.n);
}

inline PairSet cambrian_join(const PairSet& x, const PairSet& y) {
  return (x | y).closure();
}

inline PairSet cambrian_meet(const PairSet& x, const PairSet& y) {
  return x & y;
}

/// Lower projection P(n) -> A_U(n): the join of every <i,j>_U below x, which
/// is the largest element of A_U(n) contained in x.
inline PairSet pi_U(const CambrianSpec& s, const PairSet& x) {
  PairSet acc(s.n);
  for (int i = 1; i <= static_cast<int>(s.n); ++i)
    for (int j = i + 1; j <= static_cast<int>(s.n); ++j)
      if (x.contains(i, j)) {
        PairSet g = cambrian_ji(s, i, j);
        if (g.subset_of(x)) acc = acc | g;
      }
  return acc.closure();
}

/// The elements of A_U(n), generated by join-closure from the
/// join-irreducibles.  Joins of D_U members stay in D_U, so no filtering is
/// needed; n is guarded by the Catalan growth.
struct CambrianView {
  CambrianSpec spec;
  std::vector<PairSet> elements;
  std::unordered_map<PairSet, Elt, PairSetHash> index;

  static CambrianView build(const CambrianSpec& s) {
    if (s.n > 14) throw SizeLimit("cambrian build supports n <= 14");
    CambrianView v;
    v.spec = s;
    std::vector<PairSet> gens;
    for (int i = 1; i <= static_cast<int>(s.n); ++i)
      for (int j = i + 1; j <= static_cast<int>(s.n); ++j)
        gens.push_back(cambrian_ji(s, i, j));

    std::unordered_set<PairSet, PairSetHash> seen;
    std::deque<PairSet> queue;
    PairSet bot(s.n);
    seen.insert(bot);
    queue.push_back(bot);
    while (!queue.empty()) {
      PairSet x = queue.front();
      queue.pop_front();
      for (const PairSet& g : gens) {
        PairSet y = cambrian_join(x, g);
        if (seen.insert(y).second) queue.push_back(y);
      }
    }
    v.elements.assign(seen.begin(), seen.end());
    std::sort(v.elements.begin(), v.elements.end(), PairSet::canonical_less);
    for (Elt i = 0; i < v.elements.size(); ++i) v.index[v.elements[i]] = i;
    return v;
  }

  std::size_t size() const { return elements.size(); }

  Elt id_of(const PairSet& x) const {
    auto it = index.find(x);
    if (it == index.end()) throw BadParams("pair set is not an element of " + spec.to_string());
    return it->second;
  }

  FiniteLattice to_lattice() const {
    if (elements.size() > kMaxDenseElements)
      throw SizeLimit("cambrian lattice too large to tabulate");
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

/// All normalized orientations of [n]: the subsets of {2, ..., n-1}.
inline std::vector<CambrianSpec> all_cambrian_specs(unsigned n) {
  std::vector<CambrianSpec> out;
  IndexSet interior = iset_range(2, static_cast<int>(n) - 1);
  IndexSet s = 0;
  while (true) {
    out.push_back(CambrianSpec::make(n, s));
    if (s == interior) break;
    s = (s - interior) & interior;
  }
  return out;
}

/// One factor of the subdirect decomposition of P(n).
struct SubdirectFactor {
  CambrianSpec spec;
  CambrianView view;
  FiniteLattice lattice;
  std::vector<Elt> projection;  // P(n) element id -> factor element id
};

struct SubdirectDecomposition {
  Permutohedron perm;
  FiniteLattice perm_lattice;
  std::vector<SubdirectFactor> factors;

  /// The diagonal map is injective exactly when the factor images separate
  /// the elements of P(n).
  bool diagonal_injective() const {
    std::unordered_set<std::string> seen;
    for (Elt x = 0; x < perm.size(); ++x) {
      std::string key;
      for (const auto& f : factors) {
        key += std::to_string(f.projection[x]);
        key += ',';
      }
      if (!seen.insert(key).second) return false;
    }
    return true;
  }
};

inline SubdirectDecomposition subdirect_decomposition(unsigned n) {
  if (n > 6) throw SizeLimit("subdirect decomposition supports n <= 6");
  SubdirectDecomposition d;
  d.perm = Permutohedron::build(n);
  d.perm_lattice = d.perm.to_lattice();
  for (const CambrianSpec& s : all_cambrian_specs(n)) {
    SubdirectFactor f;
    f.spec = s;
    f.view = CambrianView::build(s);
    f.lattice = f.view.to_lattice();
    f.projection.reserve(d.perm.size());
    for (const PairSet& x : d.perm.elements)
      f.projection.push_back(f.view.id_of(pi_U(s, x)));
    d.factors.push_back(std::move(f));
  }
  return d;
}

/// Kernel of pi_U as a congruence of P(n).
inline Congruence kernel_pi_U(const CambrianSpec& s, const Permutohedron& p) {
  std::vector<Elt> block(p.size());
  std::unordered_map<PairSet, Elt, PairSetHash> rep;
  for (Elt x = 0; x < p.size(); ++x) {
    PairSet im = pi_U(s, p.elements[x]);
    block[x] = rep.try_emplace(im, static_cast<Elt>(rep.size())).first->second;
  }
  return Congruence::normalize(std::move(block));
}

/// The F_n-normalized top triple (1, n, U') of an orientation, the one whose
/// prime quotient the kernel of pi_U avoids.
inline JiTriple top_triple(const CambrianSpec& s) {
  return {1, static_cast<int>(s.n),
          (s.u & iset_range(2, static_cast<int>(s.n) - 1)) | iset_single(static_cast<int>(s.n))};
}

/// Generating pairs of the Cambrian congruence: one prime quotient per
/// Dynkin edge, chosen by the orientation.
inline std::vector<std::pair<Elt, Elt>> cambrian_congruence_pairs(
    const CambrianSpec& s, const Permutohedron& p) {
  std::vector<std::pair<Elt, Elt>> out;
  for (int i = 1; i + 2 <= static_cast<int>(s.n); ++i) {
    PairSet lo(s.n), hi(s.n);
    if (iset_has(s.u, i + 1)) {
      lo.add(i + 1, i + 2);
      hi.add(i + 1, i + 2);
      hi.add(i, i + 2);
    } else {
      lo.add(i, i + 1);
      hi.add(i, i + 1);
      hi.add(i, i + 2);
    }
    out.emplace_back(p.id_of(lo), p.id_of(hi));
  }
  return out;
}

/// Order-reversing bijection A_U(n) -> A_{[n]\U}(n), found by search.
inline LatticeMap cambrian_duality(const CambrianSpec& s,
                                   const FiniteLattice& au,
                                   const FiniteLattice& au_complement) {
  if (au.size() > kTableCacheLimit)
    throw SizeLimit("duality search capped at " + std::to_string(kTableCacheLimit) + " elements");
  auto m = find_dual_isomorphism(au, au_complement);
  if (!m) throw Error("expected dual isomorphism not found for " + s.to_string());
  LatticeMap f;
  f.source = &au;
  f.target = &au_complement;
  f.image = *m;
  return f;
}

// ---------------------------------------------------------------------------
// Bracket functions: the componentwise-ordered model of the Tamari lattice.

using BracketFn = std::vector<int>;  // f[i-1] is f(i), 1-based values

inline bool is_bracket_function(const BracketFn& f) {
  const int n = static_cast<int>(f.size());
  for (int i = 1; i <= n; ++i) {
    if (f[i - 1] < i || f[i - 1] > n) return false;
    for (int j = i; j <= f[i - 1]; ++j)
      if (f[j - 1] > f[i - 1]) return false;
  }
  return true;
}

/// x in A(n) -> bracket function: f(i) = largest j with {i} x ]i,j] inside x.
inline BracketFn to_bracket(const PairSet& x) {
  const int n = static_cast<int>(x.ground());
  if (!in_AU(CambrianSpec::tamari(x.ground()), x))
    throw NotInTamari("pair set is not a Tamari element");
  BracketFn f(n);
  for (int i = 1; i <= n; ++i) {
    int j = i;
    while (j + 1 <= n && x.contains(i, j + 1)) ++j;
    f[i - 1] = j;
  }
  return f;
}

inline PairSet from_bracket(const BracketFn& f) {
  if (!is_bracket_function(f)) throw NotABracketFunction("map violates the bracket conditions");
  const unsigned n = static_cast<unsigned>(f.size());
  PairSet x(n);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= f[i - 1]; ++j) x.add(i, j);
  return x;
}

/// The involutive dual automorphism of the bracket model, using the
/// extension f(0) = n.
inline BracketFn bracket_dual(const BracketFn& f) {
  if (!is_bracket_function(f)) throw NotABracketFunction("map violates the bracket conditions");
  const int n = static_cast<int>(f.size());
  auto fext = [&](int k) { return k == 0 ? n : f[k - 1]; };
  BracketFn g(n);
  for (int i = 1; i <= n; ++i) {
    int val = n;
    for (int j = i; j <= n; ++j)
      if (n - i < fext(n - j)) {
        val = j;
        break;
      }
    g[i - 1] = val;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Distinguished Tamari elements and pair-set-level sublattice generation.

/// The three generators a_n, b_n, c_n of the growing sublattices of A(n).
struct ThreeGenerators {
  PairSet a, b, c;
};

inline ThreeGenerators three_generators(unsigned n) {
  if (n < 2) throw BadParams("three generators need n >= 2");
  CambrianSpec t = CambrianSpec::tamari(n);
  ThreeGenerators g{PairSet(n), PairSet(n), PairSet(n)};
  g.a = cambrian_ji(t, 1, static_cast<int>(n));
  for (int i = 1; i + 1 <= static_cast<int>(n); ++i) {
    if (i % 2 == 0)
      g.b = g.b | cambrian_ji(t, i, i + 1);
    else
      g.c = g.c | cambrian_ji(t, i, i + 1);
  }
  return g;
}

/// Sublattice closure inside A_U(n) computed on pair sets directly
/// (meet = intersection, join = closure of union); never materializes the
/// ambient lattice, so it works far past the tabulation limit.
inline std::vector<PairSet> pairset_sublattice_closure(const CambrianSpec& s,
                                                       std::vector<PairSet> seed,
                                                       std::size_t limit = 1u << 20) {
  for (const PairSet& x : seed)
    if (!in_AU(s, x)) throw BadParams("seed is not an element of " + s.to_string());
  std::unordered_set<PairSet, PairSetHash> in;
  std::vector<PairSet> members;
  std::vector<PairSet> work;
  auto push = [&](const PairSet& x) {
    if (in.insert(x).second) {
      members.push_back(x);
      work.push_back(x);
      if (members.size() > limit) throw BudgetExceeded("sublattice closure exceeded limit");
    }
  };
  for (auto& x : seed) push(x);
  while (!work.empty()) {
    PairSet x = work.back();
    work.pop_back();
    std::vector<PairSet> snapshot = members;
    for (const PairSet& y : snapshot) {
      push(cambrian_meet(x, y));
      push(cambrian_join(x, y));
    }
  }
  std::sort(members.begin(), members.end(), PairSet::canonical_less);
  return members;
}

/// Sizes of the sublattice of A(n) generated by {a_n, b_n, c_n}.
inline std::size_t three_generated_sublattice_size(unsigned n) {
  ThreeGenerators g = three_generators(n);
  return pairset_sublattice_closure(CambrianSpec::tamari(n), {g.a, g.b, g.c}).size();
}

/// The embedding A(m) x A(n) -> A(m+n): (x, y) maps to x together with y
/// shifted up by m.  The lattices live in the struct; call lattice_map() on
/// the final object to obtain a wired-up map.
struct TamariProductEmbedding {
  FiniteLattice left, right, prod, big;
  std::vector<Elt> image;  // product id -> A(m+n) id

  LatticeMap lattice_map() const {
    LatticeMap f;
    f.source = &prod;
    f.target = &big;
    f.image = image;
    return f;
  }
};

inline PairSet shift_pairs(const PairSet& y, unsigned offset, unsigned new_ground) {
  PairSet r(new_ground);
  for (auto [i, j] : y.pairs()) r.add(i + static_cast<int>(offset), j + static_cast<int>(offset));
  return r;
}

inline TamariProductEmbedding tamari_product_embed(unsigned m, unsigned n) {
  if (m < 1 || n < 1 || m + n > 8) throw SizeLimit("product embedding supports m + n <= 8");
  auto vm = CambrianView::build(CambrianSpec::tamari(m));
  auto vn = CambrianView::build(CambrianSpec::tamari(n));
  auto vmn = CambrianView::build(CambrianSpec::tamari(m + n));

  TamariProductEmbedding e;
  e.left = vm.to_lattice();
  e.right = vn.to_lattice();
  e.prod = product(e.left, e.right);
  e.big = vmn.to_lattice();
  e.image.resize(e.prod.size());
  for (Elt i = 0; i < vm.size(); ++i)
    for (Elt j = 0; j < vn.size(); ++j) {
      PairSet im = shift_pairs(vm.elements[i], 0, m + n) |
                   shift_pairs(vn.elements[j], m, m + n);
      e.image[i * vn.size() + j] = vmn.id_of(im);
    }
  return e;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_CAMBRIAN_HPP_
