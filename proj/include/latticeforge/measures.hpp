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

#ifndef INCLUDE_LATTICEFORGE_MEASURES_HPP_
#define INCLUDE_LATTICEFORGE_MEASURES_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/bmn.hpp"
#include "latticeforge/cambrian.hpp"
#include "latticeforge/lattice.hpp"

namespace latticeforge {

/// A map from the strict pairs of a finite chain into a lattice, together
/// with a polarity set U of chain labels.  The convention mu(z,z) = bottom
/// extends it to weak pairs.
struct PolarizedMeasure {
  std::vector<int> chain;  // labels, strictly ascending
  std::vector<int> u_labels;
  const FiniteLattice* target = nullptr;
  std::vector<Elt> values;  // indexed by position pairs, see pair_index

  std::size_t points() const { return chain.size(); }

  static std::size_t pair_index(std::size_t k, std::size_t i, std::size_t j) {
    // positions 0 <= i < j < k, lexicographic
    return i * k - i * (i + 1) / 2 + (j - i - 1);
  }

  Elt at(std::size_t i, std::size_t j) const {
    if (i == j) return target->bottom();
    return values[pair_index(chain.size(), i, j)];
  }
  Elt& slot(std::size_t i, std::size_t j) {
    return values[pair_index(chain.size(), i, j)];
  }

  bool label_in_u(int label) const {
    return std::find(u_labels.begin(), u_labels.end(), label) != u_labels.end();
  }
  bool pos_in_u(std::size_t i) const { return label_in_u(chain[i]); }

  /// The position-level Cambrian orientation this measure targets.
  CambrianSpec position_spec() const {
    IndexSet u = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
      if (pos_in_u(i)) u |= iset_single(static_cast<int>(i + 1));
    return CambrianSpec::make(static_cast<unsigned>(chain.size()), u);
  }
};

struct PolarizationCheck {
  bool ok = true;
  std::size_t x = 0, y = 0, z = 0;  // first violating positions
  int condition = 0;                // 1 triangle, 2 inner-U, 3 inner-not-U

  explicit operator bool() const { return ok; }
};

/// Checks the triangle inequality and the two polarity conditions over all
/// position triples.
inline PolarizationCheck is_polarized(const PolarizedMeasure& m) {
  const FiniteLattice& L = *m.target;
  const std::size_t k = m.points();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y)
      for (std::size_t z = y + 1; z < k; ++z) {
        if (!L.leq(m.at(x, z), L.join(m.at(x, y), m.at(y, z))))
          return {false, x, y, z, 1};
        if (m.pos_in_u(y)) {
          if (!L.leq(m.at(x, y), m.at(x, z))) return {false, x, y, z, 2};
        } else {
          if (!L.leq(m.at(y, z), m.at(x, z))) return {false, x, y, z, 3};
        }
      }
  return {};
}

/// The refinement condition: whenever mu(x,y) <= a v b, some subdivision of
/// [x,y] has every step's measure under a or under b.  Reachability over
/// chain positions, per pair (a,b).
inline bool satisfies_V(const PolarizedMeasure& m) {
  const FiniteLattice& L = *m.target;
  const std::size_t k = m.points();
  for (Elt a = 0; a < L.size(); ++a)
    for (Elt b = 0; b < L.size(); ++b) {
      Elt ab = L.join(a, b);
      // single forward DP: reach[j] = j reachable from some x via good steps
      for (std::size_t x = 0; x < k; ++x) {
        std::vector<bool> reach(k, false);
        reach[x] = true;
        for (std::size_t j = x + 1; j < k; ++j)
          for (std::size_t i = x; i < j; ++i)
            if (reach[i] &&
                (L.leq(m.at(i, j), a) || L.leq(m.at(i, j), b))) {
              reach[j] = true;
              break;
            }
        for (std::size_t y = x + 1; y < k; ++y)
          if (L.leq(m.at(x, y), ab) && !reach[y]) return false;
      }
    }
  return true;
}

/// The dual (meet, 1)-homomorphism of a polarized measure:
/// phi(a) = {(x,y) : mu(x,y) <= a}, landing in A_U(n).
inline LatticeMap measure_to_hom(const PolarizedMeasure& m, const CambrianView& view,
                                 const FiniteLattice& view_lattice) {
  if (!is_polarized(m)) throw NotPolarized("measure violates polarization");
  if (!(m.position_spec() == view.spec))
    throw BadParams("measure polarity does not match the target orientation");
  const FiniteLattice& L = *m.target;
  const unsigned n = static_cast<unsigned>(m.points());
  LatticeMap phi;
  phi.source = &L;
  phi.target = &view_lattice;
  phi.image.reserve(L.size());
  for (Elt a = 0; a < L.size(); ++a) {
    PairSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (L.leq(m.at(i, j), a)) s.add(static_cast<int>(i + 1), static_cast<int>(j + 1));
    phi.image.push_back(view.id_of(s));
  }
  return phi;
}

/// The dual measure of a (meet, 1)-homomorphism phi : L -> A_U(n):
/// mu(x,y) = least a with (x,y) in phi(a).
inline PolarizedMeasure hom_to_measure(const LatticeMap& phi, const CambrianView& view) {
  const FiniteLattice& L = *phi.source;
  const unsigned n = view.spec.n;
  // (meet,1)-homomorphism check
  if (phi.image[L.top()] != phi.target->top())
    throw NotMeetHom("map does not send 1 to 1");
  for (Elt a = 0; a < L.size(); ++a)
    for (Elt b = 0; b < L.size(); ++b)
      if (phi.image[L.meet(a, b)] != phi.target->meet(phi.image[a], phi.image[b]))
        throw NotMeetHom("map does not preserve meets");

  PolarizedMeasure m;
  m.target = &L;
  for (int i = 1; i <= static_cast<int>(n); ++i) m.chain.push_back(i);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    if (iset_has(view.spec.u, i)) m.u_labels.push_back(i);
  m.values.assign(n * (n - 1) / 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // the elements whose image contains (i+1, j+1) form a filter
      bool found = false;
      Elt least = L.top();
      for (Elt a = 0; a < L.size(); ++a)
        if (view.elements[phi.image[a]].contains(static_cast<int>(i + 1),
                                                 static_cast<int>(j + 1))) {
          least = found ? L.meet(least, a) : a;
          found = true;
        }
      if (!found) throw NotMeetHom("pair missing from the image of 1");
      m.slot(i, j) = least;
    }
  return m;
}

struct HomProperties {
  bool zero_empty = false;
  bool injective = false;
  bool lattice_hom = false;
};

/// Evaluates the three duality equivalences from both sides; a disagreement
/// is an internal inconsistency, not a data error.
inline HomProperties hom_properties(const PolarizedMeasure& m, const LatticeMap& phi,
                                    const CambrianView& view) {
  const FiniteLattice& L = *m.target;
  HomProperties r;

  bool zero_in_range = false;
  for (Elt v : m.values)
    if (v == L.bottom()) zero_in_range = true;
  bool phi_zero_empty = view.elements[phi.image[L.bottom()]].empty();
  if (phi_zero_empty != !zero_in_range)
    throw DualityViolated("zero/empty equivalence disagreed");
  r.zero_empty = phi_zero_empty;

  bool injective = true;
  for (Elt a = 0; a < L.size() && injective; ++a)
    for (Elt b = a + 1; b < L.size(); ++b)
      if (phi.image[a] == phi.image[b]) {
        injective = false;
        break;
      }
  std::vector<Elt> range(m.values.begin(), m.values.end());
  range.push_back(L.bottom());
  std::sort(range.begin(), range.end());
  range.erase(std::unique(range.begin(), range.end()), range.end());
  // join-closure of the range
  std::vector<bool> in(L.size(), false);
  std::vector<Elt> work(range.begin(), range.end());
  for (Elt x : range) in[x] = true;
  std::size_t generated = range.size();
  while (!work.empty()) {
    Elt x = work.back();
    work.pop_back();
    for (Elt y = 0; y < L.size(); ++y)
      if (in[y]) {
        Elt z = L.join(x, y);
        if (!in[z]) {
          in[z] = true;
          ++generated;
          work.push_back(z);
        }
      }
  }
  bool generates = generated == L.size();
  if (generates != injective)
    throw DualityViolated("generation/injectivity equivalence disagreed");
  r.injective = injective;

  bool join_hom = true;
  const FiniteLattice& A = *phi.target;
  for (Elt a = 0; a < L.size() && join_hom; ++a)
    for (Elt b = 0; b < L.size(); ++b)
      if (phi.image[L.join(a, b)] != A.join(phi.image[a], phi.image[b])) {
        join_hom = false;
        break;
      }
  if (join_hom != satisfies_V(m))
    throw DualityViolated("V-condition/join-homomorphism equivalence disagreed");
  r.lattice_hom = join_hom;
  return r;
}

// ---------------------------------------------------------------------------
// Concrete measures

/// Canonical measure (x,y) -> <x,y>_U into a tabulated Cambrian lattice.
inline PolarizedMeasure canonical_cambrian_measure(const CambrianView& view,
                                                   const FiniteLattice& lattice) {
  const unsigned n = view.spec.n;
  PolarizedMeasure m;
  m.target = &lattice;
  for (int i = 1; i <= static_cast<int>(n); ++i) m.chain.push_back(i);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    if (iset_has(view.spec.u, i)) m.u_labels.push_back(i);
  m.values.assign(n * (n - 1) / 2, 0);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      m.slot(i - 1, j - 1) = view.id_of(cambrian_ji(view.spec, i, j));
  return m;
}

/// Canonical U-polarized measure (x,y) -> <x,y>_U into P(n) itself.
inline PolarizedMeasure canonical_weak_order_measure(const CambrianSpec& s,
                                                     const Permutohedron& perm,
                                                     const FiniteLattice& perm_lattice) {
  PolarizedMeasure m;
  m.target = &perm_lattice;
  const unsigned n = s.n;
  for (int i = 1; i <= static_cast<int>(n); ++i) m.chain.push_back(i);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    if (iset_has(s.u, i)) m.u_labels.push_back(i);
  m.values.assign(n * (n - 1) / 2, 0);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      m.slot(i - 1, j - 1) = perm.id_of(cambrian_ji(s, i, j));
  return m;
}

/// Additive measure: mu(x,y) = join of the step weights between x and y.
/// Additivity makes it U-polarized for every U.
inline PolarizedMeasure additive_measure(std::vector<int> chain,
                                         std::vector<int> u_labels,
                                         const FiniteLattice& target,
                                         const std::vector<Elt>& step_weights) {
  if (step_weights.size() + 1 != chain.size())
    throw BadParams("need one weight per chain step");
  PolarizedMeasure m;
  m.chain = std::move(chain);
  m.u_labels = std::move(u_labels);
  m.target = &target;
  const std::size_t k = m.chain.size();
  m.values.assign(k * (k - 1) / 2, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Elt acc = target.bottom();
    for (std::size_t j = i + 1; j < k; ++j) {
      acc = target.join(acc, step_weights[j - 1]);
      m.slot(i, j) = acc;
    }
  }
  return m;
}

/// Chain measure whose steps are the join-irreducibles in id order.  For a
/// distributive lattice every irreducible is join-prime, so the measure
/// satisfies the refinement condition and embeds L into A(|Ji(L)| + 1).
inline PolarizedMeasure ji_chain_measure(const FiniteLattice& L) {
  const auto& ji = L.ji();
  std::vector<int> chain;
  for (int i = 1; i <= static_cast<int>(ji.size()) + 1; ++i) chain.push_back(i);
  std::vector<int> u = chain;
  return additive_measure(std::move(chain), std::move(u), L,
                          std::vector<Elt>(ji.begin(), ji.end()));
}

/// The measure embedding B(m,1) into A(m+2): steps a_1 .. a_m, b on the
/// chain [m+2], with the long pair from 1 landing on the doubled element.
inline PolarizedMeasure bm1_measure(unsigned m, const BmnLattice& b) {
  if (b.m != m || b.n != 1) throw BadParams("target must be B(m,1)");
  PolarizedMeasure mu;
  mu.target = &b.lattice;
  const int k = static_cast<int>(m) + 2;
  for (int i = 1; i <= k; ++i) mu.chain.push_back(i);
  mu.u_labels = mu.chain;  // plain polarized measure
  mu.values.assign(static_cast<std::size_t>(k) * (k - 1) / 2, 0);
  auto a_range = [&](int lo, int hi) {  // join of a_lo..a_hi as subset id
    std::uint32_t mask = 0;
    for (int i = lo; i <= hi; ++i) mask |= std::uint32_t{1} << (i - 1);
    return b.subset_id(mask);
  };
  for (int kk = 1; kk <= k - 1; ++kk)
    for (int l = kk + 1; l <= k - 1; ++l)
      mu.slot(kk - 1, l - 1) = a_range(kk, l - 1);
  for (int kk = 2; kk <= k - 1; ++kk)
    mu.slot(kk - 1, k - 1) =
        b.lattice.join(a_range(kk, static_cast<int>(m)), b.atom_b(1));
  mu.slot(0, k - 1) = b.p_id();
  return mu;
}

/// The measure embedding B(m,2) into A_{[m+2,2m+1]}(2m+2), built on the
/// chain -m-1 .. -1, 1 .. m+1 with polarity [1,m].  Both halves carry a
/// copy of the B(m,1) measure, one with b1, one with b2; mixed pairs fall
/// back to the distance from the center.
inline PolarizedMeasure bm2_measure(unsigned m, const BmnLattice& b) {
  if (b.m != m || b.n != 2) throw BadParams("target must be B(m,2)");
  PolarizedMeasure nu;
  nu.target = &b.lattice;
  const int mm = static_cast<int>(m);
  for (int i = -mm - 1; i <= -1; ++i) nu.chain.push_back(i);
  for (int i = 1; i <= mm + 1; ++i) nu.chain.push_back(i);
  for (int i = 1; i <= mm; ++i) nu.u_labels.push_back(i);
  const std::size_t k = nu.chain.size();
  nu.values.assign(k * (k - 1) / 2, 0);

  auto a_range = [&](int lo, int hi) {
    std::uint32_t mask = 0;
    for (int i = lo; i <= hi; ++i) mask |= std::uint32_t{1} << (i - 1);
    return b.subset_id(mask);
  };
  // mu0 on [0, m+1] with the given b-atom: mu0(x,y) = a_{[x+1, y]} for
  // y <= m, a_{[x+1,m]} v b_j for y = m+1 and x >= 1, and p for (0, m+1).
  auto mu0 = [&](int x, int y, unsigned bj) -> Elt {
    if (x == 0 && y == mm + 1) return b.p_id();
    if (y <= mm) return a_range(x + 1, y);
    return b.lattice.join(a_range(x + 1, mm), b.atom_b(bj));
  };
  auto label_at = [&](std::size_t pos) { return nu.chain[pos]; };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      int li = label_at(i), lj = label_at(j);
      Elt v;
      if (li >= 1)
        v = mu0(li, lj, 1);
      else if (lj <= -1)
        v = mu0(-lj, -li, 2);
      else
        v = mu0(0, std::min(-li, lj), 1);
      nu.slot(i, j) = v;
    }
  return nu;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_MEASURES_HPP_
