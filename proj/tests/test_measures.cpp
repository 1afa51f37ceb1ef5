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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "latticeforge/measures.hpp"

using namespace latticeforge;

namespace {

struct Materialized {
  CambrianView view;
  FiniteLattice lattice;
  explicit Materialized(const CambrianSpec& s)
      : view(CambrianView::build(s)), lattice(view.to_lattice()) {}
};

}  // namespace

TEST_CASE("constant-bottom measure is polarized") {
  auto L = make_n5();
  PolarizedMeasure m;
  m.chain = {1, 2, 3, 4};
  m.u_labels = {1, 2, 3, 4};
  m.target = &L;
  m.values.assign(6, L.bottom());
  REQUIRE(is_polarized(m).ok);
  REQUIRE(satisfies_V(m));
}

TEST_CASE("canonical tamari measure embeds the lattice into itself") {
  for (unsigned n = 3; n <= 5; ++n) {
    Materialized a(CambrianSpec::tamari(n));
    PolarizedMeasure m = canonical_cambrian_measure(a.view, a.lattice);
    REQUIRE(is_polarized(m).ok);
    REQUIRE(satisfies_V(m));
    LatticeMap phi = measure_to_hom(m, a.view, a.lattice);
    auto props = hom_properties(m, phi, a.view);
    REQUIRE(props.injective);
    REQUIRE(props.lattice_hom);
    REQUIRE(verify_embedding(phi));
    // the dual map is the identity on the lattice
    for (Elt x = 0; x < a.lattice.size(); ++x) REQUIRE(phi.image[x] == x);
  }
}

TEST_CASE("canonical weak-order measure is polarized but not generating") {
  for (unsigned n = 3; n <= 4; ++n) {
    auto perm = Permutohedron::build(n);
    auto PL = perm.to_lattice();
    for (const auto& s : all_cambrian_specs(n)) {
      PolarizedMeasure m = canonical_weak_order_measure(s, perm, PL);
      REQUIRE(is_polarized(m).ok);
      REQUIRE(satisfies_V(m));
      Materialized a(s);
      LatticeMap phi = measure_to_hom(m, a.view, a.lattice);
      auto props = hom_properties(m, phi, a.view);
      REQUIRE(props.lattice_hom);
      REQUIRE_FALSE(props.injective);  // n >= 3
      // the dual map is the lower projection
      for (Elt x = 0; x < PL.size(); ++x)
        REQUIRE(a.view.elements[phi.image[x]] == pi_U(s, perm.elements[x]));
    }
  }
}

TEST_CASE("duality round trips on randomized measures") {
  std::mt19937 rng(20260810);
  std::vector<FiniteLattice> targets;
  targets.push_back(make_n5());
  targets.push_back(make_m3());
  targets.push_back(make_chain(4));
  targets.push_back(make_boolean(3));
  targets.push_back(BmnLattice::build(2, 2).lattice);

  int injective_seen = 0, noninjective_seen = 0, v_seen = 0, nonv_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    unsigned n = 3 + trial % 3;  // chain size 3..5
    const FiniteLattice& L = targets[trial % targets.size()];
    std::vector<int> chain;
    for (int i = 1; i <= static_cast<int>(n); ++i) chain.push_back(i);
    std::vector<int> u;
    for (int i = 1; i <= static_cast<int>(n); ++i)
      if (rng() & 1) u.push_back(i);
    std::vector<Elt> weights;
    for (unsigned k = 0; k + 1 < n; ++k)
      weights.push_back(static_cast<Elt>(rng() % L.size()));
    PolarizedMeasure m = additive_measure(chain, u, L, weights);
    REQUIRE(is_polarized(m).ok);

    Materialized a(m.position_spec());
    LatticeMap phi = measure_to_hom(m, a.view, a.lattice);
    // hom_properties evaluates each equivalence from both sides and throws
    // on any disagreement
    auto props = hom_properties(m, phi, a.view);
    (props.injective ? injective_seen : noninjective_seen)++;
    (props.lattice_hom ? v_seen : nonv_seen)++;

    PolarizedMeasure back = hom_to_measure(phi, a.view);
    REQUIRE(back.values == m.values);
    LatticeMap phi2 = measure_to_hom(back, a.view, a.lattice);
    REQUIRE(phi2.image == phi.image);
  }
  // the random family must exercise both sides of each equivalence
  REQUIRE(injective_seen > 0);
  REQUIRE(noninjective_seen > 0);
  REQUIRE(v_seen > 0);
  REQUIRE(nonv_seen > 0);
}

TEST_CASE("non-measures are rejected") {
  auto L = make_n5();
  PolarizedMeasure m;
  m.chain = {1, 2, 3};
  m.u_labels = {1, 2, 3};
  m.target = &L;
  // mu(1,3) strictly above mu(1,2) v mu(2,3): violates the triangle
  m.values = {0, 4, 0};  // (1,2)=0, (1,3)=top, (2,3)=0
  auto check = is_polarized(m);
  REQUIRE_FALSE(check.ok);
  REQUIRE(check.condition == 1);
  Materialized a(m.position_spec());
  REQUIRE_THROWS_AS(measure_to_hom(m, a.view, a.lattice), NotPolarized);
}

TEST_CASE("distributive chain measure embeds into the matching tamari lattice") {
  for (unsigned m = 1; m <= 4; ++m) {
    auto b = BmnLattice::build(m, 0);
    PolarizedMeasure mu = ji_chain_measure(b.lattice);
    REQUIRE(is_polarized(mu).ok);
    REQUIRE(satisfies_V(mu));
    Materialized a(CambrianSpec::tamari(m + 2));
    LatticeMap phi = measure_to_hom(mu, a.view, a.lattice);
    auto props = hom_properties(mu, phi, a.view);
    REQUIRE(props.injective);
    REQUIRE(props.lattice_hom);
    REQUIRE(verify_embedding(phi));
  }
}

TEST_CASE("doubled-plus-one-atom measures") {
  // m = 1: values a1, b, p on the three-point chain
  auto b1 = BmnLattice::build(1, 1);
  PolarizedMeasure mu1 = bm1_measure(1, b1);
  REQUIRE(mu1.at(0, 1) == b1.atom_a(1));
  REQUIRE(mu1.at(1, 2) == b1.atom_b(1));
  REQUIRE(mu1.at(0, 2) == b1.p_id());

  // m = 2: the six displayed values
  auto b2 = BmnLattice::build(2, 1);
  PolarizedMeasure mu2 = bm1_measure(2, b2);
  REQUIRE(mu2.at(0, 1) == b2.atom_a(1));
  REQUIRE(mu2.at(1, 2) == b2.atom_a(2));
  REQUIRE(mu2.at(0, 2) == b2.a_id());
  REQUIRE(mu2.at(2, 3) == b2.atom_b(1));
  REQUIRE(mu2.at(1, 3) == b2.lattice.join(b2.atom_a(2), b2.atom_b(1)));
  REQUIRE(mu2.at(0, 3) == b2.p_id());

  for (unsigned m = 1; m <= 4; ++m) {
    auto b = BmnLattice::build(m, 1);
    PolarizedMeasure mu = bm1_measure(m, b);
    REQUIRE(is_polarized(mu).ok);
    REQUIRE(satisfies_V(mu));
    Materialized a(CambrianSpec::tamari(m + 2));
    LatticeMap phi = measure_to_hom(mu, a.view, a.lattice);
    auto props = hom_properties(mu, phi, a.view);
    REQUIRE(props.injective);
    REQUIRE(props.lattice_hom);
    REQUIRE(verify_embedding(phi));
  }

  // m = 1 lands in the five-element tamari lattice
  Materialized a3(CambrianSpec::tamari(3));
  REQUIRE(isomorphic(a3.lattice, make_n5()));
}

TEST_CASE("two-b measures and the orientation window") {
  for (unsigned m = 1; m <= 3; ++m) {
    auto b = BmnLattice::build(m, 2);
    PolarizedMeasure nu = bm2_measure(m, b);
    const std::size_t k = nu.points();
    REQUIRE(k == 2 * m + 2);
    // spot values at the corners
    REQUIRE(nu.at(0, k - 1) == b.p_id());
    REQUIRE(nu.at(m, m + 1) == b.atom_a(1));          // labels -1, 1
    REQUIRE(nu.at(k - 2, k - 1) == b.atom_b(1));      // labels m, m+1
    REQUIRE(nu.at(0, 1) == b.atom_b(2));              // labels -m-1, -m
    REQUIRE(is_polarized(nu).ok);
    REQUIRE(satisfies_V(nu));

    CambrianSpec want = CambrianSpec::make(
        2 * m + 2, iset_range(static_cast<int>(m) + 2, 2 * static_cast<int>(m) + 1));
    REQUIRE(nu.position_spec() == want);
    Materialized a(want);
    LatticeMap phi = measure_to_hom(nu, a.view, a.lattice);
    auto props = hom_properties(nu, phi, a.view);
    REQUIRE(props.injective);
    REQUIRE(props.lattice_hom);
    REQUIRE(verify_embedding(phi));
    // zero / one preservation
    REQUIRE(phi.image[b.lattice.bottom()] == a.lattice.bottom());
    REQUIRE(phi.image[b.lattice.top()] == a.lattice.top());
  }
}

TEST_CASE("m = 1 corner case of the two-b family") {
  // B(1,2) goes into the four-letter window with U = {3}
  auto b = BmnLattice::build(1, 2);
  PolarizedMeasure nu = bm2_measure(1, b);
  REQUIRE(nu.position_spec() == CambrianSpec::make(4, iset_single(3)));
}
