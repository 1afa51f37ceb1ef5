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

#include "latticeforge/doubling.hpp"
#include "latticeforge/isomorphism.hpp"
#include "latticeforge/lattice.hpp"

using namespace latticeforge;

TEST_CASE("two-chain") {
  auto L = make_chain(2);
  REQUIRE(L.size() == 2);
  REQUIRE(L.bottom() == 0);
  REQUIRE(L.top() == 1);
  REQUIRE(L.ji() == std::vector<Elt>{1});
  REQUIRE(L.meet(0, 1) == 0);
  REQUIRE(L.join(0, 1) == 1);
}

TEST_CASE("N5 construction") {
  auto L = make_n5();
  REQUIRE(L.size() == 5);
  // hand-checked: the three elements with a unique lower cover
  REQUIRE(L.ji().size() == 3);
  // defining shape: join(a, c) = 1 and meet(b, c) = 0
  REQUIRE(L.join(1, 3) == 4);
  REQUIRE(L.meet(2, 3) == 0);
}

TEST_CASE("bowtie is not a lattice") {
  // 0 < a,b < c,d < 1: a v b is not unique
  std::vector<std::pair<Elt, Elt>> pairs{{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                         {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  REQUIRE_THROWS_AS(FiniteLattice::from_order(6, pairs), NotALattice);
  try {
    FiniteLattice::from_order(6, pairs);
  } catch (const NotALattice& e) {
    REQUIRE(e.x == 1);
    REQUIRE(e.y == 2);
  }
}

TEST_CASE("cycle is not a poset") {
  REQUIRE_THROWS_AS(FiniteLattice::from_order(2, {{0, 1}, {1, 0}}), NotAPoset);
}

TEST_CASE("meet with top is identity") {
  auto L = make_boolean(3);
  for (Elt x = 0; x < L.size(); ++x) {
    REQUIRE(L.meet(x, L.top()) == x);
    REQUIRE(L.join(x, L.bottom()) == x);
  }
}

TEST_CASE("arrows in the two-chain and N5") {
  auto C = make_chain(2);
  REQUIRE(C.down_arrows() == std::vector<std::pair<Elt, Elt>>{{0, 1}});
  auto L = make_n5();
  // c ->down a: a is Ji, a not<= c, a_* = 0 <= c  (ids: a=1, c=3)
  REQUIRE(L.down_arrow(3, 1));
  // nothing arrows down to an element below it
  REQUIRE_FALSE(L.down_arrow(4, 1));
}

TEST_CASE("kappa") {
  auto C = make_chain(2);
  REQUIRE(C.kappa(1).value() == 0);

  auto M = make_m3();
  // both other atoms are maximal with down-arrow to x: no maximum
  REQUIRE_FALSE(M.kappa(1).has_value());
  REQUIRE_THROWS_AS(M.kappa(4), NotJoinIrreducible);

  auto N = make_n5();
  for (Elt p : N.ji()) REQUIRE(N.kappa(p).has_value());
}

TEST_CASE("join dependency in small lattices") {
  auto B = make_boolean(3);
  for (Elt p : B.ji())
    for (Elt q : B.ji()) REQUIRE_FALSE(B.join_dependency(p, q));

  auto N = make_n5();
  // ids: 0,a=1,b=2,c=3,1=4; scan gives exactly b D a and b D c
  std::vector<std::pair<Elt, Elt>> dji;
  for (Elt p : N.ji())
    for (Elt q : N.ji())
      if (N.join_dependency(p, q)) dji.emplace_back(p, q);
  REQUIRE(dji == std::vector<std::pair<Elt, Elt>>{{2, 1}, {2, 3}});

  auto M = make_m3();
  int edges = 0;
  for (Elt p : M.ji())
    for (Elt q : M.ji())
      if (M.join_dependency(p, q)) ++edges;
  REQUIRE(edges == 6);  // all ordered pairs of distinct atoms
}

TEST_CASE("both join-dependency routes agree") {
  for (const auto& L : {make_n5(), make_m3(), make_boolean(3), make_chain(4)}) {
    auto via_arrows = L.join_dependency_ji_via_arrows();
    std::vector<std::pair<Elt, Elt>> direct;
    for (Elt p : L.ji())
      for (Elt q : L.ji())
        if (p != q && L.join_dependency(p, q)) direct.emplace_back(p, q);
    std::sort(via_arrows.begin(), via_arrows.end());
    std::sort(direct.begin(), direct.end());
    REQUIRE(via_arrows == direct);
  }
}

TEST_CASE("minimal join covers") {
  auto B = make_boolean(3);
  for (Elt p : B.ji()) REQUIRE(B.minimal_join_covers(p).empty());
  // top of boolean(2) = join of the two atoms
  auto B2 = make_boolean(2);
  auto covers = B2.minimal_join_covers(3);
  REQUIRE(covers == std::vector<std::vector<Elt>>{{1, 2}});
}

TEST_CASE("boundedness and semidistributivity") {
  REQUIRE(make_n5().is_bounded());
  REQUIRE_FALSE(make_m3().is_bounded());
  REQUIRE_FALSE(make_m3().is_meet_semidistributive());
  REQUIRE(make_n5().is_semidistributive());
  REQUIRE(make_boolean(3).is_semidistributive());
}

TEST_CASE("dual and product") {
  auto N = make_n5();
  REQUIRE(isomorphic(N.dual(), N));
  auto DD = N.dual().dual();
  for (Elt x = 0; x < N.size(); ++x)
    for (Elt y = 0; y < N.size(); ++y) REQUIRE(N.leq(x, y) == DD.leq(x, y));

  auto P = product(make_chain(2), make_chain(2));
  REQUIRE(isomorphic(P, make_boolean(2)));
}

TEST_CASE("doubling") {
  auto one = make_chain(1);
  REQUIRE(isomorphic(double_interval(one, 0, 0), make_chain(2)));
  auto two = make_chain(2);
  REQUIRE(isomorphic(double_interval(two, 1, 1), make_chain(3)));
  REQUIRE_THROWS_AS(double_interval(make_n5(), 4, 0), BadInterval);
}

TEST_CASE("doubling preserves latticeness and boundedness") {
  std::vector<FiniteLattice> suite{make_n5(), make_boolean(3), make_chain(4)};
  for (const auto& L : suite) {
    for (Elt a = 0; a < L.size(); ++a)
      for (Elt b = 0; b < L.size(); ++b) {
        if (!L.leq(a, b)) continue;
        auto D = double_interval(L, a, b);  // construction validates
        REQUIRE(D.size() >= L.size());
        if (L.is_bounded()) REQUIRE(D.is_bounded());
      }
  }
}

TEST_CASE("sublattice closure and embeddings") {
  auto N = make_n5();
  auto cl = sublattice_closure(N, {0, 4});
  REQUIRE(cl == std::vector<Elt>{0, 4});

  LatticeMap id;
  id.source = &N;
  id.target = &N;
  id.image = {0, 1, 2, 3, 4};
  REQUIRE(verify_embedding(id));

  // composition of two embeddings verifies
  auto B = make_boolean(2);
  auto C = make_chain(2);
  LatticeMap f{&C, &B, {0, 3}};
  REQUIRE_FALSE(verify_embedding(LatticeMap{&C, &B, {0, 0}}));
  REQUIRE(verify_embedding(f));
  LatticeMap g{&B, &B, {0, 1, 2, 3}};
  REQUIRE(verify_embedding(compose(g, f)));
}

TEST_CASE("join_fits basics") {
  auto B = make_boolean(2);
  std::vector<Elt> all{0, 1, 2, 3};
  REQUIRE(join_fits(B, all));
  // The top is join-irreducible in {0,1} and depends on both atoms, which
  // lie outside; accordingly the lower projection onto {0,1} fails to
  // preserve joins.
  std::vector<Elt> zero_one{0, 3};
  REQUIRE_FALSE(join_fits(B, zero_one));
  REQUIRE_THROWS_AS(join_fits(B, std::vector<Elt>{0, 1, 2}), NotSubsemilattice);
}
