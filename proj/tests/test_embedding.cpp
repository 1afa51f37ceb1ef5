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

#include "latticeforge/bmn.hpp"
#include "latticeforge/embedding_search.hpp"

using namespace latticeforge;

TEST_CASE("presentations") {
  auto b = BmnLattice::build(2, 2);
  std::vector<Elt> atoms{b.atom_a(1), b.atom_a(2), b.atom_b(1), b.atom_b(2)};
  // the four atoms close on all seventeen elements
  REQUIRE(sublattice_closure(b.lattice, atoms).size() == 17);
  auto pres = present(b.lattice, atoms);
  REQUIRE(pres.construction_order.size() == 17);
  REQUIRE(pres.ops.size() == 13);

  REQUIRE_THROWS_AS(present(b.lattice, std::vector<Elt>{b.atom_a(1)}),
                    GeneratorsDontGenerate);
}

TEST_CASE("reduced generators") {
  auto b = BmnLattice::build(2, 2);
  std::vector<Elt> want{b.atom_a(1), b.atom_a(2), b.atom_b(1), b.atom_b(2)};
  std::sort(want.begin(), want.end());
  REQUIRE(reduced_generating_set(b.lattice) == want);

  REQUIRE(reduced_generating_set(make_m3()) == std::vector<Elt>{1, 2, 3});
  // chains need the bottom as an explicit generator
  REQUIRE(reduced_generating_set(make_chain(2)) == std::vector<Elt>{0, 1});
}

TEST_CASE("chain embeds anywhere") {
  auto C = make_chain(2);
  for (const auto& L : {make_n5(), make_m3(), make_boolean(2)}) {
    auto r = generator_embedding_search(C, L, reduced_generating_set(C));
    REQUIRE(r.has_value());
    LatticeMap f{&C, &L, *r};
    REQUIRE(verify_embedding(f));
  }
}

TEST_CASE("the modular diamond misses every three-letter orientation") {
  auto M = make_m3();
  auto gens = reduced_generating_set(M);
  for (const auto& s : all_cambrian_specs(3)) {
    auto L = CambrianView::build(s).to_lattice();
    REQUIRE_FALSE(generator_embedding_search(M, L, gens).has_value());
  }
  REQUIRE_FALSE(si_embedding_scan(M, 3).has_value());
}

TEST_CASE("the pentagon is a three-letter lattice") {
  auto hit = si_embedding_scan(make_n5(), 3);
  REQUIRE(hit.has_value());
  LatticeMap f;
  FiniteLattice n5 = make_n5();
  f.source = &n5;
  f.target = &hit->lattice;
  f.image = hit->image;
  REQUIRE(verify_embedding(f));
}

TEST_CASE("scan rejects reducible sources") {
  REQUIRE_THROWS_AS(si_embedding_scan(make_boolean(2), 3), BadParams);
}

TEST_CASE("doubled square misses the short orientations") {
  auto b = BmnLattice::build(2, 2);
  for (unsigned n = 2; n <= 4; ++n)
    REQUIRE_FALSE(si_embedding_scan(b.lattice, n).has_value());
}

TEST_CASE("doubled square lands in the six-letter window") {
  auto b = BmnLattice::build(2, 2);
  CambrianSpec s = CambrianSpec::make(6, iset_single(4) | iset_single(5));
  auto L = CambrianView::build(s).to_lattice();
  SearchOptions opt;
  opt.threads = 2;
  auto r = generator_embedding_search(b.lattice, L, reduced_generating_set(b.lattice), opt);
  REQUIRE(r.has_value());
  LatticeMap f{&b.lattice, &L, *r};
  REQUIRE(verify_embedding(f));
}

TEST_CASE("search verdicts are thread-count independent") {
  auto b = BmnLattice::build(1, 1);
  auto A4 = CambrianView::build(CambrianSpec::tamari(4)).to_lattice();
  SearchOptions one, four;
  four.threads = 4;
  auto r1 = generator_embedding_search(b.lattice, A4, reduced_generating_set(b.lattice), one);
  auto r4 = generator_embedding_search(b.lattice, A4, reduced_generating_set(b.lattice), four);
  REQUIRE(r1.has_value());
  REQUIRE(r4.has_value());
  REQUIRE(*r1 == *r4);
}

TEST_CASE("budget guard") {
  auto b = BmnLattice::build(2, 2);
  auto A4 = CambrianView::build(CambrianSpec::tamari(4)).to_lattice();
  SearchOptions opt;
  opt.budget = 100;
  REQUIRE_THROWS_AS(
      generator_embedding_search(b.lattice, A4, reduced_generating_set(b.lattice), opt),
      BudgetExceeded);
}
