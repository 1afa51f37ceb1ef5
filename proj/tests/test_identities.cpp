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

#include "latticeforge/bmn.hpp"
#include "latticeforge/identities.hpp"

using namespace latticeforge;

namespace {

struct A34 {
  CambrianSpec spec = CambrianSpec::make(4, iset_single(3));
  CambrianView view = CambrianView::build(spec);
  FiniteLattice lattice = view.to_lattice();

  Elt id(std::initializer_list<std::pair<int, int>> pairs) const {
    PairSet x(4);
    for (auto [i, j] : pairs) x.add(i, j);
    return view.id_of(x);
  }
};

Identity trivial_equal() {
  Identity id;
  TermId t = id.pool.meet({id.pool.var(0), id.pool.var(1)});
  id.lhs = t;
  id.rhs = t;
  id.rel = Rel::Eq;
  id.varcount = 2;
  return id;
}

TermId random_term(TermPool& pool, unsigned vars, int depth, std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, depth <= 0 ? 0 : 2);
  switch (kind(rng)) {
    case 0:
      return pool.var(std::uniform_int_distribution<unsigned>(0, vars - 1)(rng));
    case 1:
      return pool.meet({random_term(pool, vars, depth - 1, rng),
                        random_term(pool, vars, depth - 1, rng)});
    default:
      return pool.join({random_term(pool, vars, depth - 1, rng),
                        random_term(pool, vars, depth - 1, rng)});
  }
}

}  // namespace

TEST_CASE("evaluation basics") {
  auto N = make_n5();
  TermPool pool;
  TermId v0 = pool.var(0);
  REQUIRE(eval_term(N, pool, v0, {3}) == 3);
  // absorption holds everywhere
  TermId absorb = pool.meet({pool.var(0), pool.join({pool.var(0), pool.var(1)})});
  for (Elt x = 0; x < N.size(); ++x)
    for (Elt y = 0; y < N.size(); ++y)
      REQUIRE(eval_term(N, pool, absorb, {x, y}) == x);
}

TEST_CASE("reflexive identities hold") {
  auto L = make_m3();
  REQUIRE(holds(L, trivial_equal()).holds());
}

TEST_CASE("budget guard") {
  auto L = make_m3();
  CheckOptions opt;
  opt.budget = 10;
  REQUIRE_THROWS_AS(holds(L, veg1(), opt), BudgetExceeded);
}

TEST_CASE("the first failing identity and its witness values") {
  A34 a;
  // <1,3>, <2,4>, <3,4>, <1,2> as an assignment for (a1, a2, b1, b2)
  std::vector<Elt> w{a.id({{1, 3}, {2, 3}}),
                     a.id({{2, 3}, {2, 4}}),
                     a.id({{3, 4}}),
                     a.id({{1, 2}})};

  // hand-verified joins along the proof
  PairSet a1b1(4), lhs_want(4);
  for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) a1b1.add(i, j);
  for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}}) lhs_want.add(i, j);
  REQUIRE(a.view.elements[a.lattice.join(w[0], w[2])] == a1b1);

  Identity v1 = veg1();
  auto [lhs, rhs] = eval_sides(a.lattice, v1, w);
  REQUIRE(a.view.elements[lhs] == lhs_want);
  REQUIRE_FALSE(a.lattice.leq(lhs, rhs));

  Verdict verdict = holds(a.lattice, v1);
  REQUIRE_FALSE(verdict.holds());
  // the reported counterexample is the least in mixed-radix order
  REQUIRE(verdict.assignment <= w);

  // and the permutohedron fails with it
  auto P4 = Permutohedron::build(4).to_lattice();
  REQUIRE_FALSE(holds(P4, v1).holds());
}

TEST_CASE("tamari lattices satisfy the small identities") {
  for (unsigned n = 2; n <= 4; ++n) {
    auto A = CambrianView::build(CambrianSpec::tamari(n)).to_lattice();
    REQUIRE(holds(A, veg1()).holds());
    REQUIRE(holds(A, veg2()).holds());
  }
}

TEST_CASE("the second identity fails on the doubled boolean square") {
  auto b = BmnLattice::build(2, 2);
  std::vector<Elt> atoms{b.atom_a(1), b.atom_a(2), b.atom_b(1), b.atom_b(2)};
  Identity v2 = veg2();
  auto [lhs, rhs] = eval_sides(b.lattice, v2, atoms);
  REQUIRE(lhs == b.p_id());
  REQUIRE(rhs == b.a_id());
  REQUIRE_FALSE(holds(b.lattice, v2).holds());

  // but the first identity survives there
  REQUIRE(holds(b.lattice, veg1()).holds());

  // and the permutohedron satisfies the second
  auto P4 = Permutohedron::build(4).to_lattice();
  REQUIRE(holds(P4, v2).holds());
}

TEST_CASE("the right side of the equality form never exceeds the left") {
  Identity v2 = veg2();
  for (const auto& L : {make_n5(), make_m3(), BmnLattice::build(2, 2).lattice}) {
    CompiledIdentity c(v2);
    Evaluator ev(L, c);
    std::vector<Elt> a(4, 0);
    bool done = false;
    while (!done) {
      auto [lhs, rhs] = ev.sides_at(a);
      REQUIRE(L.leq(rhs, lhs));
      std::size_t k = 4;
      done = true;
      while (k-- > 0) {
        if (++a[k] < L.size()) {
          done = false;
          break;
        }
        a[k] = 0;
      }
    }
  }
}

TEST_CASE("generated family structure") {
  Identity g11 = gazpacho({1, 1});
  REQUIRE(g11.varcount == 4);
  Identity g21 = gazpacho({2, 1});
  REQUIRE(g21.varcount == 5);
  Identity g111 = gazpacho({1, 1, 1});
  REQUIRE(g111.varcount == 6);
  REQUIRE_THROWS_AS(gazpacho({1}), BadParams);
  REQUIRE_THROWS_AS(gazpacho({1, 0}), BadParams);
}

TEST_CASE("smallest family member is pointwise the first identity") {
  A34 a;
  Identity g11 = gazpacho({1, 1});
  Identity v1 = veg1();
  for (const auto& L : {a.lattice, make_n5(), make_m3()}) {
    CompiledIdentity cg(g11), cv(v1);
    Evaluator eg(L, cg), evv(L, cv);
    std::vector<Elt> w(4, 0);
    bool done = false;
    while (!done) {
      auto [gl, gr] = eg.sides_at(w);
      auto [vl, vr] = evv.sides_at(w);
      REQUIRE(L.leq(gl, gr) == L.leq(vl, vr));
      std::size_t k = 4;
      done = true;
      while (k-- > 0) {
        if (++w[k] < L.size()) {
          done = false;
          break;
        }
        w[k] = 0;
      }
    }
  }
}

TEST_CASE("diagonal substitution of the (2,2) member is the second identity") {
  Identity g = gazpacho({2, 2});
  // a_{1,1}, a_{1,2}, a_{2,1}, a_{2,2}, b1, b2 collapse to a1, a2, b1, b2
  std::vector<unsigned> mapping{0, 1, 0, 1, 2, 3};
  g.lhs = g.pool.substitute(g.lhs, mapping);
  g.rhs = g.pool.substitute(g.rhs, mapping);
  g.varcount = 4;

  Identity v2 = veg2();
  for (const auto& L : {BmnLattice::build(2, 2).lattice, make_n5(), make_m3()}) {
    CompiledIdentity cg(g), cv(v2);
    Evaluator eg(L, cg), evv(L, cv);
    std::vector<Elt> w(4, 0);
    bool done = false;
    while (!done) {
      auto [gl, gr] = eg.sides_at(w);
      auto [vl, vr] = evv.sides_at(w);
      REQUIRE(L.leq(gl, gr) == (vl == vr));
      std::size_t k = 4;
      done = true;
      while (k-- > 0) {
        if (++w[k] < L.size()) {
          done = false;
          break;
        }
        w[k] = 0;
      }
    }
  }
}

TEST_CASE("family fails off the tamari axis") {
  A34 a;
  REQUIRE_FALSE(holds(a.lattice, gazpacho({1, 1})).holds());
}

TEST_CASE("splitting identity") {
  Identity sp = splitting_b33();
  REQUIRE(sp.varcount == 6);
  REQUIRE(holds(make_chain(2), sp).holds());

  auto b = BmnLattice::build(3, 3);
  std::vector<Elt> atoms{b.atom_a(1), b.atom_a(2), b.atom_a(3),
                         b.atom_b(1), b.atom_b(2), b.atom_b(3)};
  auto [lhs, rhs] = eval_sides(b.lattice, sp, atoms);
  REQUIRE(lhs == b.p_id());
  REQUIRE(rhs == b.a_id());
  REQUIRE_FALSE(b.lattice.leq(lhs, rhs));
}

TEST_CASE("negative control: corrupting the splitting identity flips it") {
  // swapping the two sides makes it hold at the atom witness
  Identity sp = splitting_b33();
  std::swap(sp.lhs, sp.rhs);
  auto b = BmnLattice::build(3, 3);
  std::vector<Elt> atoms{b.atom_a(1), b.atom_a(2), b.atom_a(3),
                         b.atom_b(1), b.atom_b(2), b.atom_b(3)};
  REQUIRE(holds_at(b.lattice, sp, atoms));
}

TEST_CASE("the twelve-letter witness") {
  Witness12Result r = eval_witness_12();
  REQUIRE(r.elements_valid);
  REQUIRE(r.subdivisions_valid);
  REQUIRE(r.pair_in_lhs);
  REQUIRE_FALSE(r.pair_in_rhs);
}

TEST_CASE("parallel scans match the sequential verdict") {
  A34 a;
  Identity v1 = veg1();
  CheckOptions seq, par;
  par.threads = 2;
  Verdict vs = holds(a.lattice, v1, seq);
  Verdict vp = holds(a.lattice, v1, par);
  REQUIRE(vs.holds() == vp.holds());
  REQUIRE(vs.assignment == vp.assignment);

  auto A4 = CambrianView::build(CambrianSpec::tamari(4)).to_lattice();
  REQUIRE(holds(A4, v1, par).holds());
}

TEST_CASE("duality of verdicts") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Identity id;
    id.lhs = random_term(id.pool, 3, 2, rng);
    id.rhs = random_term(id.pool, 3, 2, rng);
    id.rel = Rel::Eq;
    id.varcount = 3;
    Identity dual_id;
    dual_id.pool = id.pool;
    dual_id.lhs = dual_id.pool.dualize(id.lhs);
    dual_id.rhs = dual_id.pool.dualize(id.rhs);
    dual_id.rel = Rel::Eq;
    dual_id.varcount = 3;
    for (const auto& L : {make_n5(), make_m3()})
      REQUIRE(holds(L, id).holds() == holds(L.dual(), dual_id).holds());
  }
}

TEST_CASE("embeddings commute with evaluation") {
  auto C = make_chain(2);
  auto B = make_boolean(2);
  LatticeMap f{&C, &B, {0, 3}};
  REQUIRE(verify_embedding(f));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    TermPool pool;
    TermId t = random_term(pool, 2, 3, rng);
    for (Elt x = 0; x < 2; ++x)
      for (Elt y = 0; y < 2; ++y) {
        Elt inner = eval_term(C, pool, t, {x, y});
        Elt outer = eval_term(B, pool, t, {f.image[x], f.image[y]});
        REQUIRE(f.image[inner] == outer);
      }
  }
}

TEST_CASE("sublattices inherit holding identities") {
  // the second identity holds on the ambient permutohedron, so it holds on
  // every tabulated orientation sublattice
  auto P4 = Permutohedron::build(4).to_lattice();
  Identity v2 = veg2();
  REQUIRE(holds(P4, v2).holds());
  for (const auto& s : all_cambrian_specs(4)) {
    auto L = CambrianView::build(s).to_lattice();
    REQUIRE(holds(L, v2).holds());
  }
}

TEST_CASE("term text round trip") {
  Identity v1 = veg1();
  std::string text = v1.pool.to_text(v1.lhs);
  TermPool fresh;
  TermId parsed = fresh.parse(text);
  REQUIRE(fresh.to_text(parsed) == text);
  REQUIRE_THROWS_AS(fresh.parse("(meet x0)"), ParseError);
  REQUIRE_THROWS_AS(fresh.parse("(frob x0 x1)"), ParseError);
}
