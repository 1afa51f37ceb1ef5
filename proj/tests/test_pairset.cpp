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

#include "latticeforge/pairset.hpp"

using namespace latticeforge;

namespace {

PairSet random_pairset(unsigned n, std::mt19937& rng) {
  PairSet x(n);
  std::bernoulli_distribution coin(0.4);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      if (coin(rng)) x.add(i, j);
  return x;
}

/// Direct reading of the interior: (i,j) stays iff every strictly
/// increasing path from i to j uses at least one member step.
bool interior_oracle_contains(const PairSet& x, int i, int j) {
  const int n = static_cast<int>(x.ground());
  // DFS over member-free paths; if one reaches j, the pair is not interior.
  std::vector<int> stack{i};
  std::vector<bool> seen(n + 1, false);
  seen[i] = true;
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t = s + 1; t <= j; ++t) {
      if (x.contains(s, t)) continue;  // this step is covered
      if (t == j) return false;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("closure and interior basics") {
  PairSet empty(4);
  REQUIRE(empty.closure() == empty);
  REQUIRE(PairSet::full(4).interior() == PairSet::full(4));

  // cl({(1,3),(2,3),(3,4)}) picks up (1,4) and (2,4)
  PairSet x(4);
  x.add(1, 3);
  x.add(2, 3);
  x.add(3, 4);
  PairSet want(4);
  for (auto [i, j] : {std::pair{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) want.add(i, j);
  REQUIRE(x.closure() == want);
}

TEST_CASE("closure of open is open, interior of closed is closed") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    unsigned n = 3 + trial % 5;
    PairSet x = random_pairset(n, rng);
    PairSet open = x.interior();  // interior of anything is open
    REQUIRE(open.complement().is_transitive());
    REQUIRE(open.closure().complement().is_transitive());
    PairSet closed = x.closure();
    REQUIRE(closed.is_transitive());
    REQUIRE(closed.interior().is_transitive());
  }
}

TEST_CASE("interior agrees with the path oracle") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 3 + trial % 4;
    PairSet x = random_pairset(n, rng);
    PairSet in = x.interior();
    for (int i = 1; i <= static_cast<int>(n); ++i)
      for (int j = i + 1; j <= static_cast<int>(n); ++j) {
        bool oracle = x.contains(i, j) && interior_oracle_contains(x, i, j);
        REQUIRE(in.contains(i, j) == oracle);
      }
  }
}

TEST_CASE("inversions") {
  REQUIRE(inversions({1, 2, 3, 4}).empty());
  REQUIRE(inversions({4, 3, 2, 1}) == PairSet::full(4));
  REQUIRE_THROWS_AS(inversions({1, 1, 2}), BadParams);
}

TEST_CASE("permutation round trip over all of S5") {
  std::vector<int> sigma{1, 2, 3, 4, 5};
  do {
    PairSet inv = inversions(sigma);
    REQUIRE(inv.is_clopen());
    REQUIRE(permutation_of(inv) == sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

TEST_CASE("permutation_of rejects non-clopen sets") {
  PairSet x(3);
  x.add(1, 3);  // not clopen: complement {(1,2),(2,3)} is not transitive
  REQUIRE_FALSE(x.is_clopen());
  REQUIRE_THROWS_AS(permutation_of(x), NotClopen);
}

TEST_CASE("complement involution and canonical order") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    PairSet x = random_pairset(5, rng);
    REQUIRE(x.complement().complement() == x);
  }
  PairSet a(3), b(3);
  a.add(1, 2);
  b.add(2, 3);
  REQUIRE(PairSet::canonical_less(PairSet(3), a));
  REQUIRE(PairSet::canonical_less(a, b));  // same count, (1,2) is lower
}
