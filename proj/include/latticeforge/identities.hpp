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

#ifndef INCLUDE_LATTICEFORGE_IDENTITIES_HPP_
#define INCLUDE_LATTICEFORGE_IDENTITIES_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latticeforge/cambrian.hpp"
#include "latticeforge/lattice.hpp"
#include "latticeforge/term.hpp"

namespace latticeforge {

// ---------------------------------------------------------------------------
// Compiled evaluation

/// A term DAG flattened into a topologically ordered program over uint16
/// element ids, evaluated against flat meet/join tables.
class CompiledIdentity {
 public:
  CompiledIdentity(const Identity& id) : rel_(id.rel), varcount_(id.varcount) {
    const TermPool& pool = id.pool;
    std::vector<int> slot(pool.node_count(), -1);
    lhs_slot_ = compile(pool, id.lhs, slot);
    rhs_slot_ = compile(pool, id.rhs, slot);
    if (varcount_ == 0)
      varcount_ = std::max(pool.var_count(id.lhs), pool.var_count(id.rhs));
  }

  unsigned varcount() const { return varcount_; }
  Rel rel() const { return rel_; }
  /// Term node evaluations per assignment, the budget unit.
  std::size_t cost_per_assignment() const { return prog_.size(); }

 private:
  friend class Evaluator;

  struct Ins {
    TermOp op;
    std::uint32_t arg;    // var index, or start offset into kid_slots_
    std::uint32_t count;  // number of kids
  };

  int compile(const TermPool& pool, TermId t, std::vector<int>& slot) {
    if (slot[t] >= 0) return slot[t];
    Ins ins;
    ins.op = pool.op(t);
    if (ins.op == TermOp::Var) {
      ins.arg = pool.var_index(t);
      ins.count = 0;
    } else {
      std::vector<int> ks;
      for (TermId k : pool.kids(t)) ks.push_back(compile(pool, k, slot));
      ins.arg = static_cast<std::uint32_t>(kid_slots_.size());
      ins.count = static_cast<std::uint32_t>(ks.size());
      for (int k : ks) kid_slots_.push_back(static_cast<std::uint32_t>(k));
    }
    slot[t] = static_cast<int>(prog_.size());
    prog_.push_back(ins);
    return slot[t];
  }

  std::vector<Ins> prog_;
  std::vector<std::uint32_t> kid_slots_;
  int lhs_slot_ = 0, rhs_slot_ = 0;
  Rel rel_;
  unsigned varcount_;
};

/// Per-thread evaluation state bound to one lattice.  Builds local meet/join
/// tables when the lattice has not cached them.
class Evaluator {
 public:
  Evaluator(const FiniteLattice& L, const CompiledIdentity& c)
      : L_(L), c_(c), values_(c.prog_.size()) {
    const std::size_t n = L.size();
    if (n > 2048) throw SizeLimit("identity scan needs tabulated meet/join");
    meet_.resize(n * n);
    join_.resize(n * n);
    for (Elt x = 0; x < n; ++x)
      for (Elt y = 0; y < n; ++y) {
        meet_[x * n + y] = static_cast<std::uint16_t>(L.meet(x, y));
        join_[x * n + y] = static_cast<std::uint16_t>(L.join(x, y));
      }
  }

  /// Evaluates both sides; true when the identity holds at the assignment.
  bool holds_at(const std::vector<Elt>& assignment) {
    eval(assignment);
    Elt l = values_[c_.lhs_slot_];
    Elt r = values_[c_.rhs_slot_];
    if (c_.rel() == Rel::Leq) return L_.leq(l, r);
    return l == r;
  }

  std::pair<Elt, Elt> sides_at(const std::vector<Elt>& assignment) {
    eval(assignment);
    return {values_[c_.lhs_slot_], values_[c_.rhs_slot_]};
  }

 private:
  void eval(const std::vector<Elt>& assignment) {
    const std::size_t n = L_.size();
    for (std::size_t i = 0; i < c_.prog_.size(); ++i) {
      const auto& ins = c_.prog_[i];
      if (ins.op == TermOp::Var) {
        values_[i] = static_cast<std::uint16_t>(assignment[ins.arg]);
        continue;
      }
      const std::uint16_t* tab = ins.op == TermOp::Meet ? meet_.data() : join_.data();
      std::uint16_t acc = values_[c_.kid_slots_[ins.arg]];
      for (std::uint32_t k = 1; k < ins.count; ++k)
        acc = tab[static_cast<std::size_t>(acc) * n + values_[c_.kid_slots_[ins.arg + k]]];
      values_[i] = acc;
    }
  }

  const FiniteLattice& L_;
  const CompiledIdentity& c_;
  std::vector<std::uint16_t> values_;
  std::vector<std::uint16_t> meet_, join_;
};

// ---------------------------------------------------------------------------
// Exhaustive checking

enum class VerdictKind : std::uint8_t { Holds, Fails };

struct Verdict {
  VerdictKind kind = VerdictKind::Holds;
  std::vector<Elt> assignment;  // lexicographically least counterexample

  bool holds() const { return kind == VerdictKind::Holds; }
};

struct CheckOptions {
  std::uint64_t budget = 10'000'000'000ULL;  // term-node evaluations
  unsigned threads = 1;
};

namespace detail {

/// Scans assignments with the given prefix fixed, variables ordered
/// slowest-first; returns the in-order first counterexample, which is the
/// lexicographically least one within the shard.
inline std::optional<std::vector<Elt>> scan_shard(const FiniteLattice& L,
                                                  Evaluator& ev, unsigned varcount,
                                                  const std::vector<Elt>& prefix) {
  std::vector<Elt> a(varcount, 0);
  std::copy(prefix.begin(), prefix.end(), a.begin());
  const std::size_t fixed = prefix.size();
  const std::size_t n = L.size();
  while (true) {
    if (!ev.holds_at(a)) return a;
    // mixed-radix increment over the free variables, last index fastest
    std::size_t k = varcount;
    while (k > fixed) {
      --k;
      if (++a[k] < n) break;
      a[k] = 0;
      if (k == fixed) return std::nullopt;
    }
    if (varcount == fixed) return std::nullopt;  // single empty-radix case
  }
}

}  // namespace detail

/// Exhaustive identity check.  The verdict and the reported counterexample
/// are independent of the thread count: shards are indexed by the top one or
/// two variables and the least failing shard wins.
inline Verdict holds(const FiniteLattice& L, const Identity& id,
                     const CheckOptions& opt = {}) {
  CompiledIdentity c(id);
  const unsigned vc = c.varcount();
  const std::size_t n = L.size();

  double total = 1.0;
  for (unsigned v = 0; v < vc; ++v) total *= static_cast<double>(n);
  if (total * static_cast<double>(c.cost_per_assignment()) >
      static_cast<double>(opt.budget))
    throw BudgetExceeded("identity scan over budget: ~" +
                         std::to_string(total * c.cost_per_assignment()) +
                         " node evaluations");

  if (vc == 0) {
    Evaluator ev(L, c);
    std::vector<Elt> empty;
    return ev.holds_at(empty) ? Verdict{} : Verdict{VerdictKind::Fails, {}};
  }

  const unsigned shard_vars = vc >= 2 ? 2u : 1u;
  const std::uint64_t shard_count =
      shard_vars == 2 ? static_cast<std::uint64_t>(n) * n : n;
  const unsigned nthreads =
      std::max(1u, std::min(opt.threads, static_cast<unsigned>(shard_count)));

  std::vector<std::optional<std::vector<Elt>>> results(shard_count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{shard_count};

  auto worker = [&]() {
    Evaluator ev(L, c);
    while (true) {
      std::uint64_t s = next.fetch_add(1);
      if (s >= shard_count) return;
      if (s > best.load()) continue;  // a smaller shard already failed
      std::vector<Elt> prefix;
      if (shard_vars == 2)
        prefix = {static_cast<Elt>(s / n), static_cast<Elt>(s % n)};
      else
        prefix = {static_cast<Elt>(s)};
      auto r = detail::scan_shard(L, ev, vc, prefix);
      if (r) {
        results[s] = std::move(r);
        std::uint64_t cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) {
        }
      }
    }
  };

  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (std::uint64_t s = 0; s < shard_count; ++s)
    if (results[s]) return {VerdictKind::Fails, *results[s]};
  return {};
}

/// Single-assignment evaluation of both sides.
inline std::pair<Elt, Elt> eval_sides(const FiniteLattice& L, const Identity& id,
                                      const std::vector<Elt>& assignment) {
  if (assignment.size() < id.varcount)
    throw ArityMismatch("assignment shorter than the variable count");
  CompiledIdentity c(id);
  Evaluator ev(L, c);
  return ev.sides_at(assignment);
}

inline bool holds_at(const FiniteLattice& L, const Identity& id,
                     const std::vector<Elt>& assignment) {
  auto [l, r] = eval_sides(L, id, assignment);
  return id.rel == Rel::Leq ? L.leq(l, r) : l == r;
}

/// Evaluates a single term.
inline Elt eval_term(const FiniteLattice& L, const TermPool& pool, TermId t,
                     const std::vector<Elt>& assignment) {
  Identity id;
  // evaluate t against itself; the compiled program shares the node
  id.pool = pool;
  id.lhs = t;
  id.rhs = t;
  id.rel = Rel::Eq;
  id.varcount = static_cast<unsigned>(assignment.size());
  return eval_sides(L, id, assignment).first;
}

// ---------------------------------------------------------------------------
// The named identities

/// (Veg1):
///   (a1 v b1) ^ (a2 v b2) <=
///     ((a1 v b1) ^ (a1 v b~2)) v ((a2 v b~1) ^ (a2 v b2))
/// with b~i = (b1 v b2) ^ (ai v bi).  Variables a1,a2,b1,b2 = x0..x3.
inline Identity veg1() {
  Identity id;
  TermPool& p = id.pool;
  TermId a1 = p.var(0), a2 = p.var(1), b1 = p.var(2), b2 = p.var(3);
  TermId bsum = p.join({b1, b2});
  TermId s1 = p.join({a1, b1}), s2 = p.join({a2, b2});
  TermId bt1 = p.meet({bsum, s1}), bt2 = p.meet({bsum, s2});
  id.lhs = p.meet({s1, s2});
  id.rhs = p.join({p.meet({s1, p.join({a1, bt2})}),
                   p.meet({p.join({a2, bt1}), s2})});
  id.rel = Rel::Leq;
  id.varcount = 4;
  return id;
}

/// (Veg2):
///   (a1 v a2 v b1) ^ (a1 v a2 v b2) =
///     v_{i,j} ((ai v b~j) ^ (a1 v a2 v b_{3-j}))
/// with b~j = (b1 v b2) ^ (a1 v a2 v bj).  Variables a1,a2,b1,b2 = x0..x3.
inline Identity veg2() {
  Identity id;
  TermPool& p = id.pool;
  TermId a1 = p.var(0), a2 = p.var(1), b1 = p.var(2), b2 = p.var(3);
  TermId bsum = p.join({b1, b2});
  TermId s1 = p.join({a1, a2, b1}), s2 = p.join({a1, a2, b2});
  TermId bt1 = p.meet({bsum, s1}), bt2 = p.meet({bsum, s2});
  // index j pairs b~j with b_{3-j}
  std::vector<TermId> parts;
  for (TermId ai : {a1, a2}) {
    parts.push_back(p.meet({p.join({ai, bt1}), s2}));
    parts.push_back(p.meet({p.join({ai, bt2}), s1}));
  }
  id.lhs = p.meet({s1, s2});
  id.rhs = p.join(parts);
  id.rel = Rel::Eq;
  id.varcount = 4;
  return id;
}

/// The six-variable splitting identity:
///   ^_{j} (x1 v x2 v x3 v yj) <= v_{i} (x^i ^ y^1 ^ y^2 ^ y^3)
/// with x^i = x_{i'} v x_{i''} v y, y^i = y_{i'} v y_{i''} v x,
/// x = x1 v x2 v x3, y = y1 v y2 v y3.  Variables x1..x3,y1..y3 = x0..x5.
inline Identity splitting_b33() {
  Identity id;
  TermPool& p = id.pool;
  TermId x[3] = {p.var(0), p.var(1), p.var(2)};
  TermId y[3] = {p.var(3), p.var(4), p.var(5)};
  TermId xs = p.join({x[0], x[1], x[2]});
  TermId ys = p.join({y[0], y[1], y[2]});
  TermId xhat[3], yhat[3];
  for (int i = 0; i < 3; ++i) {
    int i1 = (i + 1) % 3, i2 = (i + 2) % 3;
    xhat[i] = p.join({x[i1], x[i2], ys});
    yhat[i] = p.join({y[i1], y[i2], xs});
  }
  std::vector<TermId> lhs_parts, rhs_parts;
  for (int j = 0; j < 3; ++j)
    lhs_parts.push_back(p.join({x[0], x[1], x[2], y[j]}));
  for (int i = 0; i < 3; ++i)
    rhs_parts.push_back(p.meet({xhat[i], yhat[0], yhat[1], yhat[2]}));
  id.lhs = p.meet(lhs_parts);
  id.rhs = p.join(rhs_parts);
  id.rel = Rel::Leq;
  id.varcount = 6;
  return id;
}

// ---------------------------------------------------------------------------
// The generated identity family

/// Index vector (m_1, ..., m_d) with d >= 2, every m_i >= 1.
using GazpachoIndex = std::vector<unsigned>;

/// Variable layout: a_{i,j} for i in [d], j in [m_i] (i-major), then b_i for
/// i in [d].  Total sum(m_i) + d variables.
inline Identity gazpacho(const GazpachoIndex& m) {
  const unsigned d = static_cast<unsigned>(m.size());
  if (d < 2) throw BadParams("index needs length at least 2");
  unsigned total_a = 0;
  for (unsigned mi : m) {
    if (mi < 1) throw BadParams("index entries must be positive");
    total_a += mi;
  }
  // branch count d! * prod(m_i); keep the construction itself bounded
  double branches = 1.0;
  for (unsigned k = 2; k <= d; ++k) branches *= k;
  for (unsigned mi : m) branches *= mi;
  if (branches > 1e6) throw BudgetExceeded("generated identity too large");

  Identity id;
  TermPool& p = id.pool;
  std::vector<unsigned> a_base(d);  // a_{i,j} = var(a_base[i-1] + j - 1)
  unsigned off = 0;
  for (unsigned i = 0; i < d; ++i) {
    a_base[i] = off;
    off += m[i];
  }
  auto a_var = [&](unsigned i, unsigned j) { return p.var(a_base[i - 1] + j - 1); };
  auto b_var = [&](unsigned i) { return p.var(total_a + i - 1); };

  // a_i = join of the a_{i,j}; b~i = (join of all b) ^ (a_i v b_i)
  std::vector<TermId> a_term(d + 1), btilde(d + 1), side(d + 1);
  std::vector<TermId> all_b;
  for (unsigned i = 1; i <= d; ++i) all_b.push_back(b_var(i));
  TermId bsum = p.join(all_b);
  for (unsigned i = 1; i <= d; ++i) {
    if (m[i - 1] == 1) {
      a_term[i] = a_var(i, 1);
    } else {
      std::vector<TermId> ks;
      for (unsigned j = 1; j <= m[i - 1]; ++j) ks.push_back(a_var(i, j));
      a_term[i] = p.join(ks);
    }
    side[i] = p.join({a_term[i], b_var(i)});
    btilde[i] = p.meet({bsum, side[i]});
  }
  std::vector<TermId> e_parts;
  for (unsigned i = 1; i <= d; ++i) e_parts.push_back(side[i]);
  TermId e = p.meet(e_parts);
  TermId e_star = p.meet({bsum, e});

  // All sigma in S_d as 1-based arrays, all tau with tau(i) in [m_i].
  std::vector<unsigned> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<TermId> top_parts{e_star};
  do {
    std::vector<unsigned> tau(d + 1, 1);
    while (true) {
      // f_d first, then the downward recursion to f_2; every level j > i is
      // met back in, so all of them are kept.
      std::vector<TermId> f(d + 1, 0);
      {
        unsigned sd = sigma[d - 1];
        f[d] = p.meet({p.join({a_var(sd, tau[sd]), btilde[sigma[0]]}), side[sd]});
      }
      for (unsigned i = d - 1; i >= 2; --i) {
        unsigned si = sigma[i - 1];
        std::vector<TermId> parts;
        parts.push_back(p.join({a_var(si, tau[si]), btilde[sigma[0]]}));
        parts.push_back(side[si]);
        for (unsigned j = i + 1; j <= d; ++j)
          parts.push_back(p.join({a_var(si, tau[si]), f[j]}));
        f[i] = p.meet(parts);
      }
      top_parts.push_back(f[2]);

      // next tau
      unsigned k = 1;
      while (k <= d) {
        if (++tau[k] <= m[k - 1]) break;
        tau[k] = 1;
        ++k;
      }
      if (k > d) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  id.lhs = e;
  id.rhs = p.join(top_parts);
  id.rel = Rel::Leq;
  id.varcount = total_a + d;
  return id;
}

// ---------------------------------------------------------------------------
// The six-element witness in A_U(12), U = {5,6,9,10,11}

/// Evaluates the splitting identity at a fixed six-element assignment inside
/// A_U(12) using pair-set algebra only (the 208012-element lattice is never
/// materialized), and re-validates the three subdivisions that force the
/// pair (1,12) into the left side.
struct Witness12Result {
  PairSet lhs, rhs;
  bool pair_in_lhs = false;
  bool pair_in_rhs = false;
  bool elements_valid = false;      // all six lie in A_U(12)
  bool subdivisions_valid = false;  // each step lies in the claimed element
};

inline Witness12Result eval_witness_12() {
  const unsigned n = 12;
  CambrianSpec s = CambrianSpec::make(
      n, iset_single(5) | iset_single(6) | iset_single(9) | iset_single(10) |
             iset_single(11));
  auto ji = [&](int i, int j) { return cambrian_ji(s, i, j); };
  auto vee = [&](std::vector<PairSet> xs) {
    PairSet acc(n);
    for (const auto& x : xs) acc = cambrian_join(acc, x);
    return acc;
  };

  PairSet a1 = vee({ji(1, 5), ji(2, 3), ji(8, 12), ji(10, 11)});
  PairSet a2 = vee({ji(3, 4), ji(5, 9)});
  PairSet a3 = vee({ji(4, 8), ji(9, 10)});
  PairSet b1 = ji(1, 2), b2 = ji(6, 7), b3 = ji(11, 12);

  Witness12Result r{PairSet(n), PairSet(n)};
  r.elements_valid = true;
  for (const PairSet& e : {a1, a2, a3, b1, b2, b3})
    if (!in_AU(s, e)) r.elements_valid = false;

  PairSet xs = vee({a1, a2, a3});
  PairSet ys = vee({b1, b2, b3});
  PairSet xhat[3] = {vee({a2, a3, ys}), vee({a1, a3, ys}), vee({a1, a2, ys})};
  PairSet yhat[3] = {vee({b2, b3, xs}), vee({b1, b3, xs}), vee({b1, b2, xs})};

  r.lhs = vee({xs, b1}) & vee({xs, b2}) & vee({xs, b3});
  PairSet rhs(n);
  for (int i = 0; i < 3; ++i)
    rhs = cambrian_join(rhs, xhat[i] & yhat[0] & yhat[1] & yhat[2]);
  r.rhs = rhs;
  r.pair_in_lhs = r.lhs.contains(1, 12);
  r.pair_in_rhs = r.rhs.contains(1, 12);

  struct Step {
    int from, to;
    const PairSet* in;
  };
  std::vector<std::vector<Step>> subdivisions = {
      {{1, 2, &b1}, {2, 3, &a1}, {3, 4, &a2}, {4, 8, &a3}, {8, 12, &a1}},
      {{1, 5, &a1}, {5, 6, &a2}, {6, 7, &b2}, {7, 8, &a3}, {8, 12, &a1}},
      {{1, 5, &a1}, {5, 9, &a2}, {9, 10, &a3}, {10, 11, &a1}, {11, 12, &b3}}};
  r.subdivisions_valid = true;
  for (const auto& sub : subdivisions)
    for (const auto& st : sub)
      if (!st.in->contains(st.from, st.to)) r.subdivisions_valid = false;
  return r;
}

// ---------------------------------------------------------------------------
// Family verification over small Tamari lattices

struct FamilyCheckEntry {
  GazpachoIndex index;
  unsigned tamari_n = 0;
  bool holds = false;
  double seconds = 0.0;
};

struct FamilyCheckReport {
  std::vector<FamilyCheckEntry> entries;
  bool all_hold = true;
};

/// Verifies the generated identities on small Tamari lattices: (1,1) and
/// (2,1) up to A(n_max), (2,2) and (1,1,1) on A(4).
inline FamilyCheckReport check_gazpacho_family(unsigned n_max, const CheckOptions& opt = {}) {
  FamilyCheckReport rep;
  auto run = [&](GazpachoIndex idx, unsigned n) {
    auto view = CambrianView::build(CambrianSpec::tamari(n));
    auto L = view.to_lattice();
    Identity id = gazpacho(idx);
    auto t0 = std::chrono::steady_clock::now();
    Verdict v = holds(L, id, opt);
    auto t1 = std::chrono::steady_clock::now();
    FamilyCheckEntry e;
    e.index = std::move(idx);
    e.tamari_n = n;
    e.holds = v.holds();
    e.seconds = std::chrono::duration<double>(t1 - t0).count();
    rep.all_hold = rep.all_hold && e.holds;
    rep.entries.push_back(std::move(e));
  };
  for (unsigned n = 2; n <= n_max; ++n) run({1, 1}, n);
  for (unsigned n = 2; n <= n_max; ++n) run({2, 1}, n);
  run({2, 2}, 4);
  run({1, 1, 1}, 4);
  return rep;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_IDENTITIES_HPP_
