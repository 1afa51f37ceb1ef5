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

#ifndef INCLUDE_LATTICEFORGE_PAIRSET_HPP_
#define INCLUDE_LATTICEFORGE_PAIRSET_HPP_

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/errors.hpp"

namespace latticeforge {

/// A subset of J_n = {(i,j) : 1 <= i < j <= n}, the ground set of inversion
/// sets.  Stored as one row mask per left index: row(i) has bit j-1 set when
/// (i,j) is a member.  Works for n up to 64 without materializing anything;
/// closed sets are exactly the transitive relations.
class PairSet {
 public:
  PairSet() : n_(0) {}
  explicit PairSet(unsigned n) : n_(n), rows_(n, 0) {
    if (n > 64) throw SizeLimit("pair sets support ground size at most 64");
  }

  unsigned ground() const { return n_; }

  static bool valid_pair(unsigned n, int i, int j) {
    return 1 <= i && i < j && j <= static_cast<int>(n);
  }

  bool contains(int i, int j) const {
    return (rows_[i - 1] >> (j - 1)) & 1;
  }
  void add(int i, int j) {
    if (!valid_pair(n_, i, j)) throw BadParams("pair out of range");
    rows_[i - 1] |= std::uint64_t{1} << (j - 1);
  }
  void remove(int i, int j) { rows_[i - 1] &= ~(std::uint64_t{1} << (j - 1)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto r : rows_) c += static_cast<std::size_t>(std::popcount(r));
    return c;
  }
  bool empty() const {
    for (auto r : rows_)
      if (r) return false;
    return true;
  }

  bool operator==(const PairSet& o) const {
    return n_ == o.n_ && rows_ == o.rows_;
  }

  bool subset_of(const PairSet& o) const {
    check_ground(o);
    for (unsigned i = 0; i < n_; ++i)
      if (rows_[i] & ~o.rows_[i]) return false;
    return true;
  }

  PairSet operator&(const PairSet& o) const {
    check_ground(o);
    PairSet r(n_);
    for (unsigned i = 0; i < n_; ++i) r.rows_[i] = rows_[i] & o.rows_[i];
    return r;
  }
  PairSet operator|(const PairSet& o) const {
    check_ground(o);
    PairSet r(n_);
    for (unsigned i = 0; i < n_; ++i) r.rows_[i] = rows_[i] | o.rows_[i];
    return r;
  }

  static PairSet full(unsigned n) {
    PairSet r(n);
    for (unsigned i = 0; i < n; ++i)
      r.rows_[i] = mask_above(n, i + 1);
    return r;
  }

  /// Complement within J_n.
  PairSet complement() const {
    PairSet r(n_);
    for (unsigned i = 0; i < n_; ++i)
      r.rows_[i] = ~rows_[i] & mask_above(n_, i + 1);
    return r;
  }

  /// Closed = transitive as a relation on [n].
  bool is_transitive() const {
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t reach = 0;
      std::uint64_t row = rows_[i];
      while (row) {
        unsigned j = static_cast<unsigned>(std::countr_zero(row));
        row &= row - 1;
        reach |= rows_[j];
      }
      if (reach & ~rows_[i]) return false;
    }
    return true;
  }

  bool is_clopen() const {
    return is_transitive() && complement().is_transitive();
  }

  /// Transitive closure.  Pairs always point upward, so one descending sweep
  /// suffices.
  PairSet closure() const {
    PairSet r = *this;
    for (unsigned i = n_; i-- > 0;) {
      std::uint64_t row = r.rows_[i];
      std::uint64_t acc = row;
      while (row) {
        unsigned j = static_cast<unsigned>(std::countr_zero(row));
        row &= row - 1;
        acc |= r.rows_[j];
      }
      r.rows_[i] = acc;
    }
    return r;
  }

  /// Largest open subset: the complement of the closure of the complement.
  PairSet interior() const { return complement().closure().complement(); }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (unsigned i = 0; i < n_; ++i) {
      std::uint64_t row = rows_[i];
      while (row) {
        unsigned j = static_cast<unsigned>(std::countr_zero(row));
        row &= row - 1;
        out.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
      }
    }
    return out;  // lexicographically sorted by construction
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [i, j] : pairs()) {
      if (!first) s += ",";
      first = false;
      s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    return s + "}";
  }

  /// Canonical order used for deterministic element numbering: by
  /// cardinality, then by lowest differing pair.  Cardinality-first makes
  /// ids a linear extension of inclusion.
  static bool canonical_less(const PairSet& a, const PairSet& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (unsigned i = 0; i < a.n_; ++i)
      if (a.rows_[i] != b.rows_[i]) {
        // The set owning the lowest differing pair comes first.
        std::uint64_t diff = a.rows_[i] ^ b.rows_[i];
        return a.rows_[i] & (diff & -diff);
      }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL ^ n_;
    for (auto r : rows_) {
      h ^= static_cast<std::size_t>(r) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  void check_ground(const PairSet& o) const {
    if (n_ != o.n_) throw BadParams("pair sets over different ground sizes");
  }

  static std::uint64_t mask_above(unsigned n, unsigned i) {
    // bits for j in (i, n], zero-based bit j-1
    std::uint64_t all = (n >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t below = (std::uint64_t{1} << i) - 1;
    return all & ~below;
  }

  unsigned n_;
  std::vector<std::uint64_t> rows_;
};

struct PairSetHash {
  std::size_t operator()(const PairSet& p) const { return p.hash(); }
};

/// Inversion set of a permutation given in one-line notation (1-based
/// values): (i,j) is an inversion when i appears after j.
inline PairSet inversions(const std::vector<int>& sigma) {
  const unsigned n = static_cast<unsigned>(sigma.size());
  std::vector<int> pos(n + 1, 0);
  std::vector<bool> seen(n + 1, false);
  for (unsigned k = 0; k < n; ++k) {
    int v = sigma[k];
    if (v < 1 || v > static_cast<int>(n) || seen[v])
      throw BadParams("not a permutation of [n]");
    seen[v] = true;
    pos[v] = static_cast<int>(k);
  }
  PairSet r(n);
  for (int i = 1; i <= static_cast<int>(n); ++i)
    for (int j = i + 1; j <= static_cast<int>(n); ++j)
      if (pos[i] > pos[j]) r.add(i, j);
  return r;
}

/// Inverse of the inversion bijection; only clopen sets are inversion sets.
inline std::vector<int> permutation_of(const PairSet& x) {
  if (!x.is_clopen()) throw NotClopen("pair set is not clopen");
  const unsigned n = x.ground();
  std::vector<int> sigma(n);
  for (unsigned k = 0; k < n; ++k) sigma[k] = static_cast<int>(k + 1);
  // i precedes j (for i < j) exactly when (i,j) is not an inversion; for a
  // clopen set this comparator is a total order.
  std::sort(sigma.begin(), sigma.end(), [&](int a, int b) {
    if (a < b) return !x.contains(a, b);
    return x.contains(b, a);
  });
  return sigma;
}

inline std::string permutation_word(const std::vector<int>& sigma) {
  std::string s;
  bool wide = sigma.size() > 9;
  for (std::size_t k = 0; k < sigma.size(); ++k) {
    if (wide && k) s += ".";
    s += std::to_string(sigma[k]);
  }
  return s;
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_PAIRSET_HPP_
