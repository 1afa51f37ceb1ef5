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

#ifndef INCLUDE_LATTICEFORGE_TERM_HPP_
#define INCLUDE_LATTICEFORGE_TERM_HPP_

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latticeforge/errors.hpp"

namespace latticeforge {

enum class TermOp : std::uint8_t { Var, Meet, Join };

using TermId = std::uint32_t;

/// Hash-consed arena of lattice terms.  Structurally equal subterms share a
/// node, so the heavily repetitive generated identities evaluate as DAGs.
class TermPool {
 public:
  TermId var(unsigned index) {
    return intern(TermOp::Var, index, {});
  }

  TermId meet(std::vector<TermId> kids) {
    if (kids.size() < 2) throw ArityMismatch("meet needs at least two arguments");
    return intern(TermOp::Meet, 0, std::move(kids));
  }

  TermId join(std::vector<TermId> kids) {
    if (kids.size() < 2) throw ArityMismatch("join needs at least two arguments");
    return intern(TermOp::Join, 0, std::move(kids));
  }

  TermOp op(TermId t) const { return nodes_[t].op; }
  unsigned var_index(TermId t) const { return nodes_[t].var; }
  const std::vector<TermId>& kids(TermId t) const { return nodes_[t].kids; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Number of distinct nodes reachable from t.
  std::size_t reachable_count(TermId t) const {
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<TermId> stack{t};
    std::size_t c = 0;
    while (!stack.empty()) {
      TermId x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = true;
      ++c;
      for (TermId k : nodes_[x].kids) stack.push_back(k);
    }
    return c;
  }

  /// Largest variable index reachable from t, plus one.
  unsigned var_count(TermId t) const {
    unsigned hi = 0;
    std::vector<bool> seen(nodes_.size(), false);
    std::vector<TermId> stack{t};
    while (!stack.empty()) {
      TermId x = stack.back();
      stack.pop_back();
      if (seen[x]) continue;
      seen[x] = true;
      if (nodes_[x].op == TermOp::Var) hi = std::max(hi, nodes_[x].var + 1);
      for (TermId k : nodes_[x].kids) stack.push_back(k);
    }
    return hi;
  }

  /// Parenthesized n-ary text: (meet (join x0 x1) x2).
  std::string to_text(TermId t) const {
    const Node& n = nodes_[t];
    switch (n.op) {
      case TermOp::Var:
        return "x" + std::to_string(n.var);
      case TermOp::Meet:
      case TermOp::Join: {
        std::string s = n.op == TermOp::Meet ? "(meet" : "(join";
        for (TermId k : n.kids) s += " " + to_text(k);
        return s + ")";
      }
    }
    return {};
  }

  TermId parse(const std::string& text) {
    std::size_t pos = 0;
    TermId t = parse_expr(text, pos);
    skip_ws(text, pos);
    if (pos != text.size()) throw ParseError("trailing characters in term");
    return t;
  }

  /// Structure-preserving copy of t with every variable i replaced by
  /// variable mapping[i].
  TermId substitute(TermId t, const std::vector<unsigned>& mapping) {
    const Node& n = nodes_[t];
    if (n.op == TermOp::Var) {
      if (n.var >= mapping.size()) throw ArityMismatch("substitution map too short");
      return var(mapping[n.var]);
    }
    std::vector<TermId> ks;
    ks.reserve(n.kids.size());
    for (TermId k : n.kids) ks.push_back(substitute(k, mapping));
    return n.op == TermOp::Meet ? meet(std::move(ks)) : join(std::move(ks));
  }

  /// Swaps meets and joins throughout.
  TermId dualize(TermId t) {
    const Node& n = nodes_[t];
    if (n.op == TermOp::Var) return t;
    std::vector<TermId> ks;
    ks.reserve(n.kids.size());
    for (TermId k : n.kids) ks.push_back(dualize(k));
    return n.op == TermOp::Meet ? join(std::move(ks)) : meet(std::move(ks));
  }

 private:
  struct Node {
    TermOp op;
    unsigned var;
    std::vector<TermId> kids;
  };

  TermId intern(TermOp op, unsigned var, std::vector<TermId> kids) {
    Key key{op, var, kids};
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    TermId id = static_cast<TermId>(nodes_.size());
    nodes_.push_back({op, var, std::move(kids)});
    interned_.emplace(std::move(key), id);
    return id;
  }

  static void skip_ws(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  TermId parse_expr(const std::string& s, std::size_t& pos) {
    skip_ws(s, pos);
    if (pos >= s.size()) throw ParseError("unexpected end of term");
    if (s[pos] == '(') {
      ++pos;
      skip_ws(s, pos);
      std::size_t start = pos;
      while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
      std::string head = s.substr(start, pos - start);
      bool is_meet = head == "meet";
      if (!is_meet && head != "join") throw ParseError("expected meet or join, got '" + head + "'");
      std::vector<TermId> ks;
      while (true) {
        skip_ws(s, pos);
        if (pos >= s.size()) throw ParseError("unterminated term");
        if (s[pos] == ')') {
          ++pos;
          break;
        }
        ks.push_back(parse_expr(s, pos));
      }
      if (ks.size() < 2) throw ParseError("meet/join needs at least two arguments");
      return is_meet ? meet(std::move(ks)) : join(std::move(ks));
    }
    if (s[pos] == 'x') {
      ++pos;
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw ParseError("variable needs an index");
      return var(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
    }
    throw ParseError(std::string("unexpected character '") + s[pos] + "'");
  }

  struct Key {
    TermOp op;
    unsigned var;
    std::vector<TermId> kids;
    bool operator<(const Key& o) const {
      if (op != o.op) return op < o.op;
      if (var != o.var) return var < o.var;
      return kids < o.kids;
    }
  };

  std::vector<Node> nodes_;
  std::map<Key, TermId> interned_;
};

enum class Rel : std::uint8_t { Leq, Eq };

/// An (in)equality between two terms over a shared pool.
struct Identity {
  TermPool pool;
  TermId lhs = 0;
  TermId rhs = 0;
  Rel rel = Rel::Leq;
  unsigned varcount = 0;
};

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_TERM_HPP_
