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

#ifndef INCLUDE_LATTICEFORGE_JSON_IO_HPP_
#define INCLUDE_LATTICEFORGE_JSON_IO_HPP_

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latticeforge/lattice.hpp"
#include "latticeforge/measures.hpp"
#include "latticeforge/pairset.hpp"
#include "latticeforge/term.hpp"

namespace latticeforge {

/// A tabulated lattice plus, when it came from a pair-set family, the
/// element payloads needed to reconnect ids with inversion sets.
struct StoredLattice {
  FiniteLattice lattice;
  unsigned pairs_n = 0;            // 0 when no payloads
  std::vector<PairSet> elements;   // per element id, when pairs_n > 0
};

/// Schema: {"n": size, "names": [...], "covers": [[lower,upper], ...]},
/// optionally {"pairs_n": g, "elements": [[[i,j],...], ...]}.  Covers only;
/// the reader closes the relation and re-validates lattice-ness.
inline nlohmann::json lattice_to_json(const FiniteLattice& L) {
  nlohmann::json j;
  j["n"] = L.size();
  if (!L.names().empty()) j["names"] = L.names();
  std::vector<std::pair<Elt, Elt>> covers;
  for (Elt x = 0; x < L.size(); ++x)
    for (Elt y : L.upper_covers(x)) covers.emplace_back(x, y);
  std::sort(covers.begin(), covers.end());
  auto& arr = j["covers"] = nlohmann::json::array();
  for (auto [x, y] : covers) arr.push_back({x, y});
  return j;
}

inline nlohmann::json lattice_to_json(const FiniteLattice& L, unsigned pairs_n,
                                      const std::vector<PairSet>& elements) {
  nlohmann::json j = lattice_to_json(L);
  j["pairs_n"] = pairs_n;
  auto& arr = j["elements"] = nlohmann::json::array();
  for (const PairSet& e : elements) {
    nlohmann::json one = nlohmann::json::array();
    for (auto [a, b] : e.pairs()) one.push_back({a, b});
    arr.push_back(std::move(one));
  }
  return j;
}

inline StoredLattice lattice_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("covers"))
    throw ParseError("lattice json needs 'n' and 'covers'");
  StoredLattice out;
  std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::pair<Elt, Elt>> pairs;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw ParseError("bad cover entry");
    pairs.emplace_back(c[0].get<Elt>(), c[1].get<Elt>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
  out.lattice = FiniteLattice::from_order(n, pairs, std::move(names));
  if (j.contains("pairs_n")) {
    out.pairs_n = j.at("pairs_n").get<unsigned>();
    const auto& arr = j.at("elements");
    if (arr.size() != n) throw ParseError("element payload count mismatch");
    for (const auto& one : arr) {
      PairSet e(out.pairs_n);
      for (const auto& pr : one) e.add(pr[0].get<int>(), pr[1].get<int>());
      out.elements.push_back(std::move(e));
    }
  }
  return out;
}

inline void write_lattice_file(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw BadParams("cannot write " + path);
  f << j.dump(1) << "\n";
}

inline StoredLattice read_lattice_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BadParams("cannot read " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  return lattice_from_json(j);
}

/// Measure schema: {"chain": [...], "u": [...], "target": <lattice json>,
/// "values": [[x, y, elementId], ...]} with x, y chain labels.
inline nlohmann::json measure_to_json(const PolarizedMeasure& m,
                                      const nlohmann::json& target_json) {
  nlohmann::json j;
  j["chain"] = m.chain;
  j["u"] = m.u_labels;
  j["target"] = target_json;
  auto& vals = j["values"] = nlohmann::json::array();
  for (std::size_t i = 0; i < m.points(); ++i)
    for (std::size_t jj = i + 1; jj < m.points(); ++jj)
      vals.push_back({m.chain[i], m.chain[jj], m.at(i, jj)});
  return j;
}

/// The lattice the measure targets is embedded in the file; the caller owns
/// the returned pair and must keep the lattice alive alongside the measure.
inline std::pair<PolarizedMeasure, StoredLattice> measure_from_json(const nlohmann::json& j) {
  for (const char* key : {"chain", "u", "target", "values"})
    if (!j.contains(key)) throw ParseError(std::string("measure json needs '") + key + "'");
  auto stored = lattice_from_json(j.at("target"));
  PolarizedMeasure m;
  m.chain = j.at("chain").get<std::vector<int>>();
  m.u_labels = j.at("u").get<std::vector<int>>();
  const std::size_t k = m.chain.size();
  m.values.assign(k * (k - 1) / 2, 0);
  auto pos_of = [&](int label) -> std::size_t {
    for (std::size_t i = 0; i < k; ++i)
      if (m.chain[i] == label) return i;
    throw ParseError("value label outside the chain");
  };
  for (const auto& v : j.at("values")) {
    if (!v.is_array() || v.size() != 3) throw ParseError("bad measure value entry");
    std::size_t x = pos_of(v[0].get<int>()), y = pos_of(v[1].get<int>());
    if (x >= y) throw ParseError("measure value on a non-strict pair");
    m.values[PolarizedMeasure::pair_index(k, x, y)] = v[2].get<Elt>();
  }
  std::pair<PolarizedMeasure, StoredLattice> out{std::move(m), std::move(stored)};
  out.first.target = &out.second.lattice;  // fixed up by the caller after moving
  return out;
}

/// Identity schema: {"vars": k, "lhs": "...", "rhs": "...", "rel": "leq"|"eq"}.
inline nlohmann::json identity_to_json(const Identity& id) {
  nlohmann::json j;
  j["vars"] = id.varcount;
  j["lhs"] = id.pool.to_text(id.lhs);
  j["rhs"] = id.pool.to_text(id.rhs);
  j["rel"] = id.rel == Rel::Leq ? "leq" : "eq";
  return j;
}

inline Identity identity_from_json(const nlohmann::json& j) {
  for (const char* key : {"vars", "lhs", "rhs", "rel"})
    if (!j.contains(key)) throw ParseError(std::string("identity json needs '") + key + "'");
  Identity id;
  id.varcount = j.at("vars").get<unsigned>();
  id.lhs = id.pool.parse(j.at("lhs").get<std::string>());
  id.rhs = id.pool.parse(j.at("rhs").get<std::string>());
  std::string rel = j.at("rel").get<std::string>();
  if (rel == "leq")
    id.rel = Rel::Leq;
  else if (rel == "eq")
    id.rel = Rel::Eq;
  else
    throw ParseError("rel must be 'leq' or 'eq'");
  return id;
}

inline Identity read_identity_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw BadParams("cannot read " + path);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad json: ") + e.what());
  }
  return identity_from_json(j);
}

}  // namespace latticeforge

#endif  // INCLUDE_LATTICEFORGE_JSON_IO_HPP_
