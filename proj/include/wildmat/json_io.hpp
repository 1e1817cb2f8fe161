// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WILDMAT_JSON_IO_HPP
#define WILDMAT_JSON_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wildmat/constructions.hpp"
#include "wildmat/matroid.hpp"
#include "wildmat/multigraph.hpp"
#include "wildmat/periodic.hpp"
#include "wildmat/thin_sums.hpp"

namespace wildmat {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matroids: { "ground": [labels...], "bases": [[labels...], ...] }
// Families are emitted in the canonical subset order.
// ---------------------------------------------------------------------------

inline Json matroid_to_json(const FiniteMatroid& m) {
  Json j;
  j["ground"] = m.labels();
  Json bases = Json::array();
  for (Mask b : m.bases()) {
    Json one = Json::array();
    for (int e : mask_elements(b)) one.push_back(m.labels()[e]);
    bases.push_back(one);
  }
  j["bases"] = bases;
  return j;
}

inline FiniteMatroid matroid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("bases"))
    throw InputError("matroid file needs \"ground\" and \"bases\"");
  std::vector<std::string> labels = j["ground"].get<std::vector<std::string>>();
  auto indexOf = [&](const std::string& l) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == l) return static_cast<int>(i);
    throw InputError("base references unknown element: " + l);
  };
  std::vector<Mask> bases;
  for (const auto& b : j["bases"]) {
    Mask mask = 0;
    for (const auto& l : b) mask |= Mask(1) << indexOf(l.get<std::string>());
    bases.push_back(mask);
  }
  return FiniteMatroid(std::move(labels), std::move(bases));
}

// Raw parse that skips matroid validation: used by verify-axioms, which must
// report axiom violations rather than refuse the file.
struct RawBaseFile {
  std::vector<std::string> labels;
  std::vector<Mask> bases;
};

inline RawBaseFile raw_bases_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ground") || !j.contains("bases"))
    throw InputError("matroid file needs \"ground\" and \"bases\"");
  RawBaseFile out;
  out.labels = j["ground"].get<std::vector<std::string>>();
  auto indexOf = [&](const std::string& l) {
    for (std::size_t i = 0; i < out.labels.size(); ++i)
      if (out.labels[i] == l) return static_cast<int>(i);
    throw InputError("base references unknown element: " + l);
  };
  for (const auto& b : j["bases"]) {
    Mask mask = 0;
    for (const auto& l : b) mask |= Mask(1) << indexOf(l.get<std::string>());
    out.bases.push_back(mask);
  }
  return out;
}

inline Json set_family_to_json(const FiniteMatroid& m, const SetFamily& fam) {
  Json j;
  j["ground"] = m.labels();
  Json sets = Json::array();
  for (Mask s : fam.members) {
    Json one = Json::array();
    for (int e : mask_elements(s)) one.push_back(m.labels()[e]);
    sets.push_back(one);
  }
  j["sets"] = sets;
  return j;
}

// ---------------------------------------------------------------------------
// Eventually periodic edge sets:
// { "family": name, "exceptional": [ids], "onset": n, "period": p,
//   "pattern": [[slot, residue], ...] }
// ---------------------------------------------------------------------------

inline Json edge_set_to_json(const EdgeSet& s) {
  EdgeSet norm = s.normalized();
  const RayedGraphFamily& fam = norm.family();
  Json j;
  j["family"] = fam.name;
  Json exc = Json::array();
  for (EdgeId e : norm.exceptional()) exc.push_back(fam.edge_name(e));
  j["exceptional"] = exc;
  j["onset"] = norm.onset();
  j["period"] = norm.period();
  Json pat = Json::array();
  for (auto [slot, r] : norm.pattern())
    pat.push_back(Json::array({fam.slots[slot].name, r}));
  j["pattern"] = pat;
  return j;
}

inline EdgeSet edge_set_from_json(const Json& j) {
  for (const char* k : {"family", "exceptional", "onset", "period", "pattern"})
    if (!j.contains(k))
      throw InputError(std::string("edge set file needs \"") + k + "\"");
  const RayedGraphFamily& fam = builtin_family(j["family"].get<std::string>());
  std::set<EdgeId> exc;
  for (const auto& name : j["exceptional"])
    exc.insert(fam.parse_edge(name.get<std::string>()));
  std::set<std::pair<int, int>> pat;
  for (const auto& entry : j["pattern"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw InputError("pattern entries are [slot, residue] pairs");
    pat.insert({fam.slot_index(entry[0].get<std::string>()),
                entry[1].get<int>()});
  }
  return EdgeSet(&fam, std::move(exc), j["onset"].get<int>(),
                 j["period"].get<int>(), std::move(pat));
}

// ---------------------------------------------------------------------------
// Thin coefficients:
// { "family": "RAYED_G", "explicit": { edgeId: "num/den", ... },
//   "periodic": [{ "slot", "residue", "period", "onset", "value" }, ...] }
// ---------------------------------------------------------------------------

inline Json thin_coefficients_to_json(const ThinCoefficients<Rational>& lam) {
  const RayedGraphFamily& fam = *lam.fam;
  Json j;
  j["family"] = fam.name;
  Json ex = Json::object();
  for (const auto& [e, v] : lam.explicitValues)
    ex[fam.edge_name(e)] = rational_to_string(v);
  j["explicit"] = ex;
  Json per = Json::array();
  for (const auto& cls : lam.periodic) {
    Json one;
    one["slot"] = fam.slots[cls.slot].name;
    one["residue"] = cls.residue;
    one["period"] = cls.period;
    one["onset"] = cls.onset;
    one["value"] = rational_to_string(cls.value);
    per.push_back(one);
  }
  j["periodic"] = per;
  return j;
}

inline ThinCoefficients<Rational> thin_coefficients_from_json(const Json& j) {
  ThinCoefficients<Rational> lam;
  std::string famName =
      j.contains("family") ? j["family"].get<std::string>() : "RAYED_G";
  lam.fam = &builtin_family(famName);
  if (j.contains("explicit"))
    for (auto it = j["explicit"].begin(); it != j["explicit"].end(); ++it)
      lam.explicitValues[lam.fam->parse_edge(it.key())] =
          rational_from_string(it.value().get<std::string>());
  if (j.contains("periodic"))
    for (const auto& one : j["periodic"]) {
      typename ThinCoefficients<Rational>::PeriodicClass cls;
      cls.slot = lam.fam->slot_index(one["slot"].get<std::string>());
      cls.residue = one["residue"].get<int>();
      cls.period = one.contains("period") ? one["period"].get<int>() : 1;
      cls.onset = one["onset"].get<int>();
      cls.value = rational_from_string(one["value"].get<std::string>());
      if (cls.period < 1 || cls.residue < 0 || cls.residue >= cls.period)
        throw InputError("bad periodic coefficient class");
      lam.periodic.push_back(cls);
    }
  return lam;
}

// ---------------------------------------------------------------------------
// Finite multigraphs: { "vertices": [names], "edges": [[u, v], ...],
//   "labels": [edge labels] (optional) }
// ---------------------------------------------------------------------------

inline Json multigraph_to_json(const Multigraph& g) {
  Json j;
  Json vs = Json::array();
  for (int v = 0; v < g.nVertices; ++v) vs.push_back("v" + std::to_string(v));
  j["vertices"] = vs;
  Json es = Json::array();
  for (auto [u, v] : g.edges)
    es.push_back(Json::array(
        {"v" + std::to_string(u), "v" + std::to_string(v)}));
  j["edges"] = es;
  j["labels"] = g.labels_or_default();
  return j;
}

inline Multigraph multigraph_from_json(const Json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw InputError("graph file needs \"vertices\" and \"edges\"");
  Multigraph g;
  std::vector<std::string> names =
      j["vertices"].get<std::vector<std::string>>();
  g.nVertices = static_cast<int>(names.size());
  auto indexOf = [&](const std::string& n) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return static_cast<int>(i);
    throw InputError("edge references unknown vertex: " + n);
  };
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("edges are [u, v] pairs");
    g.edges.push_back({indexOf(e[0].get<std::string>()),
                       indexOf(e[1].get<std::string>())});
  }
  if (j.contains("labels"))
    g.edgeLabels = j["labels"].get<std::vector<std::string>>();
  if (!g.edgeLabels.empty() && g.edgeLabels.size() != g.edges.size())
    throw InputError("label count does not match edge count");
  return g;
}

// ---------------------------------------------------------------------------
// Certificates.
// ---------------------------------------------------------------------------

inline Json certificate_to_json(const WildnessCertificate& cert) {
  Json j;
  j["tag"] = cert.tag;
  j["family"] = cert.familyName;
  j["tool_version"] = cert.toolVersion;
  j["wild"] = cert.wild;
  j["intersection"] = cert.intersectionInfinite ? "INFINITE" : "FINITE";
  j["circuit_C"] = edge_set_to_json(cert.circuitC);
  j["cocircuit_D"] = edge_set_to_json(cert.cocircuitD);
  if (cert.tag == "MPLUS_G") {
    j["n"] = cert.mplusN;
    j["circuit_O"] = edge_set_to_json(*cert.circuitO);
    j["base_B"] = edge_set_to_json(*cert.baseB);
  } else {
    j["depth"] = cert.depth;
    j["base_B1"] = edge_set_to_json(*cert.baseB1);
    j["base_B2"] = edge_set_to_json(*cert.baseB2);
    Json covers = Json::array();
    for (const auto& w : cert.covers) {
      Json one;
      one["e"] = cert.circuitC.family().edge_name(w.e);
      one["I1"] = edge_set_to_json(w.i1);
      one["I2"] = edge_set_to_json(w.i2);
      one["pass"] = w.pass;
      covers.push_back(one);
    }
    j["covers"] = covers;
    Json counting = Json::array();
    for (const auto& row : cert.counting) {
      Json one;
      one["n"] = row.n;
      one["lhs"] = row.lhs;
      one["rhs"] = row.rhs;
      one["two_edges_uncoverable"] = row.twoEdgesUncoverable;
      counting.push_back(one);
    }
    j["counting"] = counting;
  }
  Json checks = Json::array();
  for (const auto& c : cert.checks) {
    Json one;
    one["name"] = c.name;
    one["pass"] = c.pass;
    if (!c.detail.empty()) one["detail"] = c.detail;
    checks.push_back(one);
  }
  j["checks"] = checks;
  j["notes"] = cert.notes;
  return j;
}

inline WildnessCertificate certificate_from_json(const Json& j) {
  WildnessCertificate cert;
  for (const char* k : {"tag", "family", "circuit_C", "cocircuit_D"})
    if (!j.contains(k))
      throw InputError(std::string("certificate needs \"") + k + "\"");
  cert.tag = j["tag"].get<std::string>();
  cert.familyName = j["family"].get<std::string>();
  if (j.contains("tool_version"))
    cert.toolVersion = j["tool_version"].get<std::string>();
  cert.circuitC = edge_set_from_json(j["circuit_C"]);
  cert.cocircuitD = edge_set_from_json(j["cocircuit_D"]);
  if (cert.tag == "MPLUS_G") {
    if (!j.contains("circuit_O") || !j.contains("base_B"))
      throw InputError("MPLUS_G certificate needs circuit_O and base_B");
    cert.mplusN = j.contains("n") ? j["n"].get<int>() : 0;
    cert.circuitO = edge_set_from_json(j["circuit_O"]);
    cert.baseB = edge_set_from_json(j["base_B"]);
  } else if (cert.tag == "UNION_H") {
    for (const char* k : {"base_B1", "base_B2", "covers", "counting"})
      if (!j.contains(k))
        throw InputError(std::string("UNION_H certificate needs \"") + k +
                         "\"");
    cert.depth = j.contains("depth") ? j["depth"].get<int>() : 0;
    cert.baseB1 = edge_set_from_json(j["base_B1"]);
    cert.baseB2 = edge_set_from_json(j["base_B2"]);
    const RayedGraphFamily& fam = builtin_family(cert.familyName);
    for (const auto& one : j["covers"]) {
      CoverWitness w;
      w.e = fam.parse_edge(one["e"].get<std::string>());
      w.i1 = edge_set_from_json(one["I1"]);
      w.i2 = edge_set_from_json(one["I2"]);
      cert.covers.push_back(std::move(w));
    }
    for (const auto& one : j["counting"]) {
      CountingRow row;
      row.n = one["n"].get<int>();
      row.lhs = one["lhs"].get<long long>();
      row.rhs = one["rhs"].get<long long>();
      row.twoEdgesUncoverable = one["two_edges_uncoverable"].get<bool>();
      cert.counting.push_back(row);
    }
  } else {
    throw InputError("unknown certificate tag: " + cert.tag);
  }
  if (j.contains("notes"))
    cert.notes = j["notes"].get<std::vector<std::string>>();
  return cert;
}

// ---------------------------------------------------------------------------
// File helpers. Emission is canonical: normalized objects, two-space indent,
// one trailing newline.
// ---------------------------------------------------------------------------

inline std::string to_canonical_string(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("parse error in " + path + ": " + e.what());
  }
  return j;
}

inline void save_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << to_canonical_string(j);
}

}  // namespace wildmat

#endif  // WILDMAT_JSON_IO_HPP
