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

#ifndef WILDMAT_MATROID_OPS_HPP
#define WILDMAT_MATROID_OPS_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "wildmat/matroid.hpp"

namespace wildmat {

// M-: bases are the bases of M with one point removed. Requires that the
// empty set is not a base.
inline FiniteMatroid minus(const FiniteMatroid& m) {
  if (m.rank() == 0)
    throw PreconditionError("the empty set is a base of M");
  std::vector<Mask> nb;
  for (Mask b : m.bases())
    for (Mask mm = b; mm; mm &= mm - 1) nb.push_back(b & ~(mm & -mm));
  sort_family(nb);
  return FiniteMatroid(m.labels(), std::move(nb));
}

// M+: bases are the bases of M with one point added. Requires that the
// ground set is not a base.
inline FiniteMatroid plus(const FiniteMatroid& m) {
  if (m.rank() == m.size())
    throw PreconditionError("E is a base");
  std::vector<Mask> nb;
  for (Mask b : m.bases())
    for (Mask mm = m.full() & ~b; mm; mm &= mm - 1) nb.push_back(b | (mm & -mm));
  sort_family(nb);
  return FiniteMatroid(m.labels(), std::move(nb));
}

// C(M-) = B(M) together with the M-circuits that include no M-base.
inline SetFamily circuits_of_minus(const FiniteMatroid& m) {
  if (m.rank() == 0)
    throw PreconditionError("the empty set is a base of M");
  SetFamily fam;
  fam.members = m.bases();
  for (Mask c : m.circuits().members) {
    bool includesBase = false;
    for (Mask b : m.bases())
      if ((b & ~c) == 0) {
        includesBase = true;
        break;
      }
    if (!includesBase) fam.members.push_back(c);
  }
  fam.canonicalize();
  return fam;
}

// Circuits of M+ assembled as O1 u O2 with O1 a circuit of M and O2 a
// circuit of M/O1. Must coincide with circuits(plus(M)).
inline SetFamily circuits_of_plus_by_assembly(const FiniteMatroid& m) {
  if (m.rank() == m.size())
    throw PreconditionError("E is a base");
  SetFamily out;
  for (Mask o1 : m.circuits().members) {
    FiniteMatroid contracted = contract_elements(m, o1);
    std::vector<int> keep = mask_elements(m.full() & ~o1);
    for (Mask o2small : contracted.circuits().members) {
      Mask o2 = 0;
      for (std::size_t i = 0; i < keep.size(); ++i)
        if (o2small & (Mask(1) << i)) o2 |= Mask(1) << keep[i];
      out.members.push_back(o1 | o2);
    }
  }
  out.canonicalize();
  return out;
}

// The union of two distinct M-circuits is dependent in M+.
inline bool circuit_pair_union_dependent(const FiniteMatroid& m, Mask o1, Mask o2) {
  auto cs = m.circuits().members;
  auto isCircuit = [&](Mask s) {
    return std::find(cs.begin(), cs.end(), s) != cs.end();
  };
  if (o1 == o2 || !isCircuit(o1) || !isCircuit(o2))
    throw PreconditionError("inputs are not two distinct circuits of M");
  return !plus(m).is_independent(o1 | o2);
}

// Matroid union. Grounds may differ; elements are identified by label.
// The union family is downward closed, so it is the downward closure of
// {B1 u B2}; its maximal members are the bases.
inline FiniteMatroid matroid_union(const FiniteMatroid& m1,
                                   const FiniteMatroid& m2) {
  std::vector<std::string> labels = m1.labels();
  for (const auto& l : m2.labels())
    if (std::find(labels.begin(), labels.end(), l) == labels.end())
      labels.push_back(l);
  int n = static_cast<int>(labels.size());
  if (n > kUnionMaxGround)
    throw GroundTooLarge("union ground of " + std::to_string(n) +
                         " exceeds bound " + std::to_string(kUnionMaxGround));
  auto remap = [&](const FiniteMatroid& m) {
    std::vector<int> ix;
    for (const auto& l : m.labels())
      ix.push_back(static_cast<int>(
          std::find(labels.begin(), labels.end(), l) - labels.begin()));
    std::vector<Mask> out;
    for (Mask b : m.bases()) {
      Mask nb = 0;
      for (int i = 0; i < m.size(); ++i)
        if (b & (Mask(1) << i)) nb |= Mask(1) << ix[i];
      out.push_back(nb);
    }
    return out;
  };
  std::vector<Mask> b1 = remap(m1), b2 = remap(m2);
  std::vector<char> indep(std::size_t(1) << n, 0);
  for (Mask x : b1)
    for (Mask y : b2) indep[x | y] = 1;
  Mask full = (n == 0) ? 0 : ((Mask(1) << n) - 1);
  for (Mask s = full; s-- > 0;) {
    if (indep[s]) continue;
    for (int e = 0; e < n; ++e) {
      Mask ext = s | (Mask(1) << e);
      if (ext != s && indep[ext]) {
        indep[s] = 1;
        break;
      }
    }
  }
  indep[0] = 1;
  int rank = 0;
  for (Mask s = 0; s <= full; ++s)
    if (indep[s]) rank = std::max(rank, popcount(s));
  std::vector<Mask> bases;
  for (Mask s = 0; s <= full; ++s)
    if (indep[s] && popcount(s) == rank) bases.push_back(s);
  return FiniteMatroid(std::move(labels), std::move(bases));
}

// Finitarization is the identity on finite matroids (every circuit is
// finite); present for API symmetry with the periodic module.
inline FiniteMatroid finitarization(const FiniteMatroid& m) { return m; }

struct PlusWildnessReport {
  bool cond1 = false;        // at least two circuits
  std::size_t circuitCount = 0;
  bool cond2 = false;        // some O \ B infinite: never on finite ground
  bool wildVerdict = false;     // always false here
  std::string note =
      "condition 2 (O \\ B infinite) is structurally unsatisfiable on a "
      "finite ground set";
};

inline PlusWildnessReport plus_wildness_hypotheses(const FiniteMatroid& m) {
  PlusWildnessReport rep;
  rep.circuitCount = m.circuits().members.size();
  rep.cond1 = rep.circuitCount >= 2;
  return rep;
}

}  // namespace wildmat

#endif  // WILDMAT_MATROID_OPS_HPP
