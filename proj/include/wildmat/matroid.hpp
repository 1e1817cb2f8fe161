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

#ifndef WILDMAT_MATROID_HPP
#define WILDMAT_MATROID_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "wildmat/config.hpp"

namespace wildmat {

// Subsets of a ground set are bitmasks over element indices.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// Canonical order on subsets: lexicographic on the sorted index sequence.
// All emitted families are sorted with this, so outputs are deterministic.
inline bool mask_less(Mask a, Mask b) {
  if (a == b) return false;
  while (a && b) {
    int ia = std::countr_zero(a), ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0;
}

inline void sort_family(std::vector<Mask>& fam) {
  std::sort(fam.begin(), fam.end(), mask_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
}

// A family of subsets of one ground set, canonically ordered.
struct SetFamily {
  std::vector<Mask> members;

  void canonicalize() { sort_family(members); }
  bool operator==(const SetFamily& o) const = default;
};

struct AxiomWitness {
  // I2: (set, element); I3: (setI, setIPrime).
  Mask setA = 0;
  Mask setB = 0;
  int element = -1;
};

struct AxiomReport {
  enum class Axiom { None, I1, I2, I3 };
  bool ok = false;
  Axiom violated = Axiom::None;
  AxiomWitness witness;
  // (IM) is vacuous for finite ground sets; recorded so reports say so.
  std::string note = "(IM) holds vacuously on a finite ground set";

  static const char* name(Axiom a) {
    switch (a) {
      case Axiom::I1: return "I1";
      case Axiom::I2: return "I2";
      case Axiom::I3: return "I3";
      default: return "none";
    }
  }
};

// Verifies (I1)-(I3) on an explicitly listed independence family.
inline AxiomReport verify_axioms(int nGround, std::vector<Mask> indep) {
  if (nGround > max_ground())
    throw GroundTooLarge("verify_axioms: ground of " + std::to_string(nGround) +
                         " exceeds bound " + std::to_string(max_ground()));
  Mask full = nGround == 32 ? ~Mask(0) : ((Mask(1) << nGround) - 1);
  for (Mask s : indep)
    if (s & ~full) throw InputError("independent set outside ground");
  sort_family(indep);

  AxiomReport rep;
  auto contains = [&](Mask s) {
    return std::binary_search(indep.begin(), indep.end(), s,
                              [](Mask a, Mask b) { return mask_less(a, b); });
  };

  // (I1)
  if (!contains(0)) {
    rep.violated = AxiomReport::Axiom::I1;
    return rep;
  }
  // (I2) closed under subsets: check one-element deletions.
  for (Mask s : indep) {
    for (Mask m = s; m; m &= m - 1) {
      Mask without = s & ~(m & -m);
      if (!contains(without)) {
        rep.violated = AxiomReport::Axiom::I2;
        rep.witness.setA = s;
        rep.witness.element = std::countr_zero(m);
        return rep;
      }
    }
  }
  // (I3): I' maximal, I not maximal => some x in I'\I with I+x independent.
  std::vector<Mask> maximal;
  for (Mask s : indep) {
    bool isMax = true;
    for (int e = 0; e < nGround && isMax; ++e)
      if (!(s & (Mask(1) << e)) && contains(s | (Mask(1) << e))) isMax = false;
    if (isMax) maximal.push_back(s);
  }
  auto isMaximal = [&](Mask s) {
    return std::binary_search(maximal.begin(), maximal.end(), s,
                              [](Mask a, Mask b) { return mask_less(a, b); });
  };
  for (Mask i : indep) {
    if (isMaximal(i)) continue;
    for (Mask ip : maximal) {
      bool augmented = false;
      for (Mask m = ip & ~i; m; m &= m - 1) {
        if (contains(i | (m & -m))) {
          augmented = true;
          break;
        }
      }
      if (!augmented) {
        rep.violated = AxiomReport::Axiom::I3;
        rep.witness.setA = i;
        rep.witness.setB = ip;
        return rep;
      }
    }
  }
  rep.ok = true;
  return rep;
}

// A finite matroid stored as an explicit base family (the ground truth
// oracle everything else is checked against). Immutable after construction.
class FiniteMatroid {
 public:
  // Validating constructor; see from_bases below for the error contract.
  FiniteMatroid(std::vector<std::string> labels, std::vector<Mask> bases)
      : labels_(std::move(labels)), bases_(std::move(bases)) {
    n_ = static_cast<int>(labels_.size());
    if (n_ > 25) throw GroundTooLarge("ground set exceeds 25 elements");
    for (std::size_t i = 0; i < labels_.size(); ++i)
      for (std::size_t j = i + 1; j < labels_.size(); ++j)
        if (labels_[i] == labels_[j])
          throw InputError("duplicate ground label: " + labels_[i]);
    validate_bases();
    sort_family(bases_);
  }

  int size() const { return n_; }
  Mask full() const { return n_ == 0 ? 0 : ((Mask(1) << n_) - 1); }
  int rank() const { return popcount(bases_.front()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Mask>& bases() const { return bases_; }

  int index_of(const std::string& label) const {
    for (int i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    throw InputError("unknown element label: " + label);
  }

  bool is_independent(Mask s) const {
    if (s & ~full()) throw InputError("subset not within ground set");
    for (Mask b : bases_)
      if ((s & ~b) == 0) return true;
    return false;
  }

  // Full independence table; demand-built once, bounded by max_ground().
  // Copies share the table; concurrent first access is synchronized, so
  // values stay safe to share across threads.
  const std::vector<char>& indep_table() const {
    std::call_once(table_->once, [&] {
      if (n_ > max_ground())
        throw GroundTooLarge("exhaustive enumeration beyond ground bound");
      std::vector<char> t(std::size_t(1) << n_, 0);
      for (Mask b : bases_) t[b] = 1;
      for (Mask s = full(); s-- > 0;) {
        if (t[s]) continue;
        // independent iff some one-element extension is
        for (int e = 0; e < n_; ++e) {
          Mask ext = s | (Mask(1) << e);
          if (ext != s && t[ext]) {
            t[s] = 1;
            break;
          }
        }
      }
      t[0] = 1;  // nonempty base family
      table_->data = std::move(t);
    });
    return table_->data;
  }

  std::vector<Mask> independent_sets() const {
    const auto& t = indep_table();
    std::vector<Mask> out;
    for (Mask s = 0; s < t.size(); ++s)
      if (t[s]) out.push_back(s);
    sort_family(out);
    return out;
  }

  SetFamily circuits() const {
    const auto& t = indep_table();
    SetFamily fam;
    for (Mask s = 1; s < t.size(); ++s) {
      if (t[s]) continue;
      bool minimal = true;
      for (Mask m = s; m && minimal; m &= m - 1)
        if (!t[s & ~(m & -m)]) minimal = false;
      if (minimal) fam.members.push_back(s);
    }
    fam.canonicalize();
    return fam;
  }

  FiniteMatroid dual() const {
    std::vector<Mask> db;
    db.reserve(bases_.size());
    for (Mask b : bases_) db.push_back(full() & ~b);
    return FiniteMatroid(labels_, std::move(db));
  }

  SetFamily cocircuits() const { return dual().circuits(); }

  bool operator==(const FiniteMatroid& o) const {
    return labels_ == o.labels_ && bases_ == o.bases_;
  }

 private:
  void validate_bases() {
    if (bases_.empty()) throw InputError("base family is empty");
    Mask f = full();
    for (Mask b : bases_)
      if (b & ~f) throw InputError("base references elements outside ground");
    int r = popcount(bases_.front());
    for (Mask b : bases_)
      if (popcount(b) != r)
        throw InputError("bases of unequal cardinality: " +
                         std::to_string(popcount(b)) + " vs " +
                         std::to_string(r));
    // Base exchange: for B1, B2 and x in B1\B2 there is y in B2\B1 with
    // B1-x+y a base.
    std::vector<Mask> sorted = bases_;
    sort_family(sorted);
    auto isBase = [&](Mask s) {
      return std::binary_search(sorted.begin(), sorted.end(), s,
                                [](Mask a, Mask b) { return mask_less(a, b); });
    };
    for (Mask b1 : sorted)
      for (Mask b2 : sorted) {
        if (b1 == b2) continue;
        for (Mask mx = b1 & ~b2; mx; mx &= mx - 1) {
          Mask x = mx & -mx;
          bool found = false;
          for (Mask my = b2 & ~b1; my && !found; my &= my - 1)
            if (isBase((b1 & ~x) | (my & -my))) found = true;
          if (!found)
            throw InputError("base exchange fails for B1=" + std::to_string(b1) +
                             " B2=" + std::to_string(b2) + " x=index " +
                             std::to_string(std::countr_zero(x)));
        }
      }
  }

  struct TableBox {
    std::once_flag once;
    std::vector<char> data;
  };

  std::vector<std::string> labels_;
  std::vector<Mask> bases_;
  int n_ = 0;
  mutable std::shared_ptr<TableBox> table_ = std::make_shared<TableBox>();
};

inline FiniteMatroid from_bases(std::vector<std::string> labels,
                                std::vector<Mask> bases) {
  return FiniteMatroid(std::move(labels), std::move(bases));
}

// Uniform matroid U_{r,n} with labels e0..e{n-1} unless given.
inline FiniteMatroid uniform_matroid(int r, int n,
                                     std::vector<std::string> labels = {}) {
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Mask> bases;
  Mask fullm = n == 0 ? 0 : ((Mask(1) << n) - 1);
  for (Mask s = 0; s <= fullm; ++s)
    if (popcount(s) == r) bases.push_back(s);
  if (n == 0) bases.push_back(0);
  return FiniteMatroid(std::move(labels), std::move(bases));
}

// Minor operations. delete: restrict independence to E\X and take maximal
// members. contract: I independent in M/X iff I u B_X independent in M for
// a maximal independent B_X within X.
inline FiniteMatroid delete_elements(const FiniteMatroid& m, Mask x) {
  if (x & ~m.full()) throw InputError("delete: X not within ground");
  const auto& t = m.indep_table();
  Mask rest = m.full() & ~x;
  std::vector<int> keep = mask_elements(rest);
  int rank = 0;
  for (Mask s = 0; s < t.size(); ++s)
    if (t[s] && (s & ~rest) == 0) rank = std::max(rank, popcount(s));
  std::vector<Mask> bases;
  for (Mask s = 0; s < t.size(); ++s) {
    if (!t[s] || (s & ~rest) || popcount(s) != rank) continue;
    // re-index into the reduced ground set
    Mask rb = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (s & (Mask(1) << keep[i])) rb |= Mask(1) << i;
    bases.push_back(rb);
  }
  std::vector<std::string> labels;
  for (int e : keep) labels.push_back(m.labels()[e]);
  return FiniteMatroid(std::move(labels), std::move(bases));
}

inline FiniteMatroid contract_elements(const FiniteMatroid& m, Mask x) {
  if (x & ~m.full()) throw InputError("contract: X not within ground");
  const auto& t = m.indep_table();
  // Greedy maximal independent subset of X.
  Mask bx = 0;
  for (Mask mm = x; mm; mm &= mm - 1) {
    Mask e = mm & -mm;
    if (t[bx | e]) bx |= e;
  }
  Mask rest = m.full() & ~x;
  std::vector<int> keep = mask_elements(rest);
  int rank = 0;
  for (Mask s = 0; s < t.size(); ++s)
    if ((s & ~rest) == 0 && t[s | bx]) rank = std::max(rank, popcount(s));
  std::vector<Mask> bases;
  for (Mask s = 0; s < t.size(); ++s) {
    if ((s & ~rest) || !t[s | bx] || popcount(s) != rank) continue;
    Mask rb = 0;
    for (std::size_t i = 0; i < keep.size(); ++i)
      if (s & (Mask(1) << keep[i])) rb |= Mask(1) << i;
    bases.push_back(rb);
  }
  std::vector<std::string> labels;
  for (int e : keep) labels.push_back(m.labels()[e]);
  return FiniteMatroid(std::move(labels), std::move(bases));
}

struct ScanResult {
  int max = 0;
  bool hasWitness = false;
  Mask circuit = 0;
  Mask cocircuit = 0;
};

// Max |C n D| over circuits C and cocircuits D; finite by construction.
inline ScanResult max_circuit_cocircuit_intersection(const FiniteMatroid& m) {
  SetFamily cs = m.circuits();
  SetFamily ds = m.cocircuits();
  ScanResult res;
  for (Mask c : cs.members)
    for (Mask d : ds.members) {
      int k = popcount(c & d);
      if (!res.hasWitness || k > res.max) {
        res.max = k;
        res.circuit = c;
        res.cocircuit = d;
        res.hasWitness = true;
      }
    }
  if (!res.hasWitness) res.max = 0;
  return res;
}

}  // namespace wildmat

#endif  // WILDMAT_MATROID_HPP
