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

#ifndef WILDMAT_THIN_SUMS_HPP
#define WILDMAT_THIN_SUMS_HPP

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "wildmat/field.hpp"
#include "wildmat/matroid.hpp"
#include "wildmat/multigraph.hpp"
#include "wildmat/periodic.hpp"

namespace wildmat {

// ---------------------------------------------------------------------------
// Coefficient families over the edges of a rayed graph family: an explicit
// finite map plus eventually periodic classes with constant values.
// Explicit entries override periodic classes.
// ---------------------------------------------------------------------------

template <Field F>
struct ThinCoefficients {
  struct PeriodicClass {
    int slot = 0;
    int residue = 0;
    int period = 1;
    int onset = 0;
    F value = F(0);
  };

  const RayedGraphFamily* fam = nullptr;
  std::map<EdgeId, F> explicitValues;
  std::vector<PeriodicClass> periodic;

  F at(EdgeId e) const {
    auto it = explicitValues.find(e);
    if (it != explicitValues.end()) return it->second;
    if (!e.is_prefix())
      for (const auto& cls : periodic)
        if (cls.slot == e.slot && e.col >= cls.onset &&
            e.col % cls.period == cls.residue)
          return cls.value;
    return F(0);
  }

  bool all_zero() const {
    for (const auto& [e, v] : explicitValues)
      if (!(v == F(0))) return false;
    for (const auto& cls : periodic)
      if (!(cls.value == F(0))) return false;
    return true;
  }

  // largest column any explicit entry or class onset mentions
  int stabilization_col() const {
    int stab = fam->minIndex;
    for (const auto& [e, v] : explicitValues)
      if (!e.is_prefix()) stab = std::max(stab, e.col + 1);
    for (const auto& cls : periodic) stab = std::max(stab, cls.onset);
    return stab;
  }

  int combined_period() const {
    int p = 1;
    for (const auto& cls : periodic) p = std::lcm(p, cls.period);
    return p;
  }

  // {e : at(e) != 0} as an eventually periodic edge set
  EdgeSet support() const {
    int stab = stabilization_col();
    int p = combined_period();
    std::set<std::pair<int, int>> pattern;
    for (const auto& cls : periodic) {
      if (cls.value == F(0)) continue;
      for (int r = 0; r < p; ++r)
        if (r % cls.period == cls.residue) pattern.insert({cls.slot, r});
    }
    EdgeSet tail(fam, {}, stab, p, std::move(pattern));
    std::set<EdgeId> exc;
    for (EdgeId e : tail.members_below(stab)) exc.insert(e);
    for (int col = fam->minIndex; col < stab; ++col)
      for (std::size_t s = 0; s < fam->slots.size(); ++s) {
        EdgeId e{static_cast<int>(s), col};
        if (!(at(e) == F(0))) exc.insert(e);
        else exc.erase(e);
      }
    for (std::size_t i = 0; i < fam->prefixEdges.size(); ++i) {
      EdgeId e = EdgeId::prefix(static_cast<int>(i));
      if (!(at(e) == F(0))) exc.insert(e);
    }
    // explicit entries may also override classes at or past the onset
    EdgeSet out(fam, std::move(exc), stab, p, tail.pattern());
    for (const auto& [e, v] : explicitValues) {
      if (e.is_prefix() || e.col < stab) continue;
      out = (v == F(0)) ? out.without_edge(e) : out.with_edge(e);
    }
    return out.normalized();
  }
};

// ---------------------------------------------------------------------------
// The representing function family on the rayed graph G over a field F:
//   f_p_i = x_{a_{i+1}} - x_{a_i},   f_q_i = x_{b_{i+1}} - x_{b_i},
//   f_r_i = (x_{b_i} - x_{a_i}) + i * x_*,   f_l = x_*.
// Orientations fixed: p_i, q_i point from index i to i+1, r_i from a_i to b_i.
// ---------------------------------------------------------------------------

template <Field F>
F rayed_g_value(const RayedGraphFamily& g, EdgeId e, Vertex v) {
  if (e.is_prefix()) {  // l
    return v.is_prefix() ? F(1) : F(0);
  }
  const std::string& slot = g.slots[e.slot].name;
  if (v.is_prefix()) {
    if (slot == "r") return field_from_long<F>(e.col);
    return F(0);
  }
  const std::string& lab = g.cellVertices[v.label];
  if (slot == "p") {
    if (lab != "a") return F(0);
    if (v.col == e.col + 1) return F(1);
    if (v.col == e.col) return F(0) - F(1);
    return F(0);
  }
  if (slot == "q") {
    if (lab != "b") return F(0);
    if (v.col == e.col + 1) return F(1);
    if (v.col == e.col) return F(0) - F(1);
    return F(0);
  }
  // r: + at b_i, - at a_i
  if (v.col != e.col) return F(0);
  if (lab == "b") return F(1);
  return F(0) - F(1);
}

// ---------------------------------------------------------------------------
// Thin-dependence checking over G, exact: graph-vertex equations are checked
// explicitly through the stabilization column and once per residue beyond;
// the vertex * needs finitely many nonzero r-coefficients, then one exact sum.
// ---------------------------------------------------------------------------

struct ThinVerdict {
  enum class Kind { Ok, IllDefinedAt, NonzeroAt };
  Kind kind = Kind::Ok;
  std::string vertex;
  bool trivial = false;  // the all-zero dependence

  bool ok() const { return kind == Kind::Ok; }
};

template <Field F>
ThinVerdict is_thin_dependence(const ThinCoefficients<F>& lam) {
  const RayedGraphFamily& g = *lam.fam;
  if (g.name != "RAYED_G")
    throw InputError("thin dependence checking is defined over RAYED_G");
  ThinVerdict verdict;
  verdict.trivial = lam.all_zero();
  int rSlot = g.slot_index("r"), pSlot = g.slot_index("p"),
      qSlot = g.slot_index("q");
  // well-definedness at *: infinitely many nonzero lambda_{r_i} would make
  // the sum of i * lambda_{r_i} terms infinite
  for (const auto& cls : lam.periodic)
    if (cls.slot == rSlot && !(cls.value == F(0))) {
      verdict.kind = ThinVerdict::Kind::IllDefinedAt;
      verdict.vertex = "*";
      return verdict;
    }
  // equation at *
  F starSum = lam.at(EdgeId::prefix(0));
  for (const auto& [e, v] : lam.explicitValues)
    if (!e.is_prefix() && e.slot == rSlot)
      starSum = starSum + field_from_long<F>(e.col) * v;
  if (!(starSum == F(0))) {
    verdict.kind = ThinVerdict::Kind::NonzeroAt;
    verdict.vertex = "*";
    return verdict;
  }
  // graph vertices: explicit columns, then one representative per residue
  int stab = lam.stabilization_col();
  int p = lam.combined_period();
  auto coeff = [&](int slot, int col) -> F {
    if (col < g.minIndex) return F(0);
    return lam.at(EdgeId{slot, col});
  };
  auto checkCol = [&](int i) -> bool {
    // a_i: +lambda_{p_{i-1}} - lambda_{p_i} - lambda_{r_i} = 0
    F ai = coeff(pSlot, i - 1) - coeff(pSlot, i) - coeff(rSlot, i);
    if (!(ai == F(0))) {
      verdict.kind = ThinVerdict::Kind::NonzeroAt;
      verdict.vertex = "a:" + std::to_string(i);
      return false;
    }
    // b_i: +lambda_{q_{i-1}} - lambda_{q_i} + lambda_{r_i} = 0
    F bi = coeff(qSlot, i - 1) - coeff(qSlot, i) + coeff(rSlot, i);
    if (!(bi == F(0))) {
      verdict.kind = ThinVerdict::Kind::NonzeroAt;
      verdict.vertex = "b:" + std::to_string(i);
      return false;
    }
    return true;
  };
  for (int i = g.minIndex; i <= stab + p + 1; ++i)
    if (!checkCol(i)) return verdict;
  for (int i = stab + p + 2; i <= stab + 2 * p + 1; ++i)
    if (!checkCol(i)) return verdict;
  return verdict;
}

// Degree of the support at every vertex other than * is 0 or >= 2.
template <Field F>
bool support_degree_check(const ThinCoefficients<F>& lam) {
  if (!is_thin_dependence(lam).ok())
    throw PreconditionError("not a thin dependence");
  EdgeSet sup = lam.support();
  const RayedGraphFamily& g = *lam.fam;
  int stab = sup.onset() + sup.period() + 1;
  for (int col = g.minIndex; col <= stab + sup.period(); ++col)
    for (std::size_t l = 0; l < g.cellVertices.size(); ++l) {
      int d = degree(sup, Vertex{static_cast<int>(l), col});
      if (d == 1) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Finite thin families (explicit matrices) and the finite thin-sums matroid.
// ---------------------------------------------------------------------------

template <Field F>
struct FiniteThinFamily {
  int domainSize = 0;  // |A|
  std::vector<std::string> edgeLabels;
  std::vector<std::vector<F>> columns;  // one per edge, length domainSize
};

// Signed incidence family f^G of a finite multigraph, edge (u,v) pointing
// u -> v as listed.
template <Field F>
FiniteThinFamily<F> incidence_family(const Multigraph& g) {
  FiniteThinFamily<F> f;
  f.domainSize = g.nVertices;
  f.edgeLabels = g.labels_or_default();
  for (auto [u, v] : g.edges) {
    std::vector<F> col(g.nVertices, F(0));
    col[v] = col[v] + F(1);
    col[u] = col[u] - F(1);
    f.columns.push_back(std::move(col));
  }
  return f;
}

template <Field F>
bool thinly_independent(const FiniteThinFamily<F>& f, Mask subset,
                        int bound = 16) {
  int m = static_cast<int>(f.columns.size());
  if (m > bound) throw GroundTooLarge("thin family too large");
  std::vector<std::vector<F>> cols;
  for (int i = 0; i < m; ++i)
    if (subset & (Mask(1) << i)) cols.push_back(f.columns[i]);
  return matrix_rank<F>(cols, f.domainSize) == static_cast<int>(cols.size());
}

template <Field F>
FiniteMatroid thin_sums_matroid_finite(const FiniteThinFamily<F>& f,
                                       int bound = 16) {
  int m = static_cast<int>(f.columns.size());
  if (m > bound) throw GroundTooLarge("thin family too large");
  Mask full = m == 0 ? 0 : ((Mask(1) << m) - 1);
  int best = 0;
  std::vector<char> indep(std::size_t(full) + 1, 0);
  for (Mask s = 0; s <= full; ++s) {
    if (thinly_independent(f, s, bound)) {
      indep[s] = 1;
      best = std::max(best, popcount(s));
    }
  }
  std::vector<Mask> bases;
  for (Mask s = 0; s <= full; ++s)
    if (indep[s] && popcount(s) == best) bases.push_back(s);
  return FiniteMatroid(f.edgeLabels, std::move(bases));
}

// On a finite graph the thin-sums matroid of f^G is the finite cycle
// matroid (integer fraction-free rank keeps the exhaustive run fast; it is
// exact on these +-1 matrices).
inline bool thin_sums_equals_cycle_matroid(const Multigraph& g, int bound = 16) {
  int m = static_cast<int>(g.edges.size());
  if (m > bound) throw GroundTooLarge("graph too large");
  std::vector<std::vector<long long>> cols;
  for (auto [u, v] : g.edges) {
    std::vector<long long> col(g.nVertices, 0);
    col[v] += 1;
    col[u] -= 1;
    cols.push_back(std::move(col));
  }
  Mask full = m == 0 ? 0 : ((Mask(1) << m) - 1);
  for (Mask s = 0; s <= full; ++s) {
    std::vector<std::vector<long long>> sub;
    for (int i = 0; i < m; ++i)
      if (s & (Mask(1) << i)) sub.push_back(cols[i]);
    bool thin = matrix_rank_int(sub, g.nVertices) ==
                static_cast<int>(sub.size());
    if (thin != is_forest(g, s)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Dependence builders for the plus-circuits of the rayed graph.
// ---------------------------------------------------------------------------

// One-rung double-ray circuit: support {l} u {r_n} u {p_i, q_i : i >= n} (the loop
// coefficient vanishes when n = 0; see the n = 0 example in the tests).
inline ThinCoefficients<Rational> build_lambda_f_oneray(int n) {
  if (n < 0) throw PreconditionError("n must be >= 0");
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  ThinCoefficients<Rational> lam;
  lam.fam = &g;
  lam.explicitValues[EdgeId{g.slot_index("r"), n}] = Rational(1);
  if (n != 0) lam.explicitValues[EdgeId::prefix(0)] = Rational(-n);
  lam.periodic.push_back({g.slot_index("p"), 0, 1, n, Rational(-1)});
  lam.periodic.push_back({g.slot_index("q"), 0, 1, n, Rational(1)});
  return lam;
}

// Three-rung circuit (finite square plus a disjoint double ray): support
// {r_l, r_m, r_n} u {p_i, q_i : l <= i < m}
// u {p_i, q_i : i >= n}. The single equation at * is solved exactly; the
// magnitudes come out as n and m-l.
inline ThinCoefficients<Rational> build_lambda_f_threerung(int l, int m,
                                                           int n) {
  if (!(0 <= l && l < m && m <= n - 1))
    throw PreconditionError("need 0 <= l < m <= n-1");
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  ThinCoefficients<Rational> lam;
  lam.fam = &g;
  Rational alpha(n), beta(l - m);  // (m-l)*alpha + n*beta = 0
  int pS = g.slot_index("p"), qS = g.slot_index("q"), rS = g.slot_index("r");
  lam.explicitValues[EdgeId{rS, l}] = -alpha;
  lam.explicitValues[EdgeId{rS, m}] = alpha;
  lam.explicitValues[EdgeId{rS, n}] = beta;
  for (int i = l; i < m; ++i) {
    lam.explicitValues[EdgeId{pS, i}] = alpha;
    lam.explicitValues[EdgeId{qS, i}] = -alpha;
  }
  lam.periodic.push_back({pS, 0, 1, n, -beta});
  lam.periodic.push_back({qS, 0, 1, n, beta});
  return lam;
}

// The target circuits these dependences witness.
inline EdgeSet oneray_circuit(int n, bool includeLoop = true) {
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  std::set<EdgeId> exc;
  if (includeLoop) exc.insert(EdgeId::prefix(0));
  exc.insert(EdgeId{g.slot_index("r"), n});
  for (int i = 0; i < n + 1; ++i)
    if (i >= n) {
      exc.insert(EdgeId{g.slot_index("p"), i});
      exc.insert(EdgeId{g.slot_index("q"), i});
    }
  return EdgeSet(&g, std::move(exc), n + 1, 1,
                 {{g.slot_index("p"), 0}, {g.slot_index("q"), 0}})
      .normalized();
}

inline EdgeSet threerung_circuit(int l, int m, int n) {
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  int pS = g.slot_index("p"), qS = g.slot_index("q"), rS = g.slot_index("r");
  std::set<EdgeId> exc{EdgeId{rS, l}, EdgeId{rS, m}, EdgeId{rS, n},
                       EdgeId{pS, n}, EdgeId{qS, n}};
  for (int i = l; i < m; ++i) {
    exc.insert(EdgeId{pS, i});
    exc.insert(EdgeId{qS, i});
  }
  return EdgeSet(&g, std::move(exc), n + 1, 1, {{pS, 0}, {qS, 0}})
      .normalized();
}

// ---------------------------------------------------------------------------
// The coefficient recurrence. The lambda^i here are dependences of a
// hypothetical representation of (M+)*, supported on {chain_{i-1}, r_i,
// chain_i}; only the coefficient ratios matter.
// ---------------------------------------------------------------------------

enum class Chain { P, Q };

template <Field F>
struct RecurrenceInput {
  Chain chain = Chain::P;
  // index 0: (unused, lambda0_{r_0}, lambda0_{chain_0});
  // index i: (lambda^i_{chain_{i-1}}, lambda^i_{r_i}, lambda^i_{chain_i})
  struct Triple {
    F prev = F(0), rung = F(0), cur = F(0);
  };
  std::vector<Triple> lambdas;
};

template <Field F>
struct RecurrenceResult {
  std::vector<F> nu, mu;
  ThinCoefficients<F> lambdaPrime;  // supported on {r_i : i <= k}
};

// Validates the support shape of the given coefficient families and runs
//   nu_0 = 1,  nu_i = -(lambda^i_{c_i}/lambda^i_{c_{i-1}}) nu_{i-1},
//   mu_i = -(lambda^i_{r_i}/lambda^i_{c_i}) nu_i.
template <Field F>
RecurrenceResult<F> mu_nu_recurrence(
    const std::vector<ThinCoefficients<F>>& lambdas, Chain chain) {
  if (lambdas.empty()) throw PreconditionError("need lambda^0");
  const RayedGraphFamily& g = *lambdas[0].fam;
  int cS = g.slot_index(chain == Chain::P ? "p" : "q");
  int rS = g.slot_index("r");
  RecurrenceInput<F> in;
  in.chain = chain;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const auto& lam = lambdas[i];
    if (!lam.periodic.empty())
      throw PreconditionError("recurrence inputs must have finite support");
    typename RecurrenceInput<F>::Triple t;
    std::set<EdgeId> allowed;
    int ii = static_cast<int>(i);
    allowed.insert(EdgeId{rS, ii});
    allowed.insert(EdgeId{cS, ii});
    if (i > 0) allowed.insert(EdgeId{cS, ii - 1});
    for (const auto& [e, v] : lam.explicitValues) {
      if (v == F(0)) continue;
      if (!allowed.count(e))
        throw PreconditionError("support-shape violation at lambda^" +
                                std::to_string(i) + ": " + g.edge_name(e));
    }
    t.rung = lam.at(EdgeId{rS, ii});
    t.cur = lam.at(EdgeId{cS, ii});
    if (i > 0) t.prev = lam.at(EdgeId{cS, ii - 1});
    if (t.rung == F(0) || t.cur == F(0) || (i > 0 && t.prev == F(0)))
      throw PreconditionError("zero coefficient where the recurrence divides");
    in.lambdas.push_back(t);
  }
  RecurrenceResult<F> out;
  out.lambdaPrime.fam = &g;
  F nu = F(1);
  for (std::size_t i = 0; i < in.lambdas.size(); ++i) {
    const auto& t = in.lambdas[i];
    if (i > 0) nu = (F(0) - field_div(t.cur, t.prev)) * nu;
    F mu = (F(0) - field_div(t.rung, t.cur)) * nu;
    out.nu.push_back(nu);
    out.mu.push_back(mu);
    out.lambdaPrime.explicitValues[EdgeId{rS, static_cast<int>(i)}] = mu;
  }
  return out;
}

// Evaluates the telescoping identity nu_i f_{c_i}(x) = sum_{j<=i} mu_j
// f_{r_j}(x) over the family induced by the lambdas: chain edges carry the
// signed incidence values and each f_{r_i} is the unique choice making
// lambda^i a dependence. Checked at every chain vertex x with column <= k+1
// (the only places any term is nonzero).
template <Field F>
bool verify_telescoping(const std::vector<F>& nu, const std::vector<F>& mu,
                        const std::vector<ThinCoefficients<F>>& lambdas,
                        Chain chain) {
  if (nu.size() != mu.size() || nu.size() != lambdas.size()) return false;
  int k = static_cast<int>(nu.size()) - 1;
  if (k < 0) return false;
  const RayedGraphFamily& g = *lambdas[0].fam;
  int cS = g.slot_index(chain == Chain::P ? "p" : "q");
  int rS = g.slot_index("r");
  // f_{c_i}(col) over the chain: +1 at col == i+1, -1 at col == i
  auto fChain = [&](int i, int col) -> F {
    if (col == i + 1) return F(1);
    if (col == i) return F(0) - F(1);
    return F(0);
  };
  auto fRung = [&](int i, int col) -> F {
    const auto& lam = lambdas[i];
    F rung = lam.at(EdgeId{rS, i});
    F cur = lam.at(EdgeId{cS, i});
    F prev = (i > 0) ? lam.at(EdgeId{cS, i - 1}) : F(0);
    F val = cur * fChain(i, col);
    if (i > 0) val = val + prev * fChain(i - 1, col);
    return F(0) - field_div(val, rung);
  };
  for (int col = 0; col <= k + 1; ++col) {
    // f_{r_j}(col) is nonzero only for j near col, so the partial sums
    // change at most three times along i
    F rhs = F(0);
    for (int i = 0; i <= k; ++i) {
      if (std::abs(i - col) <= 1) rhs = rhs + mu[i] * fRung(i, col);
      F lhs = nu[i] * fChain(i, col);
      if (!(lhs == rhs)) return false;
    }
  }
  // assembled lambda': zero-sum at every interior chain vertex
  for (int col = 0; col <= k - 1; ++col) {
    F total = F(0);
    for (int i = std::max(0, col - 1); i <= std::min(k, col + 1); ++i)
      total = total + mu[i] * fRung(i, col);
    if (!(total == F(0))) return false;
  }
  return true;
}

}  // namespace wildmat

#endif  // WILDMAT_THIN_SUMS_HPP
