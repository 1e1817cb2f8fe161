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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "window_oracle.hpp"
#include "wildmat/periodic.hpp"

using namespace wildmat;

namespace {

const RayedGraphFamily& G = builtin_family(BuiltinFamily::RAYED_G);
const RayedGraphFamily& H = builtin_family(BuiltinFamily::DOUBLED_H);
const RayedGraphFamily& L = builtin_family(BuiltinFamily::LADDER_L);

EdgeSet make(const RayedGraphFamily& fam, int onset, int period,
             const std::vector<std::pair<std::string, int>>& pattern,
             const std::vector<std::string>& exceptional = {}) {
  std::set<std::pair<int, int>> pat;
  for (const auto& [slot, r] : pattern) pat.insert({fam.slot_index(slot), r});
  std::set<EdgeId> exc;
  for (const auto& name : exceptional) exc.insert(fam.parse_edge(name));
  return EdgeSet(&fam, std::move(exc), onset, period, std::move(pat));
}

// {r_n} u {p_i, q_i : i >= n} over G: a double ray.
EdgeSet rung_double_ray(int n) {
  return make(G, n + 1, 1, {{"p", 0}, {"q", 0}},
              {"r:" + std::to_string(n), "p:" + std::to_string(n),
               "q:" + std::to_string(n)});
}

}  // namespace

TEST_CASE("edge id parsing and formatting round-trips") {
  for (const auto* name : {"u:3", "r':7", "p:0"}) {
    const RayedGraphFamily& fam = std::string(name)[0] == 'p' ? G : H;
    CHECK(fam.edge_name(fam.parse_edge(name)) == name);
  }
  CHECK(G.edge_name(G.parse_edge("l")) == "l");
  CHECK_THROWS_AS(G.parse_edge("zz:3"), InputError);
}

TEST_CASE("edge set membership, algebra, and normalization") {
  EdgeSet pAll = EdgeSet::slot_class(G, "p");
  CHECK(pAll.contains(G.parse_edge("p:0")));
  CHECK(pAll.contains(G.parse_edge("p:1000")));
  CHECK_FALSE(pAll.contains(G.parse_edge("q:3")));
  CHECK_FALSE(pAll.contains(G.parse_edge("l")));
  CHECK(pAll.is_infinite());

  EdgeSet ray = rung_double_ray(2);
  CHECK(ray.contains(G.parse_edge("r:2")));
  CHECK_FALSE(ray.contains(G.parse_edge("r:3")));
  CHECK(ray.contains(G.parse_edge("p:2")));
  CHECK(ray.contains(G.parse_edge("q:77")));
  CHECK_FALSE(ray.contains(G.parse_edge("p:1")));

  SECTION("complement of a base is the expected cocircuit") {
    EdgeSet base = make(G, 0, 1, {{"p", 0}, {"r", 0}});
    EdgeSet cobase = base.complement();
    CHECK(cobase.contains(G.parse_edge("l")));
    CHECK(cobase.contains(G.parse_edge("q:5")));
    CHECK_FALSE(cobase.contains(G.parse_edge("p:5")));
    CHECK_FALSE(cobase.contains(G.parse_edge("r:0")));
    CHECK(cobase.complement().equals(base));
  }
  SECTION("union/intersection/difference") {
    EdgeSet qAll = EdgeSet::slot_class(G, "q");
    EdgeSet u = pAll.set_union(qAll);
    CHECK(u.contains(G.parse_edge("p:4")));
    CHECK(u.contains(G.parse_edge("q:4")));
    CHECK(pAll.set_intersection(qAll).is_empty());
    CHECK(u.set_difference(qAll).equals(pAll));
  }
  SECTION("rebase preserves membership") {
    EdgeSet r = ray.rebased(10);
    CHECK(r.onset() == 10);
    for (const auto* e : {"r:2", "p:5", "q:11", "p:1"})
      CHECK(r.contains(G.parse_edge(e)) == ray.contains(G.parse_edge(e)));
    CHECK(r.equals(ray));
    CHECK(r.normalized().onset() == ray.normalized().onset());
  }
  SECTION("with/without edge") {
    EdgeSet plus = ray.with_edge(G.parse_edge("l"));
    CHECK(plus.contains(G.parse_edge("l")));
    CHECK(plus.without_edge(G.parse_edge("l")).equals(ray));
    EdgeSet far = ray.with_edge(G.parse_edge("r:40"));
    CHECK(far.contains(G.parse_edge("r:40")));
    CHECK(far.without_edge(G.parse_edge("r:40")).equals(ray));
  }
  SECTION("normalization minimizes period") {
    EdgeSet doubled = make(G, 0, 2, {{"p", 0}, {"p", 1}});
    EdgeSet norm = doubled.normalized();
    CHECK(norm.period() == 1);
    CHECK(norm.equals(EdgeSet::slot_class(G, "p")));
  }
}

TEST_CASE("windows of the doubled ladder") {
  WindowGraph w1 = window(H, 1);
  CHECK(w1.graph.nVertices == 2);
  REQUIRE(w1.edgeIds.size() == 2);  // r:1, r':1
  for (EdgeId e : w1.edgeIds) CHECK(H.slots[e.slot].name[0] == 'r');
  for (int n = 2; n <= 6; ++n) {
    WindowGraph wn = window(H, n), wp = window(H, n - 1);
    CHECK(wn.graph.nVertices == 2 * n);
    CHECK(wn.edgeIds.size() - wp.edgeIds.size() == 6);
  }
  CHECK(EdgeSet::empty(H).restrict_to_window(5).empty());
}

TEST_CASE("cycle matroid of the depth-2 ladder window") {
  WindowGraph w2 = window(H, 2);
  REQUIRE(w2.edgeIds.size() == 8);
  auto m = finite_cycle_matroid(w2.graph);
  CHECK(m.rank() == 3);  // 4 vertices, connected
  // every doubled pair is a 2-circuit
  auto circuits = m.circuits();
  int pairs = 0;
  for (Mask c : circuits.members)
    if (popcount(c) == 2) ++pairs;
  CHECK(pairs == 4);  // u/u', d/d', r/r' at both columns -> u1,d1,r1,r2 pairs
}

TEST_CASE("finite cycle detection") {
  SECTION("the loop is a cycle") {
    EdgeSet s = make(G, 0, 1, {}, {"l"});
    auto cyc = contains_finite_cycle(s);
    REQUIRE(cyc.has_value());
    REQUIRE(cyc->size() == 1);
    CHECK(G.edge_name((*cyc)[0]) == "l");
  }
  SECTION("explicit rectangle in G") {
    // {r_1, r_3} + p,q between: a cycle through a_1..a_3, b_3..b_1
    EdgeSet s = make(G, 4, 1, {},
                     {"r:1", "r:3", "p:1", "p:2", "q:1", "q:2"});
    auto cyc = contains_finite_cycle(s);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 6);
  }
  SECTION("a single ray is acyclic") {
    CHECK_FALSE(contains_finite_cycle(EdgeSet::slot_class(G, "p")));
  }
  SECTION("4-cycles appear in the periodic region") {
    // p,q,r all present: 4-cycle r_i p_i r_{i+1} q_i
    EdgeSet s = EdgeSet::all(G).without_edge(G.parse_edge("l"));
    auto cyc = contains_finite_cycle(s);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() <= 4);
  }
  SECTION("cycle reaching into the exceptional region is found") {
    // rungs only at 0 and far pattern breaks: cycle needs both strands
    EdgeSet s = make(G, 1, 1, {{"p", 0}, {"q", 0}}, {"r:0", "p:0", "q:0"});
    // adding one more rung far out closes a rectangle through column 0
    EdgeSet s2 = s.with_edge(G.parse_edge("r:9"));
    auto cyc = contains_finite_cycle(s2);
    REQUIRE(cyc.has_value());
    // rectangle r:0 .. r:9
    CHECK(cyc->size() == 2 + 2 * 9);
  }
}

TEST_CASE("finite cycle detection agrees with the window oracle") {
  std::vector<EdgeSet> corpus = {
      EdgeSet::all(G),
      EdgeSet::all(H),
      EdgeSet::all(L),
      EdgeSet::slot_class(G, "p"),
      EdgeSet::slot_class(H, "u"),
      make(G, 0, 1, {{"p", 0}, {"r", 0}}),
      make(G, 0, 1, {{"p", 0}, {"q", 0}}),
      make(G, 0, 2, {{"p", 0}, {"p", 1}, {"q", 0}, {"r", 1}}),
      make(H, 1, 2, {{"u'", 1}, {"d", 0}, {"d", 1}, {"r'", 1}}),
      make(H, 2, 2, {{"u'", 0}, {"d'", 0}, {"d'", 1}, {"r'", 0}},
           {"d':1", "r:1"}),
      make(L, 2, 3, {{"u", 0}, {"u", 1}, {"d", 2}, {"r", 0}}, {"d:1"}),
      rung_double_ray(0),
      rung_double_ray(3).with_edge(G.parse_edge("l")),
  };
  for (const auto& s : corpus) {
    bool exact = contains_finite_cycle(s).has_value();
    bool seen = false;
    for (int depth : {5, 20, 60, 200})
      seen = seen || oracle::window_has_cycle(s, depth);
    CHECK(exact == seen);
  }
}

TEST_CASE("double-ray detection: positives with verified certificates") {
  SECTION("rung plus two tails over G") {
    for (int n : {0, 1, 4}) {
      EdgeSet s = rung_double_ray(n);
      auto res = contains_double_ray(s);
      REQUIRE(res.certificate.has_value());
      CHECK(res.certificate->edges.equals(s));
      CHECK(oracle::validate_double_ray_certificate(s, *res.certificate));
      // spec: middle is the rung, tails run along p and q
      CHECK(res.certificate->tail1.period >= 1);
      CHECK(res.certificate->tail2.period >= 1);
    }
  }
  SECTION("all of H contains a double ray") {
    auto res = contains_double_ray(EdgeSet::all(H));
    REQUIRE(res.certificate.has_value());
    CHECK(oracle::validate_double_ray_certificate(EdgeSet::all(H),
                                                  *res.certificate));
  }
  SECTION("two full strands plus one rung") {
    // S itself is not 2-regular (a_0, b_0 dangle); the contained double ray
    // is the rung with its two tails
    EdgeSet s = make(G, 0, 1, {{"p", 0}, {"q", 0}}).with_edge(
        G.parse_edge("r:5"));
    auto res = contains_double_ray(s);
    REQUIRE(res.certificate.has_value());
    CHECK(res.certificate->edges.set_difference(s).is_empty());
    CHECK(res.certificate->edges.contains(G.parse_edge("r:5")));
    CHECK(oracle::validate_double_ray_certificate(s, *res.certificate));
  }
}

TEST_CASE("double-ray detection: negatives") {
  std::vector<EdgeSet> negatives = {
      EdgeSet::slot_class(G, "p"),                    // one ray
      make(G, 0, 1, {{"p", 0}, {"q", 0}}),            // two disjoint rays
      make(G, 0, 1, {{"p", 0}, {"r", 0}}),            // caterpillar base
      make(G, 0, 1, {{"q", 0}}, {"l"}),               // ray + loop
      EdgeSet::slot_class(H, "r"),                    // rungs only
      make(H, 1, 2, {{"u'", 1}, {"d", 0}, {"d", 1}, {"r'", 1}}),  // B1
      make(H, 2, 2, {{"u'", 0}, {"d'", 0}, {"d'", 1}, {"r'", 0}},
           {"d':1", "r:1"}),                           // B2
      EdgeSet::empty(G),
  };
  for (const auto& s : negatives) {
    auto res = contains_double_ray(s);
    CHECK_FALSE(res.certificate.has_value());
    CHECK(res.stabilizationIndex > 0);
    // window oracle agrees: no evidence at several depths past stabilization
    int k0 = s.onset() + s.period();
    for (int depth : {30, 61})
      CHECK_FALSE(
          oracle::window_double_ray_evidence(s, depth, k0, s.period() + 2));
  }
}

TEST_CASE("double rays of the doubled ladder contain exactly one rung") {
  // every double ray of the doubled ladder uses exactly one rung
  std::vector<EdgeSet> positives = {
      EdgeSet::all(H),
      make(H, 1, 1, {{"u", 0}, {"d", 0}}).with_edge(H.parse_edge("r:3")),
      make(H, 1, 1, {{"u'", 0}, {"d'", 0}}).with_edge(H.parse_edge("r':1")),
      make(H, 1, 2, {{"u", 0}, {"u", 1}, {"d'", 0}, {"d'", 1}})
          .with_edge(H.parse_edge("r:2")),
  };
  int rungSlot = H.slot_index("r"), rungSlot2 = H.slot_index("r'");
  for (const auto& s : positives) {
    auto res = contains_double_ray(s);
    REQUIRE(res.certificate.has_value());
    const EdgeSet& ray = res.certificate->edges;
    // count rungs in the certificate: pattern must have none, exceptional
    // exactly one
    for (auto [slot, r] : ray.pattern()) {
      CHECK(slot != rungSlot);
      CHECK(slot != rungSlot2);
    }
    int rungs = 0;
    for (EdgeId e : ray.exceptional())
      if (!e.is_prefix() && (e.slot == rungSlot || e.slot == rungSlot2))
        ++rungs;
    CHECK(rungs == 1);
  }
}

TEST_CASE("forest-like sets of H hold at most one double ray") {
  // within a finite-cycle-free S, any two double
  // rays share an edge; equivalently S minus a found double ray has none.
  std::vector<EdgeSet> forestLike = {
      make(H, 1, 1, {{"u", 0}, {"d", 0}}).with_edge(H.parse_edge("r:3")),
      make(H, 1, 1, {{"u'", 0}, {"d'", 0}}).with_edge(H.parse_edge("r':1")),
      make(H, 1, 1, {{"u", 0}, {"r", 0}}),  // caterpillar
  };
  for (const auto& s : forestLike) {
    REQUIRE_FALSE(contains_finite_cycle(s).has_value());
    auto first = contains_double_ray(s);
    if (!first.certificate) continue;
    EdgeSet rest = s.set_difference(first.certificate->edges);
    CHECK_FALSE(contains_double_ray(rest).certificate.has_value());
  }
}

TEST_CASE("independence in the algebraic cycle matroid") {
  CHECK(is_independent_MA(EdgeSet::slot_class(H, "u")));
  EdgeSet both = make(H, 1, 1, {{"u", 0}, {"d", 0}}, {});
  CHECK(is_independent_MA(both));
  CHECK_FALSE(is_independent_MA(both.with_edge(H.parse_edge("r:1"))));
  CHECK(is_independent_MA(EdgeSet::empty(H)));
  CHECK_FALSE(is_independent_MA(make(G, 0, 1, {}, {"l"})));
}

TEST_CASE("base verdicts over G") {
  SECTION("two strands form a base") {
    auto v = is_base_MA(make(G, 0, 1, {{"p", 0}, {"q", 0}}));
    CHECK(v.kind == BaseVerdict::Kind::Base);
  }
  SECTION("caterpillar p+r is a base") {
    auto v = is_base_MA(make(G, 0, 1, {{"p", 0}, {"r", 0}}));
    CHECK(v.kind == BaseVerdict::Kind::Base);
  }
  SECTION("the p-strand alone is not maximal") {
    auto v = is_base_MA(EdgeSet::slot_class(G, "p"));
    REQUIRE(v.kind == BaseVerdict::Kind::NotMaximal);
    REQUIRE(v.extendingEdge.has_value());
    // the reported extension really is independent
    CHECK(is_independent_MA(
        EdgeSet::slot_class(G, "p").with_edge(*v.extendingEdge)));
  }
  SECTION("a dependent set is flagged with its witness") {
    auto v = is_base_MA(EdgeSet::all(G));
    CHECK(v.kind == BaseVerdict::Kind::NotIndependent);
    CHECK(v.cycleWitness.has_value());
  }
}

TEST_CASE("maximality reduction agrees with direct checks far out") {
  // the reduction tests one representative per residue class; verify the
  // claim by testing extra columns explicitly
  EdgeSet base = make(G, 0, 1, {{"p", 0}, {"q", 0}});
  for (int col : {7, 12, 30}) {
    for (const auto* slot : {"p", "q", "r"}) {
      EdgeId e{G.slot_index(slot), col};
      if (base.contains(e)) continue;
      EdgeSet ext = base.with_edge(e);
      bool dependent = contains_finite_cycle(ext).has_value() ||
                       contains_double_ray(ext).certificate.has_value();
      CHECK(dependent);  // base-ness means every extension is dependent
    }
  }
}

TEST_CASE("circuit recognition") {
  CHECK(is_circuit_MA(make(G, 0, 1, {}, {"l"})));
  CHECK(is_circuit_MA(rung_double_ray(2)));
  CHECK_FALSE(is_circuit_MA(rung_double_ray(2).with_edge(G.parse_edge("l"))));
  CHECK_FALSE(is_circuit_MA(EdgeSet::empty(G)));
  // 4-cycle in G
  CHECK(is_circuit_MA(make(G, 3, 1, {}, {"r:1", "p:1", "q:1", "r:2"})));
  // a path is not a circuit
  CHECK_FALSE(is_circuit_MA(make(G, 3, 1, {}, {"p:1", "p:2"})));
  // two disjoint loops-ish: double ray + separate 4-cycle
  EdgeSet mixed = rung_double_ray(6).set_union(
      make(G, 3, 1, {}, {"r:1", "p:1", "q:1", "r:2"}));
  CHECK_FALSE(is_circuit_MA(mixed));
  // removing one representative edge of a circuit leaves an independent set
  EdgeSet dray = rung_double_ray(2);
  for (const auto* e : {"r:2", "p:2", "q:5", "p:9"})
    CHECK(is_independent_MA(dray.without_edge(G.parse_edge(e))));
}

TEST_CASE("skew cuts of G") {
  auto cut = [&](const std::vector<std::string>& names) {
    std::vector<EdgeId> es;
    for (const auto& n : names) es.push_back(G.parse_edge(n));
    return es;
  };
  CHECK(is_skew_cut(G, cut({"q:0", "r:1", "q:1"})));
  CHECK(is_skew_cut(G, cut({"q:4", "r:5", "q:5"})));
  CHECK(is_skew_cut(G, cut({"r:0", "q:0"})));
  CHECK_FALSE(is_skew_cut(G, cut({"p:3"})));
  CHECK_FALSE(is_skew_cut(G, cut({"l"})));
  CHECK_FALSE(is_skew_cut(G, cut({"q:0", "r:1", "q:1", "p:7"})));
  // {r_0, p_0} is a skew cut as well; the certificates use {r_0, q_0}
  CHECK(is_skew_cut(G, cut({"r:0", "p:0"})));
}

TEST_CASE("custom families exercise the general machinery") {
  // one cell vertex, two parallel longitudinal slots and a loop slot
  RayedGraphFamily fam;
  fam.name = "TEST_CHAIN";
  fam.cellVertices = {"x"};
  fam.slots = {{"s", 0, 0, 0, 1}, {"t", 0, 0, 0, 1}, {"o", 0, 0, 0, 0}};
  fam.minIndex = 0;

  SECTION("a cell loop is a cycle") {
    EdgeSet s(&fam, {EdgeId{2, 3}}, 4, 1, {});
    auto cyc = contains_finite_cycle(s);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 1);
    CHECK_FALSE(contains_double_ray(s).certificate.has_value());
  }
  SECTION("parallel longitudinals make 2-cycles, not double rays") {
    EdgeSet s(&fam, {}, 0, 1, {{0, 0}, {1, 0}});
    auto cyc = contains_finite_cycle(s);
    REQUIRE(cyc.has_value());
    CHECK(cyc->size() == 2);
    // one strand alone is a ray: no double ray either way
    EdgeSet one(&fam, {}, 0, 1, {{0, 0}});
    CHECK_FALSE(contains_double_ray(one).certificate.has_value());
    CHECK(is_independent_MA(one));
  }
  SECTION("a single-vertex column cannot host two disjoint tails") {
    // even with both strands the vertices coincide, so no double ray exists
    EdgeSet s(&fam, {}, 0, 2, {{0, 0}, {1, 1}});
    CHECK_FALSE(contains_double_ray(s).certificate.has_value());
  }
}

TEST_CASE("full window sweeps up to 200 cells") {
  // cycle detection: sweep every depth on an acyclic and a cyclic set
  EdgeSet acyclic = make(G, 0, 1, {{"p", 0}, {"q", 0}});
  EdgeSet cyclic = EdgeSet::all(G).without_edge(G.parse_edge("l"));
  for (int n = 1; n <= 200; ++n) {
    CHECK_FALSE(oracle::window_has_cycle(acyclic, n));
    if (n >= 3) CHECK(oracle::window_has_cycle(cyclic, n));
  }
  // double-ray evidence: the rung certificate yields evidence at every
  // depth past its onset
  EdgeSet dray = rung_double_ray(1);
  auto cert = contains_double_ray(dray).certificate;
  REQUIRE(cert.has_value());
  int p = cert->edges.period();
  int k0 = cert->edges.onset() + p;
  for (int n = k0 + p + 2; n <= 200; n += 1)
    CHECK(oracle::window_double_ray_evidence(cert->edges, n, k0, p + 2));
}

TEST_CASE("randomized sets agree with the window oracles") {
  std::mt19937 rng(424243);
  const RayedGraphFamily* fams[] = {&G, &H, &L};
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const RayedGraphFamily& fam = *fams[trial % 3];
    int period = 1 + static_cast<int>(rng() % 3);
    int onset = fam.minIndex + static_cast<int>(rng() % 4);
    std::set<std::pair<int, int>> pattern;
    for (std::size_t s = 0; s < fam.slots.size(); ++s)
      for (int r = 0; r < period; ++r)
        if (rng() % 100 < 55) pattern.insert({static_cast<int>(s), r});
    std::set<EdgeId> exceptional;
    for (int col = fam.minIndex; col < onset; ++col)
      for (std::size_t s = 0; s < fam.slots.size(); ++s)
        if (rng() % 2) exceptional.insert(EdgeId{static_cast<int>(s), col});
    for (std::size_t i = 0; i < fam.prefixEdges.size(); ++i)
      if (rng() % 2) exceptional.insert(EdgeId::prefix(static_cast<int>(i)));
    EdgeSet s(&fam, std::move(exceptional), onset, period,
              std::move(pattern));

    // exact cycle decision vs exhaustive window search
    bool cyc = contains_finite_cycle(s).has_value();
    bool cycWindow = false;
    for (int depth : {8, 30, 90})
      cycWindow = cycWindow || oracle::window_has_cycle(s, depth);
    INFO("trial " << trial << " family " << fam.name);
    CHECK(cyc == cycWindow);

    // base verdicts: spot-check the residue reduction far beyond its range
    if (trial % 4 == 0) {
      auto verdict = is_base_MA(s);
      if (verdict.kind == BaseVerdict::Kind::Base) {
        for (int col = s.onset() + 5 * s.period() + 1;
             col < s.onset() + 5 * s.period() + 3; ++col)
          for (std::size_t sl = 0; sl < fam.slots.size(); ++sl) {
            EdgeId e{static_cast<int>(sl), col};
            if (s.contains(e)) continue;
            EdgeSet ext = s.with_edge(e);
            bool dependent = contains_finite_cycle(ext).has_value() ||
                             contains_double_ray(ext).certificate.has_value();
            CHECK(dependent);
          }
      } else if (verdict.kind == BaseVerdict::Kind::NotMaximal) {
        REQUIRE(verdict.extendingEdge.has_value());
        CHECK(is_independent_MA(s.with_edge(*verdict.extendingEdge)));
      }
    }

    // double-ray decision vs flow evidence at generous depths
    auto dr = contains_double_ray(s);
    int p = s.period();
    int k0 = s.onset() + p;
    if (dr.certificate) {
      ++positives;
      CHECK(oracle::validate_double_ray_certificate(s, *dr.certificate));
    } else {
      ++negatives;
      for (int depth : {k0 + 40 * p + 50, k0 + 40 * p + 73})
        CHECK_FALSE(oracle::window_double_ray_evidence(s, depth, k0, p + 2));
    }
  }
  // the random corpus must exercise both outcomes
  CHECK(positives > 20);
  CHECK(negatives > 20);
}

TEST_CASE("edge set algebra properties") {
  std::mt19937 rng(99173);
  auto randomSet = [&](const RayedGraphFamily& fam) {
    int period = 1 + static_cast<int>(rng() % 4);
    int onset = fam.minIndex + static_cast<int>(rng() % 3);
    std::set<std::pair<int, int>> pattern;
    for (std::size_t s = 0; s < fam.slots.size(); ++s)
      for (int r = 0; r < period; ++r)
        if (rng() % 2) pattern.insert({static_cast<int>(s), r});
    std::set<EdgeId> exceptional;
    for (int col = fam.minIndex; col < onset; ++col)
      for (std::size_t s = 0; s < fam.slots.size(); ++s)
        if (rng() % 2) exceptional.insert(EdgeId{static_cast<int>(s), col});
    return EdgeSet(&fam, std::move(exceptional), onset, period,
                   std::move(pattern));
  };
  for (int trial = 0; trial < 60; ++trial) {
    const RayedGraphFamily& fam = trial % 2 ? H : G;
    EdgeSet a = randomSet(fam), b = randomSet(fam);
    CHECK(a.complement().complement().equals(a));
    // De Morgan
    CHECK(a.set_union(b).complement().equals(
        a.complement().set_intersection(b.complement())));
    CHECK(a.set_difference(b).equals(a.set_intersection(b.complement())));
    // membership agreement on a sample of edges
    for (int col : {fam.minIndex, fam.minIndex + 3, fam.minIndex + 17})
      for (std::size_t s = 0; s < fam.slots.size(); ++s) {
        EdgeId e{static_cast<int>(s), col};
        CHECK(a.set_union(b).contains(e) == (a.contains(e) || b.contains(e)));
        CHECK(a.normalized().contains(e) == a.contains(e));
      }
  }
}

TEST_CASE("intersection cardinality") {
  EdgeSet horizontalsPlusRung =
      make(H, 2, 1, {{"u", 0}, {"u'", 0}, {"d", 0}, {"d'", 0}},
           {"u:1", "u':1", "d:1", "d':1", "r:1"});
  EdgeSet cocirc = make(H, 1, 1, {{"u", 0}, {"r", 0}});
  auto res = intersection_cardinality(horizontalsPlusRung, cocirc);
  CHECK(res.infinite);

  EdgeSet r1 = make(H, 2, 1, {}, {"r:1"});
  EdgeSet r2 = make(H, 3, 1, {}, {"r:2"});
  auto res2 = intersection_cardinality(r1, r2);
  CHECK_FALSE(res2.infinite);
  CHECK(res2.count == 0);

  EdgeSet uAll = EdgeSet::slot_class(H, "u");
  EdgeSet uFirst5 = make(H, 6, 1, {}, {"u:1", "u:2", "u:3", "u:4", "u:5"});
  auto res3 = intersection_cardinality(uFirst5, uAll);
  CHECK_FALSE(res3.infinite);
  CHECK(res3.count == 5);
}
