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

#include "wildmat/constructions.hpp"

using namespace wildmat;

namespace {
const RayedGraphFamily& H = ladder_H();
const RayedGraphFamily& G = builtin_family(BuiltinFamily::RAYED_G);
}  // namespace

TEST_CASE("C and D of the union construction") {
  EdgeSet c = build_C_union();
  CHECK(c.contains(H.parse_edge("r:1")));
  CHECK(c.contains(H.parse_edge("u:7")));
  CHECK(c.contains(H.parse_edge("d':3")));
  CHECK_FALSE(c.contains(H.parse_edge("r:2")));
  CHECK_FALSE(c.contains(H.parse_edge("r':1")));
  // restrict(C, 2) = {u1, u'1, d1, d'1, r1}
  CHECK(c.restrict_to_window(2).size() == 5);

  EdgeSet d = build_D_union();
  CHECK(d.contains(H.parse_edge("u:1")));
  CHECK(d.contains(H.parse_edge("r:9")));
  CHECK_FALSE(d.contains(H.parse_edge("u':1")));
  // restrict(E \ D, 1) = {r':1}
  auto rest1 = d.complement().restrict_to_window(1);
  REQUIRE(rest1.size() == 1);
  CHECK(H.edge_name(rest1[0]) == "r':1");

  CHECK(intersection_cardinality(c, d).infinite);
}

TEST_CASE("B1 and B2 are verified bases covering E minus D") {
  EdgeSet b1 = base_B1_union(), b2 = base_B2_union();
  CHECK(is_base_MA(b1).kind == BaseVerdict::Kind::Base);
  CHECK(is_base_MA(b2).kind == BaseVerdict::Kind::Base);
  EdgeSet rest = build_D_union().complement();
  CHECK(rest.set_difference(b1.set_union(b2)).is_empty());
  // r1 sits in B2 as the formulas require
  CHECK(b2.contains(H.parse_edge("r:1")));
  CHECK_FALSE(b1.contains(H.parse_edge("r:1")));
}

TEST_CASE("cover witnesses for e = r_n") {
  for (int n : {1, 2, 3, 4, 5, 8, 9, 50}) {
    auto w = make_cover_witness(H.parse_edge("r:" + std::to_string(n)));
    verify_cover_witness(w);
    INFO("n = " << n);
    CHECK(w.pass);
    // B2'-style half carries r_n and not r_1 (for n > 1)
    CHECK(w.i2.contains(H.parse_edge("r:" + std::to_string(n))));
    if (n > 1) CHECK_FALSE(w.i2.contains(H.parse_edge("r:1")));
  }
}

TEST_CASE("cover witnesses for e = u_n") {
  for (int n : {1, 2, 3, 4, 5, 8, 9, 50}) {
    auto w = make_cover_witness(H.parse_edge("u:" + std::to_string(n)));
    verify_cover_witness(w);
    INFO("n = " << n);
    CHECK(w.pass);
    CHECK(w.i1.contains(H.parse_edge("u:" + std::to_string(n))));
    if (n >= 2) {
      // the B1''-style half trades r'_{n-1} away
      CHECK_FALSE(w.i1.contains(H.parse_edge("r':" + std::to_string(n - 1))));
      CHECK(w.i2.contains(H.parse_edge("r':" + std::to_string(n - 1))));
    }
  }
}

TEST_CASE("edges outside D are rejected") {
  CHECK_THROWS_AS(make_cover_witness(H.parse_edge("d:3")), PreconditionError);
  CHECK_THROWS_AS(make_cover_witness(H.parse_edge("u':2")), PreconditionError);
}

TEST_CASE("counting identity") {
  auto r1 = counting_check(1);
  CHECK(r1.lhs == 1);
  CHECK(r1.rhs == 2);
  CHECK(r1.twoEdgesUncoverable);
  auto r10 = counting_check(10);
  CHECK(r10.lhs == 37);
  CHECK(r10.rhs == 38);
  CHECK(r10.twoEdgesUncoverable);
  auto r1000 = counting_check(1000);
  CHECK(r1000.lhs == 3997);
  CHECK(r1000.rhs == 3998);
  CHECK(r1000.twoEdgesUncoverable);
}

TEST_CASE("the union-h certificate verifies end to end") {
  auto cert = build_union_certificate(6);
  CHECK(run_checks(cert));
  CHECK(cert.wild);
  CHECK(cert.intersectionInfinite);
  CHECK(cert.covers.size() == 12);
  CHECK(cert.counting.size() == 6);
  for (const auto& c : cert.checks) {
    INFO(c.name);
    CHECK(c.pass);
  }
  SECTION("depth below 2 is rejected") {
    CHECK_THROWS_AS(build_union_certificate(1), PreconditionError);
  }
  SECTION("swapped covers without the double-prime adjustments fail") {
    auto bad = build_union_certificate(4, Tamper::SwapUpperCovers);
    CHECK_FALSE(run_checks(bad));
    bool foundNamed = false;
    for (const auto& c : bad.checks)
      if (!c.pass && c.name.find("cover-u:") == 0 &&
          c.name.find("covers-target") != std::string::npos)
        foundNamed = true;
    CHECK(foundNamed);
  }
  SECTION("dropping one edge from a cover fails its named check") {
    auto bad = build_union_certificate(3, Tamper::DropCoverEdge);
    CHECK_FALSE(run_checks(bad));
    bool foundNamed = false;
    for (const auto& c : bad.checks)
      if (!c.pass && c.name.find("cover-r:1") == 0) foundNamed = true;
    CHECK(foundNamed);
  }
}

TEST_CASE("the mplus-g certificate verifies end to end") {
  for (int n : {0, 2}) {
    auto cert = build_mplus_certificate(n);
    CHECK(run_checks(cert));
    CHECK(cert.wild);
    CHECK(cert.intersectionInfinite);
    for (const auto& c : cert.checks) {
      INFO("n = " << n << " check " << c.name);
      CHECK(c.pass);
    }
    // D = {l} u {q_i : all i}
    CHECK(cert.cocircuitD.contains(G.parse_edge("l")));
    CHECK(cert.cocircuitD.contains(G.parse_edge("q:13")));
    CHECK_FALSE(cert.cocircuitD.contains(G.parse_edge("p:2")));
    CHECK_FALSE(cert.cocircuitD.contains(G.parse_edge("r:4")));
  }
  SECTION("replacing B with the p-strand fails the base check by name") {
    auto bad = build_mplus_certificate(0, Tamper::NonBaseB);
    CHECK_FALSE(run_checks(bad));
    bool found = false;
    for (const auto& c : bad.checks)
      if (c.name == "B-is-MA-base") {
        CHECK_FALSE(c.pass);
        CHECK(c.detail.find("not-maximal") != std::string::npos);
        found = true;
      }
    CHECK(found);
  }
}
