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
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtime budgets are part of the criteria and are enforced.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "wildmat/json_io.hpp"
#include "wildmat/matroid_ops.hpp"
#include "wildmat/thin_sums.hpp"

using namespace wildmat;

namespace {

unsigned long gSeed = 20260809;
std::string gCli;

struct Criterion {
  int id;
  std::string title;
  double budgetSeconds;
  std::function<bool(std::string&)> run;
};

int run_cli(const std::string& args) {
  std::string cmd = gCli + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

// --- 1: axiom suite -------------------------------------------------------

bool criterion_axioms(std::string& detail) {
  auto corpus = corpus::matroid_corpus();
  for (const auto& m : corpus) {
    if (!verify_axioms(m.size(), m.independent_sets()).ok) {
      detail = "corpus matroid failed the axioms";
      return false;
    }
  }
  // seeded violations of (I1), (I2), (I3)
  auto v1 = verify_axioms(1, {0b1});  // missing empty set
  auto v2 = verify_axioms(2, {0b00, 0b11});  // not subset-closed
  std::set<Mask> closure;  // downward closure of {{a},{b,c}}: violates (I3)
  for (Mask seed : {Mask(0b001), Mask(0b110)})
    for (Mask sub = seed;; sub = (sub - 1) & seed) {
      closure.insert(sub);
      if (sub == 0) break;
    }
  auto v3 = verify_axioms(3, {closure.begin(), closure.end()});
  bool rejects = !v1.ok && v1.violated == AxiomReport::Axiom::I1 &&
                 !v2.ok && v2.violated == AxiomReport::Axiom::I2 &&
                 !v3.ok && v3.violated == AxiomReport::Axiom::I3;
  if (!rejects) detail = "a seeded violation was not rejected correctly";
  std::ostringstream os;
  os << corpus.size() << " corpus matroids verified, 3 violations rejected";
  if (rejects) detail = os.str();
  return rejects;
}

// --- 2: circuit-description oracle equivalence ------------------------------

bool criterion_plus_circuits(std::string& detail) {
  int checked = 0;
  for (const auto& m : corpus::matroid_corpus()) {
    if (m.rank() < m.size()) {
      if (!(circuits_of_plus_by_assembly(m) == plus(m).circuits())) {
        detail = "plus-circuit assembly disagrees with brute force";
        return false;
      }
      ++checked;
    }
    if (m.rank() >= 1 && !(circuits_of_minus(m) == minus(m).circuits())) {
      detail = "circuits_of_minus disagrees with brute force";
      return false;
    }
  }
  detail = std::to_string(checked) + " matroids, exact set equality";
  return true;
}

// --- 3: duality square -----------------------------------------------------

bool criterion_duality_square(std::string& detail) {
  int checked = 0;
  for (const auto& m : corpus::matroid_corpus()) {
    if (m.rank() == m.size()) continue;  // E is a base: plus undefined
    if (!(plus(m).dual() == minus(m.dual()))) {
      detail = "dual(plus(M)) != minus(dual(M))";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " matroids, exact equality";
  return true;
}

// --- 4: union identities ----------------------------------------------------

bool criterion_union(std::string& detail) {
  if (!(matroid_union(uniform_matroid(1, 3), uniform_matroid(1, 3)) ==
        uniform_matroid(2, 3))) {
    detail = "U13 v U13 != U23";
    return false;
  }
  int checked = 0;
  for (const auto& m : corpus::matroid_corpus()) {
    if (m.rank() == m.size()) continue;
    if (!(matroid_union(m, uniform_matroid(1, m.size(), m.labels())) ==
          plus(m))) {
      detail = "M v U_{1,E} != plus(M)";
      return false;
    }
    ++checked;
  }
  detail = std::to_string(checked) + " union identities";
  return true;
}

// --- 5: counting claim -----------------------------------------------------

bool criterion_counting(std::string& detail) {
  for (int n = 1; n <= 1000; ++n) {
    CountingRow row = counting_check(n);
    if (row.lhs != 4LL * n - 3 || row.rhs != 2LL * (2 * n - 1) ||
        !row.twoEdgesUncoverable) {
      detail = "failure at n = " + std::to_string(n);
      return false;
    }
  }
  detail = "|restrict(E\\D, n)| = 4n-3 and 4n-1 > 4n-2 for n = 1..1000";
  return true;
}

// --- 6: union-h certificate -------------------------------------------------

bool criterion_certify_union(std::string& detail) {
  std::string out = "/tmp/wildmat_acceptance_union.json";
  if (run_cli("certify union-h --depth 50 --out " + out) != 0) {
    detail = "certify union-h --depth 50 exited nonzero";
    return false;
  }
  auto cert = certificate_from_json(load_json(out));
  if (cert.covers.size() != 100) {
    detail = "expected 100 cover witnesses";
    return false;
  }
  if (!run_checks(cert) || !cert.intersectionInfinite) {
    detail = "re-verification failed";
    return false;
  }
  detail = "100 covers verified, |C n D| = INFINITE";
  return true;
}

// --- 7: mplus-g certificate -------------------------------------------------

bool criterion_certify_mplus(std::string& detail) {
  std::string out = "/tmp/wildmat_acceptance_mplus.json";
  if (run_cli("certify mplus-g --out " + out) != 0) {
    detail = "certify mplus-g exited nonzero";
    return false;
  }
  auto cert = certificate_from_json(load_json(out));
  if (!run_checks(cert) || !cert.intersectionInfinite) {
    detail = "re-verification failed";
    return false;
  }
  detail = "O, B, C = O+l, D = E\\B all verified, |C n D| = INFINITE";
  return true;
}

// --- 8: thin-sums vs cycle matroids, exhaustively ----------------------------

bool criterion_thin_vs_cycle(std::string& detail) {
  auto graphs = corpus::connected_multigraphs(6);
  for (const auto& g : graphs)
    if (!thin_sums_equals_cycle_matroid(g)) {
      detail = "a graph separates the two matroids";
      return false;
    }
  detail = std::to_string(graphs.size()) +
           " connected multigraphs with <= 6 edges, exact";
  return true;
}

// --- 9: dependence suite -------------------------------------------------------

bool criterion_dependences(std::string& detail) {
  int count = 0;
  for (int n = 0; n <= 30; ++n) {
    auto lam = build_lambda_f_oneray(n);
    if (!is_thin_dependence(lam).ok() || !support_degree_check(lam) ||
        !lam.support().equals(oneray_circuit(n, n != 0))) {
      detail = "oneray failure at n = " + std::to_string(n);
      return false;
    }
    ++count;
  }
  for (int l = 0; l <= 28; ++l)
    for (int m = l + 1; m <= 29; ++m)
      for (int n = m + 1; n <= 30; ++n) {
        auto lam = build_lambda_f_threerung(l, m, n);
        if (!is_thin_dependence(lam).ok() || !support_degree_check(lam) ||
            !lam.support().equals(threerung_circuit(l, m, n))) {
          detail = "threerung failure at " + std::to_string(l) + "," +
                   std::to_string(m) + "," + std::to_string(n);
          return false;
        }
        ++count;
      }
  detail = std::to_string(count) + " dependences, support exact";
  return true;
}

// --- 10: recurrence algebra -----------------------------------------------------

template <Field F, typename Gen>
bool random_recurrence_trials(int trials, int kMax, Gen nonzero,
                              std::mt19937& rng, std::string& detail) {
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  for (int t = 0; t < trials; ++t) {
    int k = 1 + static_cast<int>(rng() % kMax);
    Chain chain = (rng() % 2) ? Chain::P : Chain::Q;
    int cS = g.slot_index(chain == Chain::P ? "p" : "q");
    int rS = g.slot_index("r");
    std::vector<ThinCoefficients<F>> lams;
    ThinCoefficients<F> l0;
    l0.fam = &g;
    l0.explicitValues[EdgeId{rS, 0}] = nonzero();
    l0.explicitValues[EdgeId{cS, 0}] = nonzero();
    lams.push_back(l0);
    for (int i = 1; i <= k; ++i) {
      ThinCoefficients<F> li;
      li.fam = &g;
      li.explicitValues[EdgeId{cS, i - 1}] = nonzero();
      li.explicitValues[EdgeId{rS, i}] = nonzero();
      li.explicitValues[EdgeId{cS, i}] = nonzero();
      lams.push_back(li);
    }
    auto res = mu_nu_recurrence(lams, chain);
    if (!verify_telescoping(res.nu, res.mu, lams, chain)) {
      detail = "telescoping failed on a random trial";
      return false;
    }
    if (res.lambdaPrime.at(EdgeId{rS, 0}) == F(0)) {
      detail = "lambda'_{r_0} vanished";
      return false;
    }
  }
  return true;
}

bool criterion_recurrence(std::string& detail) {
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  // canonical family at k = 100
  std::vector<ThinCoefficients<Rational>> lams;
  {
    ThinCoefficients<Rational> l0;
    l0.fam = &g;
    l0.explicitValues[g.parse_edge("r:0")] = Rational(1);
    l0.explicitValues[g.parse_edge("p:0")] = Rational(-1);
    lams.push_back(l0);
    for (int i = 1; i <= 100; ++i) {
      ThinCoefficients<Rational> li;
      li.fam = &g;
      li.explicitValues[g.parse_edge("p:" + std::to_string(i - 1))] =
          Rational(1);
      li.explicitValues[g.parse_edge("r:" + std::to_string(i))] = Rational(1);
      li.explicitValues[g.parse_edge("p:" + std::to_string(i))] = Rational(-1);
      lams.push_back(li);
    }
  }
  auto res = mu_nu_recurrence(lams, Chain::P);
  if (!verify_telescoping(res.nu, res.mu, lams, Chain::P)) {
    detail = "canonical k = 100 telescoping failed";
    return false;
  }
  std::mt19937 rng(static_cast<unsigned>(gSeed));
  auto randRat = [&rng]() {
    static const int nums[] = {-3, -2, -1, 1, 2, 3, 5, -5, 7};
    static const int dens[] = {1, 2, 3};
    Rational q(nums[rng() % 9], dens[rng() % 3]);
    q.canonicalize();
    return q;
  };
  if (!random_recurrence_trials<Rational>(200, 100, randRat, rng, detail))
    return false;
  auto randGf3 = [&rng]() { return GF<3>(1 + static_cast<int>(rng() % 2)); };
  if (!random_recurrence_trials<GF<3>>(200, 100, randGf3, rng, detail))
    return false;
  detail = "canonical k=100 plus 200 random trials over Q and over GF(3)";
  return true;
}

// --- 11: tameness of finite matroids ------------------------------------------

bool criterion_tameness(std::string& detail) {
  int witnesses = 0;
  for (const auto& m : corpus::matroid_corpus()) {
    auto res = max_circuit_cocircuit_intersection(m);
    if (res.max > m.size()) {
      detail = "scan exceeded the ground size";
      return false;
    }
    if (res.hasWitness) {
      if (res.max == 1) {
        detail = "orthogonality violated: |C n D| = 1";
        return false;
      }
      ++witnesses;
    }
  }
  detail = std::to_string(witnesses) + " witness pairs, all finite, none of size 1";
  return true;
}

// --- 12: negative controls -----------------------------------------------------

bool criterion_negative_controls(std::string& detail) {
  // (a) swapped covers for e = u_n without the double-prime adjustments
  auto bad1 = build_union_certificate(4, Tamper::SwapUpperCovers);
  bool fail1 = !run_checks(bad1);
  bool named1 = false;
  for (const auto& c : bad1.checks)
    if (!c.pass && c.name.rfind("cover-u:", 0) == 0) named1 = true;
  // (b) perturbed mu_5
  const RayedGraphFamily& g = builtin_family(BuiltinFamily::RAYED_G);
  std::vector<ThinCoefficients<Rational>> lams;
  ThinCoefficients<Rational> l0;
  l0.fam = &g;
  l0.explicitValues[g.parse_edge("r:0")] = Rational(1);
  l0.explicitValues[g.parse_edge("p:0")] = Rational(-1);
  lams.push_back(l0);
  for (int i = 1; i <= 10; ++i) {
    ThinCoefficients<Rational> li;
    li.fam = &g;
    li.explicitValues[g.parse_edge("p:" + std::to_string(i - 1))] = Rational(1);
    li.explicitValues[g.parse_edge("r:" + std::to_string(i))] = Rational(1);
    li.explicitValues[g.parse_edge("p:" + std::to_string(i))] = Rational(-1);
    lams.push_back(li);
  }
  auto res = mu_nu_recurrence(lams, Chain::P);
  auto mu = res.mu;
  mu[5] = mu[5] + Rational(1);
  bool fail2 = !verify_telescoping(res.nu, mu, lams, Chain::P) &&
               verify_telescoping(res.nu, res.mu, lams, Chain::P);
  // (c) non-base B in the mplus certificate
  auto bad3 = build_mplus_certificate(0, Tamper::NonBaseB);
  bool fail3 = !run_checks(bad3);
  bool named3 = false;
  for (const auto& c : bad3.checks)
    if (!c.pass && c.name == "B-is-MA-base" &&
        c.detail.find("not-maximal") != std::string::npos)
      named3 = true;
  bool ok = fail1 && named1 && fail2 && fail3 && named3;
  detail = ok ? "all three tampers fail with the expected named checks"
              : "a tamper went undetected";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) gSeed = std::stoul(argv[++i]);
  }
  if (const char* cli = std::getenv("WILDMAT_CLI")) {
    gCli = cli;
  } else {
    auto self = std::filesystem::path(argv[0]).parent_path() / "wildmat";
    gCli = self.string();
  }

  std::vector<Criterion> criteria = {
      {1, "axiom suite on the generator corpus + seeded violations", 10,
       criterion_axioms},
      {2, "plus/minus circuit descriptions vs brute force", 60,
       criterion_plus_circuits},
      {3, "duality square dual(plus(M)) = minus(dual(M))", 60,
       criterion_duality_square},
      {4, "union identities", 60, criterion_union},
      {5, "counting claim 4n-3 vs 2(2n-1) for n <= 1000", 5,
       criterion_counting},
      {6, "certify union-h --depth 50", 60, criterion_certify_union},
      {7, "certify mplus-g", 10, criterion_certify_mplus},
      {8, "thin-sums = cycle matroid, all connected multigraphs <= 6 edges", 60,
       criterion_thin_vs_cycle},
      {9, "dependence suite (one-ray n <= 30, all three-rung triples)", 10,
       criterion_dependences},
      {10, "coefficient recurrence + telescoping (k = 100, 200 trials, Q, GF3)",
       10, criterion_recurrence},
      {11, "tameness and orthogonality of the wild-scan", 60,
       criterion_tameness},
      {12, "negative controls (tamper tests)", 60,
       criterion_negative_controls},
  };

  bool allPass = true;
  for (auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool inBudget = secs < c.budgetSeconds;
    bool ok = pass && inBudget;
    allPass = allPass && ok;
    std::printf("[%2d] %s  %-62s (%.2fs%s) %s\n", c.id, ok ? "PASS" : "FAIL",
                c.title.c_str(), secs,
                inBudget ? "" : " OVER BUDGET", detail.c_str());
  }
  std::printf("%s\n", allPass ? "acceptance: ALL CRITERIA PASS"
                              : "acceptance: FAILURES PRESENT");
  return allPass ? 0 : 1;
}
