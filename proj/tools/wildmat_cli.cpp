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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wildmat/json_io.hpp"
#include "wildmat/matroid_ops.hpp"
#include "wildmat/thin_sums.hpp"
#include "wildmat/version.hpp"

namespace {

using namespace wildmat;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

void emit(const Json& j, const std::string& outPath) {
  if (outPath.empty())
    std::cout << to_canonical_string(j);
  else
    save_json(outPath, j);
}

std::string mask_to_string(const std::vector<std::string>& labels, Mask s) {
  std::string out = "{";
  bool first = true;
  for (int e : mask_elements(s)) {
    if (!first) out += ",";
    out += labels[e];
    first = false;
  }
  return out + "}";
}

std::string mask_to_string(const FiniteMatroid& m, Mask s) {
  return mask_to_string(m.labels(), s);
}

int cmd_verify_axioms(const std::string& path, bool asJson) {
  RawBaseFile raw = raw_bases_from_json(load_json(path));
  // independence family = downward closure of the listed bases
  std::set<Mask> indep;
  std::vector<Mask> stack(raw.bases.begin(), raw.bases.end());
  stack.push_back(0);
  while (!stack.empty()) {
    Mask s = stack.back();
    stack.pop_back();
    if (!indep.insert(s).second) continue;
    for (Mask m = s; m; m &= m - 1) stack.push_back(s & ~(m & -m));
  }
  auto rep = verify_axioms(static_cast<int>(raw.labels.size()),
                           {indep.begin(), indep.end()});
  if (asJson) {
    Json j;
    j["ok"] = rep.ok;
    j["note"] = rep.note;
    if (!rep.ok) {
      j["violated"] = AxiomReport::name(rep.violated);
      Json w;
      if (rep.violated == AxiomReport::Axiom::I2) {
        w["set"] = mask_to_string(raw.labels, rep.witness.setA);
        w["element"] = raw.labels[rep.witness.element];
      } else if (rep.violated == AxiomReport::Axiom::I3) {
        w["I"] = mask_to_string(raw.labels, rep.witness.setA);
        w["I_prime"] = mask_to_string(raw.labels, rep.witness.setB);
      }
      j["witness"] = w;
    }
    std::cout << to_canonical_string(j);
  } else if (rep.ok) {
    std::cout << "ok: (I1)-(I3) hold; " << rep.note << "\n";
  } else {
    std::cout << "violated (" << AxiomReport::name(rep.violated) << ")";
    if (rep.violated == AxiomReport::Axiom::I2)
      std::cout << ": set " << mask_to_string(raw.labels, rep.witness.setA)
                << " minus " << raw.labels[rep.witness.element]
                << " is not in the family";
    if (rep.violated == AxiomReport::Axiom::I3)
      std::cout << ": I = " << mask_to_string(raw.labels, rep.witness.setA)
                << " cannot be augmented from maximal I' = "
                << mask_to_string(raw.labels, rep.witness.setB);
    std::cout << "\n";
  }
  return rep.ok ? kExitOk : kExitViolation;
}

int run(int argc, char** argv) {
  CLI::App app{"wildmat: matroid constructions with infinite "
               "circuit-cocircuit intersections"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  // verify-axioms
  std::string vaPath;
  bool vaJson = false;
  auto* va = app.add_subcommand("verify-axioms",
                                "check (I1)-(I3) on a matroid file");
  va->add_option("file", vaPath)->required();
  va->add_flag("--json", vaJson);

  // unary matroid operators
  struct UnaryCmd {
    CLI::App* sub = nullptr;
    std::string in, out;
    bool asJson = false;
  };
  std::map<std::string, UnaryCmd> unary;
  const std::pair<const char*, const char*> unaryCmds[] = {
      {"plus", "matroid whose bases are the bases of M plus one element"},
      {"minus", "matroid whose bases are the bases of M minus one element"},
      {"dual", "dual matroid"},
      {"circuits", "minimal dependent sets"},
      {"cocircuits", "circuits of the dual"},
      {"circuits-lemma33",
       "circuits of plus(M), assembled from circuit pairs"},
      {"wild-scan", "max |C n D| over circuits C and cocircuits D"},
  };
  for (auto [name, desc] : unaryCmds) {
    UnaryCmd& c = unary[name];  // map nodes are stable; options bind here
    c.sub = app.add_subcommand(name, desc);
    c.sub->add_option("file", c.in)->required();
    c.sub->add_option("--out", c.out);
    c.sub->add_flag("--json", c.asJson);
  }

  std::string unionA, unionB, unionOut;
  auto* un = app.add_subcommand("union", "union of two matroid files");
  un->add_option("first", unionA)->required();
  un->add_option("second", unionB)->required();
  un->add_option("--out", unionOut);

  // certify
  std::string certTag, certOut;
  int certDepth = 50, certN = 0;
  auto* certify = app.add_subcommand("certify", "build a wildness certificate");
  certify->add_option("tag", certTag)
      ->required()
      ->check(CLI::IsMember({"mplus-g", "union-h"}));
  certify->add_option("--depth", certDepth, "cover depth for union-h");
  certify->add_option("--n", certN, "double-ray index for mplus-g");
  certify->add_option("--out", certOut);

  std::string recheckPath;
  auto* recheck = app.add_subcommand("recheck",
                                     "re-verify a stored certificate");
  recheck->add_option("file", recheckPath)->required();

  // thinsums
  auto* thinsums = app.add_subcommand("thinsums", "thin-sums operations");
  thinsums->require_subcommand(1);
  std::string tsCheckPath, tsFamily = "G";
  bool tsCheckJson = false;
  auto* tsCheck = thinsums->add_subcommand("check",
                                           "verify a thin dependence file");
  tsCheck->add_option("file", tsCheckPath)->required();
  tsCheck->add_option("--family", tsFamily)
      ->check(CLI::IsMember({"G", "RAYED_G"}));
  tsCheck->add_flag("--json", tsCheckJson);
  std::string tsBuildKind, tsBuildOut;
  int tsN = 0, tsL = 0, tsM = 0;
  auto* tsBuild = thinsums->add_subcommand("build",
                                           "emit a one-ray or three-rung dependence");
  tsBuild->add_option("kind", tsBuildKind)
      ->required()
      ->check(CLI::IsMember({"oneray", "threerung"}));
  tsBuild->add_option("--n", tsN)->required();
  tsBuild->add_option("--l", tsL);
  tsBuild->add_option("--m", tsM);
  tsBuild->add_option("--out", tsBuildOut);
  std::string tsEquivPath;
  auto* tsEquiv = thinsums->add_subcommand(
      "equiv", "compare thin-sums and cycle matroids of a finite graph");
  tsEquiv->add_option("file", tsEquivPath)->required();

  CLI11_PARSE(app, argc, argv);

  if (va->parsed()) return cmd_verify_axioms(vaPath, vaJson);

  for (auto& [name, cmd] : unary) {
    if (!cmd.sub->parsed()) continue;
    FiniteMatroid m = matroid_from_json(load_json(cmd.in));
    if (name == "plus" || name == "minus" || name == "dual") {
      FiniteMatroid out = name == "plus"   ? plus(m)
                          : name == "minus" ? minus(m)
                                            : m.dual();
      emit(matroid_to_json(out), cmd.out);
      return kExitOk;
    }
    if (name == "circuits" || name == "cocircuits" ||
        name == "circuits-lemma33") {
      SetFamily fam = name == "circuits"     ? m.circuits()
                      : name == "cocircuits" ? m.cocircuits()
                                             : circuits_of_plus_by_assembly(m);
      emit(set_family_to_json(m, fam), cmd.out);
      return kExitOk;
    }
    // wild-scan
    auto res = max_circuit_cocircuit_intersection(m);
    if (cmd.asJson || !cmd.out.empty()) {
      Json j;
      j["max"] = res.max;
      j["finite"] = true;
      if (res.hasWitness) {
        j["circuit"] = mask_to_string(m, res.circuit);
        j["cocircuit"] = mask_to_string(m, res.cocircuit);
      }
      emit(j, cmd.out);
    } else {
      std::cout << "max |C n D| = " << res.max
                << (res.hasWitness
                        ? " with C = " + mask_to_string(m, res.circuit) +
                              ", D = " + mask_to_string(m, res.cocircuit)
                        : " (no circuit/cocircuit pair)")
                << "; finite, as every finite matroid is tame\n";
    }
    return kExitOk;
  }

  if (un->parsed()) {
    FiniteMatroid a = matroid_from_json(load_json(unionA));
    FiniteMatroid b = matroid_from_json(load_json(unionB));
    emit(matroid_to_json(matroid_union(a, b)), unionOut);
    return kExitOk;
  }

  if (certify->parsed()) {
    WildnessCertificate cert = certTag == "mplus-g"
                                   ? build_mplus_certificate(certN)
                                   : build_union_certificate(certDepth);
    bool ok = run_checks(cert);
    emit(certificate_to_json(cert), certOut);
    for (const auto& c : cert.checks)
      if (!c.pass) std::cerr << "FAILED check: " << c.name << "\n";
    std::cerr << (ok ? "WILD: all checks passed\n"
                     : "verification failed\n");
    return ok ? kExitOk : kExitViolation;
  }

  if (recheck->parsed()) {
    WildnessCertificate cert = certificate_from_json(load_json(recheckPath));
    bool ok = run_checks(cert);
    for (const auto& c : cert.checks)
      std::cout << (c.pass ? "pass: " : "FAIL: ") << c.name << "\n";
    std::cout << (ok ? "certificate verifies\n" : "certificate REJECTED\n");
    return ok ? kExitOk : kExitViolation;
  }

  if (tsCheck->parsed()) {
    auto lam = thin_coefficients_from_json(load_json(tsCheckPath));
    auto v = is_thin_dependence(lam);
    if (tsCheckJson) {
      Json j;
      j["ok"] = v.ok();
      j["trivial"] = v.trivial;
      if (!v.ok()) {
        j["kind"] = v.kind == ThinVerdict::Kind::IllDefinedAt ? "ill-defined"
                                                              : "nonzero";
        j["vertex"] = v.vertex;
      }
      std::cout << to_canonical_string(j);
      return v.ok() ? kExitOk : kExitViolation;
    }
    switch (v.kind) {
      case ThinVerdict::Kind::Ok:
        std::cout << "ok: thin dependence"
                  << (v.trivial ? " (warning: the zero family is trivial)"
                                : "")
                  << "\n";
        return kExitOk;
      case ThinVerdict::Kind::IllDefinedAt:
        std::cout << "ill-defined at " << v.vertex
                  << ": infinitely many nonzero terms\n";
        return kExitViolation;
      default:
        std::cout << "nonzero at " << v.vertex << "\n";
        return kExitViolation;
    }
  }

  if (tsBuild->parsed()) {
    ThinCoefficients<Rational> lam =
        tsBuildKind == "oneray" ? build_lambda_f_oneray(tsN)
                                : build_lambda_f_threerung(tsL, tsM, tsN);
    emit(thin_coefficients_to_json(lam), tsBuildOut);
    return kExitOk;
  }

  if (tsEquiv->parsed()) {
    Multigraph g = multigraph_from_json(load_json(tsEquivPath));
    bool equal = thin_sums_equals_cycle_matroid(g);
    std::cout << (equal ? "equal: thin-sums matroid of f^G matches the "
                          "finite cycle matroid\n"
                        : "DIFFER\n");
    return equal ? kExitOk : kExitViolation;
  }

  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const wildmat::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const wildmat::PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kExitViolation;
  } catch (const wildmat::GroundTooLarge& e) {
    std::cerr << "ground-too-large: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
