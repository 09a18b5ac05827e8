#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bv/counterexample.hpp"
#include "bv/derivation.hpp"
#include "bv/fixtures.hpp"
#include "bv/prover.hpp"
#include "bv/shallow.hpp"
#include "bv/structure.hpp"
#include "bv/web.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Arguments may be given inline or as @path to read from a file.
std::string readArg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw CLI::ValidationError("cannot open file: " + arg.substr(1));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bv::Structure parseGoal(const std::string& arg) {
  std::string text = readArg(arg);
  // S0, S1, ... name the members of the generated family
  if (text.size() >= 2 && text[0] == 'S' &&
      text.find_first_not_of("0123456789", 1) == std::string::npos) {
    return bv::sn(std::stoi(text.substr(1))).structure;
  }
  return bv::parse(text);
}

json instanceJson(const bv::RuleInstance& inst) {
  json j;
  j["rule"] = bv::ruleName(inst.rule);
  j["context"] = inst.context.text();
  j["redex"] = inst.redex.text();
  j["contractum"] = inst.contractum.text();
  return j;
}

int cmdProve(const std::string& goalArg, size_t budget, bool asJson) {
  bv::ProveResult r = bv::prove(parseGoal(goalArg), budget);
  if (r.status == bv::ProveStatus::BudgetExceeded) {
    std::cerr << "budget exceeded after " << r.nodesExplored << " nodes\n";
    return kExitBudget;
  }
  if (r.status == bv::ProveStatus::Unprovable) {
    std::cout << "unprovable\n";
    return kExitNegative;
  }
  if (asJson) {
    std::cout << bv::derivationToJson(*r.proof) << "\n";
  } else {
    std::cout << "provable, proof of length " << r.proof->length() << "\n";
    bv::Structure cur = r.proof->conclusion;
    std::cout << cur.text() << "\n";
    for (const auto& step : r.proof->steps) {
      std::cout << "  [" << bv::ruleName(step.instance.rule) << "] "
                << step.premise.text() << "\n";
    }
  }
  return kExitPositive;
}

int cmdCheck(const std::string& derArg, bv::System system) {
  bv::Derivation d = bv::derivationFromJson(readArg(derArg));
  auto failure = bv::check(d, system);
  if (failure) {
    std::cout << "invalid at step " << failure->stepIndex << ": "
              << failure->reason << "\n";
    return kExitNegative;
  }
  std::cout << (d.isProof() ? "valid proof" : "valid derivation") << " of "
            << d.conclusion.text() << " from " << d.top().text() << "\n";
  return kExitPositive;
}

int cmdEquiv(const std::string& a, const std::string& b) {
  bv::Structure sa = bv::parse(readArg(a));
  bv::Structure sb = bv::parse(readArg(b));
  if (sa == sb) {
    std::cout << "equivalent: " << sa.text() << "\n";
    return kExitPositive;
  }
  std::cout << "not equivalent: " << sa.text() << " vs " << sb.text() << "\n";
  return kExitNegative;
}

int cmdWeb(const std::string& arg, bool asJson, bool asDot) {
  bv::RelationWeb w = bv::webOf(parseGoal(arg));
  if (asDot) {
    std::cout << bv::webToDot(w);
  } else if (asJson) {
    std::cout << bv::webToJson(w, true) << "\n";
  } else {
    for (int i = 0; i < w.size(); ++i) {
      for (int j = i + 1; j < w.size(); ++j) {
        std::cout << w.occ().entries[i].label() << " "
                  << bv::relName(w.at(i, j)) << " "
                  << w.occ().entries[j].label() << "\n";
      }
    }
  }
  return kExitPositive;
}

int cmdVerifyWeb(const std::string& arg) {
  bv::RelationWeb w = bv::webFromJson(readArg(arg));
  auto report = bv::verifyWebProperties(w);
  for (const auto& v : report.violations) {
    std::cout << v.tag << " violated by occurrences";
    for (int id : v.witness) std::cout << " " << id;
    std::cout << "\n";
  }
  auto rec = bv::reconstruct(w);
  if (!report.passed || !rec.ok) {
    std::cout << "not the web of any structure\n";
    return kExitNegative;
  }
  std::cout << "web of " << rec.structure.text() << "\n";
  return kExitPositive;
}

int cmdReconstruct(const std::string& arg, bool asJson) {
  bv::RelationWeb w = bv::webFromJson(readArg(arg));
  auto rec = bv::reconstruct(w);
  if (asJson) {
    json j;
    j["ok"] = rec.ok;
    if (rec.ok) j["structure"] = rec.structure.text();
    j["trace"] = rec.trace;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& state : rec.trace) {
      for (size_t i = 0; i < state.size(); ++i)
        std::cout << (i ? " | " : "") << state[i];
      std::cout << "\n";
    }
    std::cout << (rec.ok ? "structure: " + rec.structure.text()
                         : "not a web")
              << "\n";
  }
  return rec.ok ? kExitPositive : kExitNegative;
}

int cmdGenSn(int n, bool withDerivation, bool asJson) {
  auto s = bv::sn(n);
  if (withDerivation) {
    std::cout << bv::derivationToJson(bv::proofOfSn(n)) << "\n";
  } else if (asJson) {
    json j;
    j["n"] = n;
    j["structure"] = s.structure.text();
    j["atoms"] = s.structure.occurrenceCount();
    j["blockDepths"] = bv::alphaZeroDepths(s);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << s.structure.text() << "\n";
  }
  return kExitPositive;
}

int cmdFirstRedex(const std::string& goalArg, size_t budget, bool asJson) {
  auto report = bv::firstRedexAnalysis(parseGoal(goalArg), budget);
  if (report.budgetExceeded) {
    std::cerr << "budget exceeded after " << report.nodesExplored
              << " nodes\n";
    return kExitBudget;
  }
  if (asJson) {
    json j;
    j["entries"] = json::array();
    for (const auto& e : report.entries) {
      json ej = instanceJson(e.instance);
      ej["premise"] = e.premise.text();
      ej["redexDepth"] = e.redexDepth;
      ej["premiseProvable"] = e.premiseProvable;
      j["entries"].push_back(std::move(ej));
    }
    if (report.minProvableDepth)
      j["minProvableDepth"] = *report.minProvableDepth;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : report.entries) {
      std::cout << (e.premiseProvable ? "provable  " : "dead end  ")
                << "depth " << e.redexDepth << "  ["
                << bv::ruleName(e.instance.rule) << "] "
                << e.instance.redex.text() << " -> " << e.premise.text()
                << "\n";
    }
    if (report.minProvableDepth) {
      std::cout << "min provable first-redex depth: "
                << *report.minProvableDepth << "\n";
    } else {
      std::cout << "no provable first step\n";
    }
  }
  return report.minProvableDepth ? kExitPositive : kExitNegative;
}

int cmdDeletePair(const std::string& derArg, const std::string& atomText) {
  bv::Derivation d = bv::derivationFromJson(readArg(derArg));
  bv::Structure a = bv::parse(atomText);
  if (a.kind() != bv::Structure::Kind::Atom)
    throw CLI::ValidationError("expected a single atom, got " + atomText);
  try {
    bv::Derivation reduced = bv::deleteAtomPair(d, a.atomValue());
    std::cout << bv::derivationToJson(reduced) << "\n";
    return kExitPositive;
  } catch (const bv::AtomNotFound& e) {
    std::cout << e.what() << "\n";
    return kExitNegative;
  } catch (const bv::AmbiguousOccurrence& e) {
    std::cout << e.what() << "\n";
    return kExitNegative;
  }
}

int cmdShallowCheck(const std::string& conclusionArg,
                    const std::string& premiseArg, bool asJson) {
  bv::RuleScheme r;
  r.name = "cli";
  r.conclusion = bv::parse(readArg(conclusionArg), true);
  r.premise = bv::parse(readArg(premiseArg), true);
  auto v = bv::validateShallowRule(r);
  if (asJson) {
    json j;
    j["shallow"] = v.isShallow;
    j["depth"] = v.depth;
    j["reasons"] = v.reasons;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (v.isShallow ? "shallow" : "not shallow") << ", depth "
              << v.depth << "\n";
    for (const auto& reason : v.reasons) std::cout << "  " << reason << "\n";
  }
  return v.isShallow ? kExitPositive : kExitNegative;
}

int cmdDepth(const std::string& arg) {
  std::cout << bv::depthOfStructure(bv::parse(readArg(arg), true)) << "\n";
  return kExitPositive;
}

int cmdFixtures() {
  int failures = 0;
  auto report = [&](const char* name, bool ok) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << name << "\n";
    if (!ok) ++failures;
  };

  bv::Derivation fig = bv::derivationFromJson(bv::fixtures::kS0ProofJson);
  report("bundled proof checks in BV",
         !bv::check(fig, bv::System::BV) && fig.isProof());
  report("bundled proof concludes the hexagon structure",
         fig.conclusion == bv::parse(bv::fixtures::kS0Text));
  report("hexagon structure is provable by search",
         bv::prove(fig.conclusion).status == bv::ProveStatus::Proved);

  bv::RelationWeb six = bv::webFromJson(bv::fixtures::kSixOccurrenceWebJson);
  auto rec = bv::reconstruct(six);
  report("six-occurrence web reconstructs",
         rec.ok &&
             rec.structure == bv::parse(bv::fixtures::kSixOccurrenceStructure));

  report("generated family member 1 has a checkable proof",
         !bv::check(bv::proofOfSn(1), bv::System::BV));
  return failures == 0 ? kExitPositive : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"System BV toolkit: structures, relation webs, proof search "
               "and derivation checking"};
  app.require_subcommand(1);

  bool asJson = false;
  bool asDot = false;
  size_t budget = 1000000;
  std::string systemName = "bv";
  app.add_flag("--json", asJson, "machine-readable JSON output");
  app.add_flag("--dot", asDot, "DOT graph output (web only)");
  app.add_option("--budget", budget, "search budget in explored nodes");
  app.add_option("--system", systemName, "proof system: bv or sbv")
      ->check(CLI::IsMember({"bv", "sbv"}));

  std::string arg1, arg2;
  int n = 0;
  bool withDerivation = false;

  auto* prove = app.add_subcommand("prove", "search for a proof");
  prove->add_option("structure", arg1, "structure text, @file, or Sn")
      ->required();

  auto* chk = app.add_subcommand("check", "check a derivation");
  chk->add_option("derivation", arg1, "derivation JSON or @file")->required();

  auto* equiv = app.add_subcommand("equiv", "test structural equivalence");
  equiv->add_option("left", arg1)->required();
  equiv->add_option("right", arg2)->required();

  auto* web = app.add_subcommand("web", "relation web of a structure");
  web->add_option("structure", arg1)->required();

  auto* verify = app.add_subcommand("verify-web",
                                    "test whether a labeling is a web");
  verify->add_option("web", arg1, "web JSON or @file")->required();

  auto* rec = app.add_subcommand("reconstruct",
                                 "rebuild the structure of a web");
  rec->add_option("web", arg1, "web JSON or @file")->required();

  auto* gen = app.add_subcommand("gen-sn", "emit a member of the deep-redex "
                                           "family");
  gen->add_option("n", n, "family index")->required()
      ->check(CLI::Range(0, 12));
  gen->add_flag("--derivation", withDerivation, "emit its proof as JSON");

  auto* first = app.add_subcommand("first-redex",
                                   "analyze all possible first proof steps");
  first->add_option("--goal", arg1, "structure text, @file, or Sn")
      ->required();

  auto* del = app.add_subcommand("delete-pair",
                                 "erase a dual atom pair from a proof");
  del->add_option("derivation", arg1, "derivation JSON or @file")->required();
  del->add_option("atom", arg2, "positive atom of the pair")->required();

  auto* shallow = app.add_subcommand("shallow-check",
                                     "validate a rule scheme");
  shallow->add_option("conclusion", arg1)->required();
  shallow->add_option("premise", arg2)->required();

  auto* depth = app.add_subcommand("depth", "depth of a structure");
  depth->add_option("structure", arg1)->required();

  auto* fixtures = app.add_subcommand("fixtures", "bundled sanity fixtures");
  fixtures->add_subcommand("run", "run them")->required();

  // let --json/--budget/... appear after the subcommand name too
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    bv::System system =
        systemName == "sbv" ? bv::System::SBV : bv::System::BV;
    if (prove->parsed()) return cmdProve(arg1, budget, asJson);
    if (chk->parsed()) return cmdCheck(arg1, system);
    if (equiv->parsed()) return cmdEquiv(arg1, arg2);
    if (web->parsed()) return cmdWeb(arg1, asJson, asDot);
    if (verify->parsed()) return cmdVerifyWeb(arg1);
    if (rec->parsed()) return cmdReconstruct(arg1, asJson);
    if (gen->parsed()) return cmdGenSn(n, withDerivation, asJson);
    if (first->parsed()) return cmdFirstRedex(arg1, budget, asJson);
    if (del->parsed()) return cmdDeletePair(arg1, arg2);
    if (shallow->parsed()) return cmdShallowCheck(arg1, arg2, asJson);
    if (depth->parsed()) return cmdDepth(arg1);
    if (fixtures->parsed()) return cmdFixtures();
  } catch (const bv::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
