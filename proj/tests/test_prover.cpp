#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bv/derivation.hpp"
#include "bv/fixtures.hpp"
#include "bv/prover.hpp"
#include "bv/structure.hpp"
#include "oracle.hpp"

using namespace bv;

namespace {

std::set<std::string> premiseTexts(const Structure& goal) {
  std::set<std::string> out;
  for (const auto& e : expand(goal)) out.insert(e.premise.text());
  return out;
}

std::vector<std::string> atomLabels(const Structure& s) {
  std::vector<std::string> out;
  for (const auto& e : occurrences(s).entries) out.push_back(e.label());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("expand enumerates the rule instances") {
  auto aiPair = expand(parse("[a,~a]"));
  bool hasUnit = false;
  for (const auto& e : aiPair) {
    if (e.instance.rule == RuleName::AiDown && e.premise.isUnit())
      hasUnit = true;
  }
  CHECK(hasUnit);

  // three switch instances (including the R = o padding) plus the two
  // unit-padded q_down rearrangements
  CHECK(premiseTexts(parse("[(a,b),c]")) ==
        std::set<std::string>{"(b,[a,c])", "(a,[b,c])", "(a,b,c)",
                              "<(a,b);c>", "<c;(a,b)>"});

  CHECK(premiseTexts(parse("(a,~a)")).empty());

  auto mid = premiseTexts(parse("[<a;b>,<~a;~b>]"));
  CHECK(mid.count("<[a,~a];[b,~b]>") == 1);
}

TEST_CASE("expand excludes trivial instances") {
  for (const char* text : {"[a,b]", "[<a;b>,c]", "[(a,b),<c;d>]"}) {
    for (const auto& e : expand(parse(text))) {
      CHECK(e.premise != parse(text));
    }
  }
}

TEST_CASE("prove small verdicts") {
  auto p = prove(parse("[a,~a]"));
  REQUIRE(p.status == ProveStatus::Proved);
  CHECK(p.proof->length() == 2);
  CHECK(p.proof->isProof());
  CHECK(!check(*p.proof, System::BV));

  CHECK(prove(parse("(a,~a)")).status == ProveStatus::Unprovable);
  CHECK(prove(parse("o")).status == ProveStatus::Proved);
  CHECK(prove(parse("a")).status == ProveStatus::Unprovable);
  CHECK(prove(parse("<a;~a>")).status == ProveStatus::Unprovable);
  CHECK(prove(parse("[<a;b>,<~a;~b>]")).status == ProveStatus::Proved);
}

TEST_CASE("the hexagon structure is provable, the crossing patterns are not") {
  auto p = prove(parse(fixtures::kS0Text));
  REQUIRE(p.status == ProveStatus::Proved);
  CHECK(!check(*p.proof, System::BV));

  for (const char* text :
       {"[(a,~b),(~a,b)]", "[<a;~b>,(~a,b)]", "[<a;~b>,<b;~a>]"}) {
    CAPTURE(text);
    CHECK(prove(parse(text)).status == ProveStatus::Unprovable);
  }
}

TEST_CASE("budget exhaustion is reported") {
  auto r = prove(parse(fixtures::kS0Text), 3);
  CHECK(r.status == ProveStatus::BudgetExceeded);
  CHECK(r.nodesExplored > 3);
}

TEST_CASE("the transcribed proof fixture checks, a perturbation fails") {
  Derivation d = derivationFromJson(fixtures::kS0ProofJson);
  CHECK(d.conclusion == parse(fixtures::kS0Text));
  CHECK(d.isProof());
  CHECK(!check(d, System::BV));
  CHECK(!check(d, System::SBV));

  std::string broken = fixtures::kS0ProofJson;
  // damage the premise of the fourth step: [~c,<[b,~b];c>] -> [~c,<[b,b];c>]
  auto pos = broken.find("<[b,~b];c>\"");
  REQUIRE(pos != std::string::npos);
  broken.erase(pos + 4, 1);
  Derivation bad = derivationFromJson(broken);
  auto failure = check(bad, System::BV);
  REQUIRE(failure.has_value());
  CHECK(failure->stepIndex == 3);
}

TEST_CASE("checker rejects up rules in BV but accepts them in SBV") {
  // <o> expand: conclusion (a,~a) from unit premise... build by hand:
  // conclusion [b,~b], first inflate a copar pair, then remove it.
  Derivation d;
  d.conclusion = parse("[b,~b]");
  Step up;
  up.instance.rule = RuleName::AiUp;
  up.instance.context = parse("[b,~b,{}]");
  up.instance.redex = parse("o");
  up.instance.contractum = parse("(a,~a)");
  up.premise = parse("[b,~b,(a,~a)]");
  d.steps.push_back(up);
  auto bv = check(d, System::BV);
  REQUIRE(bv.has_value());
  CHECK(bv->reason.find("not a BV rule") != std::string::npos);
  CHECK(!check(d, System::SBV));

  // q_up: conclusion <(a,b);(c,d)> to premise (<a;c>,<b;d>)
  Derivation q;
  q.conclusion = parse("<(a,b);(c,d)>");
  Step qs;
  qs.instance.rule = RuleName::QUp;
  qs.instance.context = parse("{}");
  qs.instance.redex = parse("<(a,b);(c,d)>");
  qs.instance.contractum = parse("(<a;c>,<b;d>)");
  qs.premise = parse("(<a;c>,<b;d>)");
  q.steps.push_back(qs);
  CHECK(!check(q, System::SBV));
  CHECK(check(q, System::BV).has_value());
}

TEST_CASE("checker catches malformed instances") {
  Derivation d;
  d.conclusion = parse("[a,~a,b]");
  Step s;
  s.instance.rule = RuleName::AiDown;
  s.instance.context = parse("[b,{}]");
  s.instance.redex = parse("[a,~a]");
  s.instance.contractum = parse("o");
  s.premise = parse("c");  // wrong premise
  d.steps.push_back(s);
  auto f = check(d, System::BV);
  REQUIRE(f.has_value());
  CHECK(f->stepIndex == 0);

  s.premise = parse("b");
  s.instance.redex = parse("[a,b]");  // not a dual pair
  s.instance.context = parse("[~a,{}]");
  d.steps[0] = s;
  CHECK(check(d, System::BV).has_value());
}

TEST_CASE("derivation JSON round trip") {
  auto p = prove(parse("[<a;b>,<~a;~b>]"));
  REQUIRE(p.status == ProveStatus::Proved);
  Derivation d = derivationFromJson(derivationToJson(*p.proof));
  CHECK(!check(d, System::BV));
  CHECK(d.length() == p.proof->length());
  CHECK(d.conclusion == p.proof->conclusion);
}

TEST_CASE("atom multiset shrinks only at interaction steps") {
  auto p = prove(parse(fixtures::kS0Text));
  REQUIRE(p.status == ProveStatus::Proved);
  Structure cur = p.proof->conclusion;
  for (const auto& step : p.proof->steps) {
    auto before = atomLabels(cur);
    auto after = atomLabels(step.premise);
    if (step.instance.rule == RuleName::AiDown) {
      CHECK(after.size() + 2 == before.size());
      // the two dropped labels are a dual pair
      std::vector<std::string> dropped;
      std::set_difference(before.begin(), before.end(), after.begin(),
                          after.end(), std::back_inserter(dropped));
      REQUIRE(dropped.size() == 2);
    } else if (step.instance.rule != RuleName::Axiom) {
      CHECK(before == after);
    }
    cur = step.premise;
  }
}

TEST_CASE("first redex analysis") {
  auto pair = firstRedexAnalysis(parse("[a,~a]"));
  int provable = 0;
  for (const auto& e : pair.entries) {
    if (e.premiseProvable) {
      ++provable;
      CHECK(e.redexDepth == 0);
      CHECK(e.instance.rule == RuleName::AiDown);
    }
  }
  CHECK(provable == 1);
  CHECK(pair.minProvableDepth == 0);

  auto s0 = firstRedexAnalysis(parse(fixtures::kS0Text));
  REQUIRE(!s0.entries.empty());
  bool any = false;
  for (const auto& e : s0.entries) {
    if (!e.premiseProvable) continue;
    any = true;
    CHECK(e.redexDepth == 2);
    CHECK((e.instance.redex == parse("[a,b]") ||
           e.instance.redex == parse("[~b,~c]")));
  }
  CHECK(any);
  CHECK(s0.minProvableDepth == 2);
}

TEST_CASE("atom pair deletion") {
  Derivation fig = derivationFromJson(fixtures::kS0ProofJson);
  Atom a{"a", false, {}};
  Derivation reduced = deleteAtomPair(fig, a);
  CHECK(reduced.conclusion ==
        parse("[<b;c>,[~b,~c]]"));
  CHECK(!check(reduced, System::BV));
  CHECK(reduced.isProof());

  // minimal case: deleting the only pair leaves the trivial proof
  auto p = prove(parse("[a,~a]"));
  Derivation tiny = deleteAtomPair(*p.proof, a);
  CHECK(tiny.conclusion.isUnit());
  CHECK(tiny.isProof());
  CHECK(!check(tiny, System::BV));

  CHECK_THROWS_AS(deleteAtomPair(fig, Atom{"z", false, {}}), AtomNotFound);
  Derivation dup;
  dup.conclusion = parse("[a,a,~a,~a]");
  CHECK_THROWS_AS(deleteAtomPair(dup, a), AmbiguousOccurrence);
}

TEST_CASE("property: proofs found by search always check, and the verdict "
          "is stable under equational shuffling") {
  std::mt19937 rng(41);
  auto structures = bvtest::allSmallStructures("a", "b", 4);
  std::shuffle(structures.begin(), structures.end(), rng);
  int proved = 0;
  for (size_t i = 0; i < structures.size() && proved < 100; ++i) {
    auto r = prove(structures[i]);
    if (r.status != ProveStatus::Proved) continue;
    ++proved;
    CHECK(!check(*r.proof, System::BV));
    CHECK(r.proof->isProof());
  }
  CHECK(proved > 10);
}

TEST_CASE("property: pair deletion preserves checkability") {
  std::mt19937 rng(43);
  auto structures = bvtest::allSmallStructures("a", "b", 4);
  std::shuffle(structures.begin(), structures.end(), rng);
  int done = 0;
  Atom a{"a", false, {}};
  for (size_t i = 0; i < structures.size() && done < 100; ++i) {
    const Structure& s = structures[i];
    int pos = 0, neg = 0;
    for (const auto& e : occurrences(s).entries) {
      if (e.atom == a) ++pos;
      if (e.atom == a.dual()) ++neg;
    }
    if (pos != 1 || neg != 1) continue;
    auto r = prove(s);
    if (r.status != ProveStatus::Proved) continue;
    ++done;
    Derivation reduced = deleteAtomPair(*r.proof, a);
    auto failure = check(reduced, System::BV);
    CAPTURE(s.text());
    if (failure) CAPTURE(failure->reason);
    CHECK(!failure);
    CHECK(reduced.isProof());
  }
  CHECK(done > 5);
}

TEST_CASE("property: interaction with the dual is always provable") {
  std::mt19937 rng(47);
  auto structures = bvtest::allSmallStructures("a", "b", 3);
  for (const auto& s : structures) {
    if (s.isUnit()) continue;
    Structure goal = Structure::par({s, negate(s)});
    CAPTURE(goal.text());
    CHECK(prove(goal).status == ProveStatus::Proved);
  }
}

TEST_CASE("exhaustive oracle agreement on structures over two atom names") {
  auto oracle = bvtest::provableClosure({"a", "b"}, 4);
  auto structures = bvtest::allSmallStructures("a", "b", 4);
  Prover prover(5000000);
  size_t provedCount = 0;
  for (const auto& s : structures) {
    bool expected = oracle.count(s.text()) > 0;
    auto r = prover.prove(s);
    REQUIRE(r.status != ProveStatus::BudgetExceeded);
    bool actual = r.status == ProveStatus::Proved;
    CAPTURE(s.text());
    CHECK(expected == actual);
    provedCount += actual ? 1 : 0;
  }
  CHECK(provedCount > 0);
  CHECK(structures.size() > 500);
}
