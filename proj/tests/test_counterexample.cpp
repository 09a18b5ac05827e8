#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "bv/counterexample.hpp"
#include "bv/derivation.hpp"
#include "bv/fixtures.hpp"
#include "bv/prover.hpp"
#include "bv/structure.hpp"
#include "bv/web.hpp"

using namespace bv;

TEST_CASE("the base structure carries index 0 atoms") {
  auto s0 = sn(0);
  CHECK(s0.structure == parse("[<[a_0,b_0];c_0>,<~a_0;[~b_0,~c_0]>]"));
  CHECK(s0.blockPaths.size() == 1);
  CHECK(alphaZeroDepths(s0) == std::vector<int>{0});
}

TEST_CASE("atom counts follow the doubling recurrence") {
  for (int n = 0; n <= 3; ++n) {
    auto s = sn(n);
    size_t expected = 6u * ((1u << (n + 1)) - 1);
    CHECK(s.structure.occurrenceCount() == expected);
  }
}

TEST_CASE("all generated atoms are pairwise distinct") {
  for (int n = 0; n <= 3; ++n) {
    auto s = sn(n);
    std::set<std::string> labels;
    for (const auto& e : occurrences(s.structure).entries) {
      CHECK(labels.insert(e.label()).second);
    }
  }
}

TEST_CASE("base blocks sit two levels deeper with every generation") {
  auto s1 = sn(1);
  CHECK(s1.blockPaths.size() == 2);
  CHECK(alphaZeroDepths(s1) == std::vector<int>{2, 2});

  auto s3 = sn(3);
  auto depths = alphaZeroDepths(s3);
  CHECK(depths.size() == 8);
  for (int d : depths) CHECK(d == 6);

  // the same holds with nontrivial parameters
  auto a2 = alpha({2, {0}, parse("[x,y]"), parse("z")});
  for (int d : alphaZeroDepths(a2)) CHECK(d == 4);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(alpha({0, {0}, parse("<x;y>"), Structure::unit()}), NotFlat);
  CHECK_THROWS_AS(alpha({1, {0}, parse("(x,y)"), Structure::unit()}), NotFlat);
  CHECK_NOTHROW(alpha({0, {0}, parse("x"), parse("[y,z]")}));
}

TEST_CASE("the schematic derivation reaches the flat par of the parameters") {
  for (const char* r : {"o", "x", "[x,y]"}) {
    for (const char* t : {"o", "z"}) {
      for (int n = 0; n <= 2; ++n) {
        AlphaParams p{n, {0}, parse(r), parse(t)};
        Derivation d = alphaDerivation(p);
        CAPTURE(n);
        CAPTURE(r);
        CAPTURE(t);
        CHECK(d.conclusion == alpha(p).structure);
        CHECK(d.top() == Structure::par({parse(r), parse(t)}));
        auto failure = check(d, System::BV);
        if (failure) CAPTURE(failure->reason);
        CHECK(!failure);
      }
    }
  }
}

TEST_CASE("the base derivation is the fixture proof without its axiom") {
  Derivation base =
      alphaDerivation({0, {0}, Structure::unit(), Structure::unit()});
  Derivation fig = derivationFromJson(fixtures::kS0ProofJson);
  REQUIRE(base.length() + 1 == fig.length());
  for (size_t i = 0; i < base.length(); ++i) {
    CHECK(base.steps[i].instance.rule == fig.steps[i].instance.rule);
  }
  CHECK(base.top().isUnit());
}

TEST_CASE("proofOfSn certifies the family without search") {
  std::vector<size_t> lengths = {8, 22, 50, 106};
  for (int n = 0; n <= 3; ++n) {
    Derivation d = proofOfSn(n);
    CHECK(d.conclusion == sn(n).structure);
    CHECK(d.isProof());
    CHECK(d.length() == lengths[static_cast<size_t>(n)]);
    auto failure = check(d, System::BV);
    if (failure) CAPTURE(failure->reason);
    CHECK(!failure);
  }
}

TEST_CASE("the family proofs survive a JSON round trip") {
  for (int n = 0; n <= 2; ++n) {
    Derivation d = derivationFromJson(derivationToJson(proofOfSn(n)));
    CHECK(d.conclusion == sn(n).structure);
    CHECK(!check(d, System::BV));
    CHECK(d.isProof());
  }
}

TEST_CASE("no par substructure pairs with its dual inside the family") {
  for (int n = 0; n <= 3; ++n) {
    CHECK(!checkNoDualPars(sn(n).structure));
  }
  auto w1 = checkNoDualPars(parse("[a,~a,b]"));
  REQUIRE(w1.has_value());
  CHECK(w1->first == parse("a"));
  CHECK(w1->second == parse("~a"));

  auto w2 = checkNoDualPars(parse("[<a;b>,<~a;~b>,c]"));
  REQUIRE(w2.has_value());
  CHECK(negate(w2->first) == w2->second);

  CHECK(!checkNoDualPars(parse("[a,~a']")));
  CHECK(!checkNoDualPars(parse("(a,~a)")));
}

TEST_CASE("the family webs carry no forbidden configuration") {
  for (int n = 0; n <= 2; ++n) {
    CHECK(forbiddenConfigs(webOf(sn(n).structure)).empty());
  }
}

TEST_CASE("the base web contains the hexagon") {
  RelationWeb w = webOf(sn(0).structure);
  auto rel = [&](const std::string& a, const std::string& b) {
    int ia = -1, ib = -1;
    for (const auto& e : w.occ().entries) {
      if (e.label() == a) ia = e.id;
      if (e.label() == b) ib = e.id;
    }
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    return w.at(ia, ib);
  };
  CHECK(rel("a_0", "b_0") == Rel::Par);
  CHECK(rel("~b_0", "~c_0") == Rel::Par);
  CHECK(rel("a_0", "c_0") == Rel::SeqLR);
  CHECK(rel("b_0", "c_0") == Rel::SeqLR);
  CHECK(rel("~a_0", "~b_0") == Rel::SeqLR);
  CHECK(rel("~a_0", "~c_0") == Rel::SeqLR);
}
