#include "bv/counterexample.hpp"

#include <set>
#include <string>

namespace bv {

namespace {

bool isFlatPar(const Structure& s) {
  switch (s.kind()) {
    case Structure::Kind::Unit:
    case Structure::Kind::Atom:
      return true;
    case Structure::Kind::Par:
      for (const auto& c : s.children()) {
        if (c.kind() != Structure::Kind::Atom) return false;
      }
      return true;
    default:
      return false;
  }
}

void requireFlat(const Structure& s, const char* which) {
  if (!isFlatPar(s))
    throw NotFlat(std::string(which) + " must be a flat par structure, got " +
                  s.text());
}

Structure indexed(const char* name, bool neg, const std::vector<int>& u) {
  return Structure::atom(name, neg, u);
}

// alpha_0(u,R,T) = [<[a_u,b_u,R];c_u>, <~a_u;[~b_u,~c_u,T]>]
Structure alphaZero(const std::vector<int>& u, const Structure& r,
                    const Structure& t) {
  return Structure::par(
      {Structure::seq({Structure::par({indexed("a", false, u),
                                       indexed("b", false, u), r}),
                       indexed("c", false, u)}),
       Structure::seq({indexed("a", true, u),
                       Structure::par({indexed("b", true, u),
                                       indexed("c", true, u), t})})});
}

struct Builder {
  std::vector<Structure> blocks;  // the base block structures, in order

  Structure build(int n, std::vector<int> u, const Structure& r,
                  const Structure& t) {
    if (n == 0) {
      Structure s = alphaZero(u, r, t);
      blocks.push_back(s);
      return s;
    }
    std::vector<int> u0 = u;
    u0.push_back(0);
    std::vector<int> u1 = u;
    u1.push_back(1);
    Structure left = build(n - 1, std::move(u0), indexed("a", false, u),
                           Structure::par({indexed("b", false, u), r}));
    Structure right = build(n - 1, std::move(u1), indexed("b", true, u),
                            Structure::par({indexed("c", true, u), t}));
    return Structure::par(
        {Structure::seq({left, indexed("c", false, u)}),
         Structure::seq({indexed("a", true, u), right})});
  }
};

// Locates every occurrence of the targets as subtrees; all atoms are
// pairwise distinct, so each target occurs exactly once.
void findPaths(const Structure& s, const std::set<std::string>& targets,
               std::vector<int>& path,
               std::vector<std::vector<int>>& out) {
  if (targets.count(s.text())) {
    out.push_back(path);
    return;
  }
  for (size_t i = 0; i < s.children().size(); ++i) {
    path.push_back(static_cast<int>(i));
    findPaths(s.children()[i], targets, path, out);
    path.pop_back();
  }
}

void validateParams(const AlphaParams& p) {
  if (p.n < 0) throw std::invalid_argument("level must be nonnegative");
  requireFlat(p.R, "R");
  requireFlat(p.T, "T");
  for (const Structure* side : {&p.R, &p.T}) {
    for (const auto& e : occurrences(*side).entries) {
      if (e.atom.name == "a" || e.atom.name == "b" || e.atom.name == "c") {
        if (!e.atom.index.empty())
          throw std::invalid_argument(
              "parameter atoms collide with generated indexed atoms: " +
              e.label());
      }
    }
  }
}

}  // namespace

AlphaStructure alpha(const AlphaParams& p) {
  validateParams(p);
  Builder b;
  AlphaStructure out;
  out.structure = b.build(p.n, p.u, p.R, p.T);
  std::set<std::string> targets;
  for (const auto& blk : b.blocks) targets.insert(blk.text());
  std::vector<int> path;
  findPaths(out.structure, targets, path, out.blockPaths);
  return out;
}

AlphaStructure sn(int n) {
  return alpha({n, {0}, Structure::unit(), Structure::unit()});
}

std::vector<int> alphaZeroDepths(const AlphaStructure& s) {
  std::vector<int> out;
  out.reserve(s.blockPaths.size());
  for (const auto& p : s.blockPaths) {
    // canonical forms have no same-kind nesting, so the context depth is
    // the path length
    out.push_back(static_cast<int>(p.size()));
  }
  return out;
}

namespace {

// The seven-step base derivation from [R,T] up from alpha_0(u,R,T),
// with every instance spelled out.
void baseSteps(const std::vector<int>& u, const Structure& r,
               const Structure& t, std::vector<Step>& out) {
  Structure a = indexed("a", false, u), na = indexed("a", true, u);
  Structure b = indexed("b", false, u), nb = indexed("b", true, u);
  Structure c = indexed("c", false, u), nc = indexed("c", true, u);
  Structure hole = Structure::hole();

  auto push = [&](RuleName rule, Structure ctx, Structure redex,
                  Structure contractum) {
    Step s;
    s.premise = plug(ctx, contractum);
    s.instance = {rule, std::move(ctx), std::move(redex),
                  std::move(contractum)};
    out.push_back(std::move(s));
  };

  Structure rightSide = Structure::seq({na, Structure::par({nb, nc, t})});

  // [<[a,b,R];c>,<~a;[~b,~c,T]>]  ->  [<a;[b,R];c>,<~a;[~b,~c,T]>]
  push(RuleName::QDown,
       Structure::par({Structure::seq({hole, c}), rightSide}),
       Structure::par({a, b, r}),
       Structure::seq({a, Structure::par({b, r})}));

  // -> <[a,~a];[<[b,R];c>,~b,~c,T]>
  Structure cur = Structure::par(
      {Structure::seq({a, Structure::par({b, r}), c}), rightSide});
  push(RuleName::QDown, hole, cur,
       Structure::seq(
           {Structure::par({a, na}),
            Structure::par({Structure::seq({Structure::par({b, r}), c}),
                            Structure::par({nb, nc, t})})}));

  // -> [<[b,R];c>,~b,~c,T]
  Structure tail = Structure::par(
      {Structure::seq({Structure::par({b, r}), c}), nb, nc, t});
  push(RuleName::AiDown, Structure::seq({hole, tail}),
       Structure::par({a, na}), Structure::unit());

  // -> [~c,<[b,~b,R,T];c>]
  push(RuleName::QDown, Structure::par({nc, hole}),
       Structure::par({Structure::seq({Structure::par({b, r}), c}), nb, t}),
       Structure::seq({Structure::par({b, r, nb, t}), c}));

  // -> <[b,~b,R,T];[c,~c]>
  cur = Structure::par({nc, Structure::seq({Structure::par({b, r, nb, t}), c})});
  push(RuleName::QDown, hole, cur,
       Structure::seq({Structure::par({b, r, nb, t}),
                       Structure::par({c, nc})}));

  // -> [b,~b,R,T]
  push(RuleName::AiDown,
       Structure::seq({Structure::par({b, r, nb, t}), hole}),
       Structure::par({c, nc}), Structure::unit());

  // -> [R,T]
  push(RuleName::AiDown, Structure::par({r, t, hole}),
       Structure::par({b, nb}), Structure::unit());
}

// Re-homes a derivation into a context: each step rewrites inside the hole
// while the surroundings stay fixed.
void embed(const Derivation& inner, const Structure& ctx,
           std::vector<Step>& out) {
  for (const auto& step : inner.steps) {
    Step s;
    s.instance.rule = step.instance.rule;
    s.instance.redex = step.instance.redex;
    s.instance.contractum = step.instance.contractum;
    s.instance.context = plug(ctx, step.instance.context);
    s.premise = plug(ctx, step.premise);
    out.push_back(std::move(s));
  }
}

Derivation alphaDerivationImpl(int n, const std::vector<int>& u,
                               const Structure& r, const Structure& t) {
  Derivation d;
  Structure a = indexed("a", false, u), na = indexed("a", true, u);
  Structure b = indexed("b", false, u), nb = indexed("b", true, u);
  Structure c = indexed("c", false, u), nc = indexed("c", true, u);

  if (n == 0) {
    d.conclusion = alphaZero(u, r, t);
    baseSteps(u, r, t, d.steps);
    return d;
  }

  std::vector<int> u0 = u;
  u0.push_back(0);
  std::vector<int> u1 = u;
  u1.push_back(1);
  Structure innerR = Structure::par({b, r});
  Structure innerT = Structure::par({nc, t});
  Derivation left = alphaDerivationImpl(n - 1, u0, a, innerR);
  Derivation right = alphaDerivationImpl(n - 1, u1, nb, innerT);

  d.conclusion = Structure::par(
      {Structure::seq({left.conclusion, c}),
       Structure::seq({na, right.conclusion})});

  // unfold the left branch down to [a,b,R] while the right stays intact
  embed(left,
        Structure::par({Structure::seq({Structure::hole(), c}),
                        Structure::seq({na, right.conclusion})}),
        d.steps);
  // then the right branch down to [~b,~c,T]
  Structure leftFlat = Structure::par({a, innerR});  // = [a,b,R]
  embed(right,
        Structure::par({Structure::seq({leftFlat, c}),
                        Structure::seq({na, Structure::hole()})}),
        d.steps);
  // what remains is exactly the base block for (u, R, T)
  baseSteps(u, r, t, d.steps);
  return d;
}

}  // namespace

Derivation alphaDerivation(const AlphaParams& p) {
  validateParams(p);
  return alphaDerivationImpl(p.n, p.u, p.R, p.T);
}

Derivation proofOfSn(int n) {
  Derivation d =
      alphaDerivationImpl(n, {0}, Structure::unit(), Structure::unit());
  d.steps.push_back({{RuleName::Axiom, Structure::hole(), Structure::unit(),
                      Structure::unit()},
                     Structure::unit()});
  return d;
}

std::optional<std::pair<Structure, Structure>> checkNoDualPars(
    const Structure& s) {
  for (const auto& [ctx, sub] : positions(s)) {
    if (sub.kind() != Structure::Kind::Par) continue;
    const auto& kids = sub.children();
    size_t k = kids.size();
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<Structure> us, vs;
      for (size_t i = 0; i < k; ++i) {
        (mask & (1u << i) ? us : vs).push_back(kids[i]);
      }
      Structure uS = Structure::par(std::move(us));
      Structure vS = Structure::par(std::move(vs));
      if (negate(uS) == vS) return std::make_pair(uS, vS);
    }
  }
  return std::nullopt;
}

}  // namespace bv
