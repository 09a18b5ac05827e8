#include "bv/prover.hpp"

#include <algorithm>

#include "bv/rules.hpp"

namespace bv {

namespace {

bool isDualAtomPair(const Structure& s) {
  if (s.kind() != Structure::Kind::Par || s.children().size() != 2)
    return false;
  const auto& a = s.children()[0];
  const auto& b = s.children()[1];
  return a.kind() == Structure::Kind::Atom &&
         b.kind() == Structure::Kind::Atom &&
         a.atomValue().dual() == b.atomValue();
}

}  // namespace

std::vector<ExpandEntry> expand(const Structure& goal) {
  std::vector<ExpandEntry> out;
  std::set<std::string> seen;
  auto add = [&](RuleName rule, const Structure& ctx, const Structure& redex,
                 Structure contractum) {
    Structure premise = plug(ctx, contractum);
    if (premise == goal) return;  // trivial instance
    std::string key = ruleName(rule);
    key += '|';
    key += ctx.text();
    key += '|';
    key += redex.text();
    key += '|';
    key += premise.text();
    if (!seen.insert(key).second) return;
    out.push_back(
        {{rule, ctx, redex, std::move(contractum)}, std::move(premise)});
  };

  for (const auto& [ctx, sub] : positions(goal)) {
    if (sub.kind() != Structure::Kind::Par) continue;
    const auto& kids = sub.children();
    size_t k = kids.size();

    if (isDualAtomPair(sub)) add(RuleName::AiDown, ctx, sub, Structure::unit());

    // switch: redex [(R,R'),T] with T the rest of this par
    for (size_t u = 0; u < k; ++u) {
      if (kids[u].kind() != Structure::Kind::Copar) continue;
      std::vector<Structure> rest;
      for (size_t i = 0; i < k; ++i) {
        if (i != u) rest.push_back(kids[i]);
      }
      for (const auto& [r, rp] : coparSplits(kids[u])) {
        if (rp.isUnit()) continue;
        std::vector<Structure> inner = rest;
        inner.push_back(r);
        add(RuleName::Switch, ctx, sub,
            Structure::copar({Structure::par(std::move(inner)), rp}));
      }
    }

    // q_down: redex [<R;R'>,<T;T'>], U and V covering this par's children
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<Structure> us, vs;
      for (size_t i = 0; i < k; ++i) {
        (mask & (1u << i) ? us : vs).push_back(kids[i]);
      }
      Structure u = Structure::par(std::move(us));
      Structure v = Structure::par(std::move(vs));
      for (const auto& [r, rp] : seqSplits(u)) {
        for (const auto& [t, tp] : seqSplits(v)) {
          add(RuleName::QDown, ctx, sub,
              Structure::seq(
                  {Structure::par({r, t}), Structure::par({rp, tp})}));
        }
      }
    }
  }
  return out;
}

bool Prover::dfs(const Structure& node, std::set<std::string>& visited) {
  if (node.isUnit()) return true;
  std::string key = node.text();
  if (auto it = decided_.find(key); it != decided_.end()) return it->second;
  if (!visited.insert(key).second) return false;  // already on this traversal
  if (++explored_ > budget_) throw BudgetHit{};

  std::vector<ExpandEntry> entries = expand(node);
  // Try premises with fewer atoms first: ai_down makes progress.
  std::stable_sort(entries.begin(), entries.end(),
                   [](const ExpandEntry& a, const ExpandEntry& b) {
                     return a.premise.occurrenceCount() <
                            b.premise.occurrenceCount();
                   });
  for (auto& e : entries) {
    if (dfs(e.premise, visited)) {
      decided_[key] = true;
      proofStep_.emplace(key, std::move(e));
      return true;
    }
  }
  // Not decidedly false yet: failure may be due to ancestors still on the
  // stack. The caller flushes the visited set once the whole traversal
  // from the query root has failed.
  return false;
}

ProveResult Prover::prove(const Structure& goal) {
  ProveResult res;
  std::set<std::string> visited;
  bool ok;
  try {
    ok = dfs(goal, visited);
  } catch (const BudgetHit&) {
    res.status = ProveStatus::BudgetExceeded;
    res.nodesExplored = explored_;
    return res;
  }
  res.nodesExplored = explored_;
  if (!ok) {
    // The traversal saw everything reachable from the goal and found no
    // unit, so every visited structure is unprovable.
    for (const auto& key : visited) decided_[key] = false;
    res.status = ProveStatus::Unprovable;
    return res;
  }

  Derivation d;
  d.conclusion = goal;
  Structure cur = goal;
  while (!cur.isUnit()) {
    const ExpandEntry& e = proofStep_.at(cur.text());
    d.steps.push_back({e.instance, e.premise});
    cur = e.premise;
  }
  d.steps.push_back({{RuleName::Axiom, Structure::hole(), Structure::unit(),
                      Structure::unit()},
                     Structure::unit()});
  res.status = ProveStatus::Proved;
  res.proof = std::move(d);
  return res;
}

ProveResult prove(const Structure& goal, size_t budget) {
  return Prover(budget).prove(goal);
}

FirstRedexReport firstRedexAnalysis(const Structure& goal, size_t budget) {
  FirstRedexReport report;
  Prover prover(budget);
  for (auto& e : expand(goal)) {
    FirstRedexEntry entry;
    entry.redexDepth = contextDepth(e.instance.context);
    entry.instance = std::move(e.instance);
    ProveResult r = prover.prove(e.premise);
    if (r.status == ProveStatus::BudgetExceeded) {
      report.budgetExceeded = true;
      report.nodesExplored = prover.nodesExplored();
      return report;
    }
    entry.premiseProvable = r.status == ProveStatus::Proved;
    if (entry.premiseProvable) {
      if (!report.minProvableDepth || entry.redexDepth < *report.minProvableDepth)
        report.minProvableDepth = entry.redexDepth;
    }
    entry.premise = std::move(e.premise);
    report.entries.push_back(std::move(entry));
  }
  report.nodesExplored = prover.nodesExplored();
  return report;
}

Derivation deleteAtomPair(const Derivation& d, const Atom& a) {
  Atom pos = a;
  Atom neg = a.dual();
  int posCount = 0, negCount = 0;
  for (const auto& e : occurrences(d.conclusion).entries) {
    if (e.isVar) continue;
    if (e.atom == pos) ++posCount;
    if (e.atom == neg) ++negCount;
  }
  if (posCount == 0 || negCount == 0)
    throw AtomNotFound("conclusion lacks " +
                       (posCount == 0 ? pos : neg).text());
  if (posCount > 1 || negCount > 1)
    throw AmbiguousOccurrence("atom " + pos.name +
                              " occurs more than once in the conclusion");

  auto erase = [&](const Structure& s) {
    return substituteAtom(substituteAtom(s, pos, Structure::unit()), neg,
                          Structure::unit());
  };

  Derivation out;
  out.conclusion = erase(d.conclusion);
  Structure cur = out.conclusion;
  for (const auto& step : d.steps) {
    if (step.instance.rule == RuleName::Axiom) {
      out.steps.push_back(step);
      cur = step.premise;
      continue;
    }
    Structure premise = erase(step.premise);
    if (premise == cur) continue;  // the step acted only on the erased pair
    Step ns;
    ns.instance.rule = step.instance.rule;
    ns.instance.context = erase(step.instance.context);
    ns.instance.redex = erase(step.instance.redex);
    ns.instance.contractum = erase(step.instance.contractum);
    ns.premise = premise;
    cur = ns.premise;
    out.steps.push_back(std::move(ns));
  }
  return out;
}

}  // namespace bv
