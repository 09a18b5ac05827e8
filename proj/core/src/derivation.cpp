#include "bv/derivation.hpp"

#include <algorithm>
#include <json.hpp>

#include "bv/rules.hpp"

namespace bv {

std::string ruleName(RuleName r) {
  switch (r) {
    case RuleName::Axiom: return "axiom";
    case RuleName::AiDown: return "ai_down";
    case RuleName::Switch: return "switch";
    case RuleName::QDown: return "q_down";
    case RuleName::AiUp: return "ai_up";
    default: return "q_up";
  }
}

std::optional<RuleName> ruleFromName(std::string_view name) {
  if (name == "axiom") return RuleName::Axiom;
  if (name == "ai_down") return RuleName::AiDown;
  if (name == "switch") return RuleName::Switch;
  if (name == "q_down") return RuleName::QDown;
  if (name == "ai_up") return RuleName::AiUp;
  if (name == "q_up") return RuleName::QUp;
  return std::nullopt;
}

std::vector<std::pair<Structure, Structure>> seqSplits(const Structure& s) {
  std::vector<std::pair<Structure, Structure>> out;
  if (s.kind() == Structure::Kind::Seq) {
    const auto& kids = s.children();
    for (size_t i = 0; i <= kids.size(); ++i) {
      out.emplace_back(
          Structure::seq({kids.begin(), kids.begin() + static_cast<long>(i)}),
          Structure::seq({kids.begin() + static_cast<long>(i), kids.end()}));
    }
  } else {
    out.emplace_back(Structure::unit(), s);
    out.emplace_back(s, Structure::unit());
  }
  return out;
}

std::vector<std::pair<Structure, Structure>> coparSplits(const Structure& s) {
  std::vector<std::pair<Structure, Structure>> out;
  out.emplace_back(Structure::unit(), s);
  out.emplace_back(s, Structure::unit());
  if (s.kind() == Structure::Kind::Copar) {
    const auto& kids = s.children();
    size_t k = kids.size();
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<Structure> left, right;
      for (size_t i = 0; i < k; ++i) {
        (mask & (1u << i) ? left : right).push_back(kids[i]);
      }
      out.emplace_back(Structure::copar(std::move(left)),
                       Structure::copar(std::move(right)));
    }
  }
  return out;
}

bool aiDownShape(const Structure& redex, const Structure& contractum) {
  if (!contractum.isUnit()) return false;
  if (redex.kind() != Structure::Kind::Par || redex.children().size() != 2)
    return false;
  const auto& a = redex.children()[0];
  const auto& b = redex.children()[1];
  return a.kind() == Structure::Kind::Atom &&
         b.kind() == Structure::Kind::Atom &&
         a.atomValue().dual() == b.atomValue();
}

bool aiUpShape(const Structure& redex, const Structure& contractum) {
  if (!redex.isUnit()) return false;
  if (contractum.kind() != Structure::Kind::Copar ||
      contractum.children().size() != 2)
    return false;
  const auto& a = contractum.children()[0];
  const auto& b = contractum.children()[1];
  return a.kind() == Structure::Kind::Atom &&
         b.kind() == Structure::Kind::Atom &&
         a.atomValue().dual() == b.atomValue();
}

bool switchShape(const Structure& redex, const Structure& contractum) {
  // conclusion [(R,R'),T], premise ([R,T],R')
  if (redex.kind() != Structure::Kind::Par) return false;
  const auto& kids = redex.children();
  for (size_t u = 0; u < kids.size(); ++u) {
    if (kids[u].kind() != Structure::Kind::Copar) continue;
    std::vector<Structure> rest;
    for (size_t i = 0; i < kids.size(); ++i) {
      if (i != u) rest.push_back(kids[i]);
    }
    if (rest.empty()) continue;  // T must be nonempty
    for (const auto& [r, rp] : coparSplits(kids[u])) {
      if (rp.isUnit()) continue;  // R' nonempty
      std::vector<Structure> inner = rest;
      inner.push_back(r);
      Structure candidate =
          Structure::copar({Structure::par(std::move(inner)), rp});
      if (candidate == contractum) return true;
    }
  }
  return false;
}

bool qDownShape(const Structure& redex, const Structure& contractum) {
  // conclusion [<R;R'>,<T;T'>], premise <[R,T];[R',T']>
  if (redex.kind() != Structure::Kind::Par) return false;
  const auto& kids = redex.children();
  size_t k = kids.size();
  for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<Structure> us, vs;
    for (size_t i = 0; i < k; ++i) {
      (mask & (1u << i) ? us : vs).push_back(kids[i]);
    }
    Structure u = Structure::par(std::move(us));
    Structure v = Structure::par(std::move(vs));
    for (const auto& [r, rp] : seqSplits(u)) {
      for (const auto& [t, tp] : seqSplits(v)) {
        Structure candidate = Structure::seq(
            {Structure::par({r, t}), Structure::par({rp, tp})});
        if (candidate == contractum) return true;
      }
    }
  }
  return false;
}

bool qUpShape(const Structure& redex, const Structure& contractum) {
  // conclusion <(R,R');(T,T')>, premise (<R;T>,<R';T'>)
  for (const auto& [a, b] : seqSplits(redex)) {
    for (const auto& [r, rp] : coparSplits(a)) {
      for (const auto& [t, tp] : coparSplits(b)) {
        Structure candidate = Structure::copar(
            {Structure::seq({r, t}), Structure::seq({rp, tp})});
        if (candidate == contractum) return true;
      }
    }
  }
  return false;
}

bool instanceShapeOk(RuleName rule, const Structure& redex,
                     const Structure& contractum) {
  switch (rule) {
    case RuleName::AiDown: return aiDownShape(redex, contractum);
    case RuleName::AiUp: return aiUpShape(redex, contractum);
    case RuleName::Switch: return switchShape(redex, contractum);
    case RuleName::QDown: return qDownShape(redex, contractum);
    case RuleName::QUp: return qUpShape(redex, contractum);
    default: return false;
  }
}

std::optional<CheckFailure> check(const Derivation& d, System system) {
  Structure current = d.conclusion;
  for (size_t i = 0; i < d.steps.size(); ++i) {
    const Step& step = d.steps[i];
    const RuleInstance& inst = step.instance;
    if (inst.rule == RuleName::Axiom) {
      if (i + 1 != d.steps.size())
        return CheckFailure{i, "axiom must be the last step"};
      if (!current.isUnit())
        return CheckFailure{i, "axiom requires the unit conclusion"};
      if (!step.premise.isUnit())
        return CheckFailure{i, "axiom has no premise"};
      current = step.premise;
      continue;
    }
    if (system == System::BV &&
        (inst.rule == RuleName::AiUp || inst.rule == RuleName::QUp))
      return CheckFailure{i, ruleName(inst.rule) + " is not a BV rule"};
    if (!inst.context.containsHole())
      return CheckFailure{i, "instance context has no hole"};
    if (plug(inst.context, inst.redex) != current)
      return CheckFailure{i, "context and redex do not give the conclusion"};
    if (plug(inst.context, inst.contractum) != step.premise)
      return CheckFailure{i, "context and contractum do not give the premise"};
    if (!instanceShapeOk(inst.rule, inst.redex, inst.contractum))
      return CheckFailure{
          i, "redex/contractum do not match rule " + ruleName(inst.rule)};
    current = step.premise;
  }
  return std::nullopt;
}

std::optional<Structure> contextFor(const Structure& conclusion,
                                    const std::vector<int>& path,
                                    const Structure& redex) {
  const Structure* node = &conclusion;
  for (int i : path) {
    if (i < 0 || static_cast<size_t>(i) >= node->children().size())
      return std::nullopt;
    node = &node->children()[static_cast<size_t>(i)];
  }
  auto finish = [&](Structure hole) -> std::optional<Structure> {
    Structure ctx = replaceAt(conclusion, path, std::move(hole));
    if (plug(ctx, redex) != conclusion) return std::nullopt;
    return ctx;
  };
  if (*node == redex) return finish(Structure::hole());
  if (!node->isComposite()) return std::nullopt;

  const auto& kids = node->children();
  if (node->kind() == Structure::Kind::Seq) {
    // the redex is a contiguous run of the seq children
    std::vector<Structure> rkids =
        redex.kind() == Structure::Kind::Seq ? redex.children()
                                             : std::vector<Structure>{redex};
    for (size_t i = 0; i + rkids.size() <= kids.size(); ++i) {
      if (!std::equal(rkids.begin(), rkids.end(), kids.begin() + static_cast<long>(i)))
        continue;
      std::vector<Structure> rest(kids.begin(), kids.begin() + static_cast<long>(i));
      rest.push_back(Structure::hole());
      rest.insert(rest.end(), kids.begin() + static_cast<long>(i + rkids.size()),
                  kids.end());
      if (auto ctx = finish(Structure::seq(std::move(rest)))) return ctx;
    }
    return std::nullopt;
  }

  // par/copar: the redex children form a sub-multiset of the node children
  std::vector<Structure> rkids = redex.kind() == node->kind()
                                     ? redex.children()
                                     : std::vector<Structure>{redex};
  std::vector<Structure> rest = kids;
  for (const auto& rc : rkids) {
    auto it = std::find(rest.begin(), rest.end(), rc);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  rest.push_back(Structure::hole());
  Structure hole = node->kind() == Structure::Kind::Par
                       ? Structure::par(std::move(rest))
                       : Structure::copar(std::move(rest));
  return finish(std::move(hole));
}

namespace {

// The JSON schema stores only a path, so pick one the reader can invert:
// grouped redexes flatten into their parent node, and plugging re-sorts
// par/copar children, so the raw hole path may not name a node holding the
// redex. Trim it until contextFor round-trips to a context with the same
// premise.
std::vector<int> invertiblePath(const Structure& conclusion,
                                const RuleInstance& inst,
                                const Structure& premise) {
  std::vector<int> path = holePath(inst.context);
  while (true) {
    auto ctx = contextFor(conclusion, path, inst.redex);
    if (ctx && plug(*ctx, inst.contractum) == premise) return path;
    if (path.empty()) return holePath(inst.context);
    path.pop_back();
  }
}

}  // namespace

std::string derivationToJson(const Derivation& d, bool pretty) {
  nlohmann::json j;
  j["conclusion"] = d.conclusion.text();
  j["steps"] = nlohmann::json::array();
  Structure current = d.conclusion;
  for (const auto& step : d.steps) {
    nlohmann::json s;
    s["rule"] = ruleName(step.instance.rule);
    s["path"] = step.instance.rule == RuleName::Axiom
                    ? std::vector<int>{}
                    : invertiblePath(current, step.instance, step.premise);
    current = step.premise;
    s["redex"] = step.instance.redex.text();
    s["contractum"] = step.instance.contractum.text();
    s["premise"] = step.premise.text();
    j["steps"].push_back(std::move(s));
  }
  return pretty ? j.dump(2) : j.dump();
}

Derivation derivationFromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Derivation d;
  d.conclusion = parse(j.at("conclusion").get<std::string>());
  Structure current = d.conclusion;
  for (const auto& s : j.at("steps")) {
    Step step;
    auto rule = ruleFromName(s.at("rule").get<std::string>());
    if (!rule)
      throw std::invalid_argument("unknown rule: " +
                                  s.at("rule").get<std::string>());
    step.instance.rule = *rule;
    step.instance.redex = parse(s.at("redex").get<std::string>());
    step.instance.contractum = parse(s.at("contractum").get<std::string>());
    step.premise = parse(s.at("premise").get<std::string>());
    if (*rule == RuleName::Axiom) {
      step.instance.context = Structure::hole();
    } else {
      std::vector<int> path = s.at("path").get<std::vector<int>>();
      auto ctx = contextFor(current, path, step.instance.redex);
      if (!ctx)
        throw std::invalid_argument("cannot locate redex " +
                                    step.instance.redex.text() +
                                    " at the given path");
      step.instance.context = std::move(*ctx);
    }
    current = step.premise;
    d.steps.push_back(std::move(step));
  }
  return d;
}

}  // namespace bv
