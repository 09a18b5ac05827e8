#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bv/structure.hpp"

namespace bv {

enum class System : uint8_t { BV, SBV };

enum class RuleName : uint8_t { Axiom, AiDown, Switch, QDown, AiUp, QUp };

std::string ruleName(RuleName r);                // "ai_down", "switch", ...
std::optional<RuleName> ruleFromName(std::string_view name);

// One rule application, read bottom-up: plugging the redex into the context
// gives the conclusion, plugging the contractum gives the premise.
struct RuleInstance {
  RuleName rule = RuleName::Axiom;
  Structure context;     // contains the hole, except for axiom steps
  Structure redex;       // subterm rewritten in the conclusion
  Structure contractum;  // replacement appearing in the premise
};

struct Step {
  RuleInstance instance;
  Structure premise;  // the structure above this step
};

// A bottom-up chain of rule instances. The first step applies to the
// conclusion; each step's premise is the next step's conclusion.
struct Derivation {
  Structure conclusion;
  std::vector<Step> steps;

  const Structure& top() const {
    return steps.empty() ? conclusion : steps.back().premise;
  }
  size_t length() const { return steps.size(); }

  // A proof is a derivation closed at the top by the axiom.
  bool isProof() const {
    return !steps.empty() && steps.back().instance.rule == RuleName::Axiom &&
           top().isUnit();
  }
};

struct CheckFailure {
  size_t stepIndex = 0;
  std::string reason;
};

// Validates every step: the context/redex/contractum reproduce conclusion
// and premise, the redex-contractum pair has the shape of the named rule,
// and the rule belongs to the system (BV excludes ai_up and q_up).
std::optional<CheckFailure> check(const Derivation& d, System system);

std::string derivationToJson(const Derivation& d, bool pretty = false);
Derivation derivationFromJson(const std::string& text);

}  // namespace bv
