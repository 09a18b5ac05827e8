#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bv/derivation.hpp"
#include "bv/structure.hpp"

namespace bv {

class AtomNotFound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AmbiguousOccurrence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExpandEntry {
  RuleInstance instance;
  Structure premise;
};

// Complete one-step bottom-up enumeration of the ai_down, switch and
// q_down instances applicable anywhere in the goal, modulo the structural
// equations. Trivial instances (premise equal to the goal) are excluded;
// distinct instances with equal premises are all kept, since callers
// inspect contexts and redexes, not just premises.
std::vector<ExpandEntry> expand(const Structure& goal);

enum class ProveStatus : uint8_t { Proved, Unprovable, BudgetExceeded };

struct ProveResult {
  ProveStatus status = ProveStatus::Unprovable;
  std::optional<Derivation> proof;  // present iff Proved
  size_t nodesExplored = 0;
};

// Decides provability by exhaustive search over expand. The non-interaction
// rules preserve the atom multiset and ai_down shrinks it, so the set of
// structures reachable from a goal is finite: provability is reachability
// of the unit, and a completed traversal that misses the unit refutes every
// structure it visited. Verdicts are cached across calls on one Prover.
class Prover {
 public:
  explicit Prover(size_t budget = 1000000) : budget_(budget) {}

  ProveResult prove(const Structure& goal);
  size_t nodesExplored() const { return explored_; }

 private:
  struct BudgetHit {};
  bool dfs(const Structure& node, std::set<std::string>& visited);

  std::map<std::string, bool> decided_;
  std::map<std::string, ExpandEntry> proofStep_;  // set along success paths
  size_t budget_;
  size_t explored_ = 0;
};

ProveResult prove(const Structure& goal, size_t budget = 1000000);

struct FirstRedexEntry {
  RuleInstance instance;
  Structure premise;
  int redexDepth = 0;  // context depth of the instance's hole
  bool premiseProvable = false;
};

struct FirstRedexReport {
  std::vector<FirstRedexEntry> entries;
  std::optional<int> minProvableDepth;
  bool budgetExceeded = false;
  size_t nodesExplored = 0;
};

// Classifies every possible first step of a proof of the goal by whether
// its premise is provable and how deep its redex sits.
FirstRedexReport firstRedexAnalysis(const Structure& goal,
                                    size_t budget = 1000000);

// Replaces the unique occurrences of the atom and its dual by units
// throughout the derivation, dropping the steps that become trivial. The
// result derives the reduced conclusion and still checks.
Derivation deleteAtomPair(const Derivation& d, const Atom& a);

}  // namespace bv
