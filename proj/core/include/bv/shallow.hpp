#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bv/structure.hpp"
#include "bv/web.hpp"

namespace bv {

class NotShallow : public std::invalid_argument {
 public:
  explicit NotShallow(const std::string& ruleName)
      : std::invalid_argument("rule is not shallow: " + ruleName),
        ruleName(ruleName) {}
  std::string ruleName;
};

// A rule scheme: premise over conclusion, both structure schemes (parsed
// with schemeMode, so capitalized identifiers are variables).
struct RuleScheme {
  std::string name;
  Structure premise;
  Structure conclusion;
};

struct ShallowSystem {
  std::vector<RuleScheme> rules;
};

enum class PrecStatus { True, False, OccMismatch, Equal };

struct PrecViolation {
  std::string a, b;  // occurrence labels
  int clause = 0;    // which ordering clause failed (1, 3 or 4)
  Rel inR = Rel::Par;
  Rel inT = Rel::Par;
};

struct PrecResult {
  PrecStatus status = PrecStatus::False;
  std::vector<PrecViolation> violations;  // empty unless status is False
  std::string detail;                     // set for OccMismatch
  bool ok() const { return status == PrecStatus::True; }
};

// The ordering R before T on structures sharing one set of occurrence
// labels. Occurrences are matched by label, so labels must be pairwise
// distinct within each side. Reading pairs through the webs of R and T:
//   1. par in T forces par in R,
//   2. copar in T allows any relation in R,
//   3. seq in T forces the same seq direction or par in R,
// and symmetrically for the opposite direction.
PrecResult precOrder(const Structure& R, const Structure& T);

struct ShallowVerdict {
  bool isShallow = false;
  int depth = 0;  // max occurrence depth over both sides
  std::vector<std::string> reasons;
};

// A rule scheme is shallow when both sides are non-unit, their occurrence
// labels coincide and are per-side distinct, and conclusion precedes
// premise in the ordering above. Interaction-style rules that create or
// delete occurrences never qualify.
ShallowVerdict validateShallowRule(const RuleScheme& r);

// Max depth over the rules; throws NotShallow naming the first offender.
int systemDepth(const ShallowSystem& s);

// Replaces variables by ground structures and renormalizes.
Structure instantiate(const Structure& scheme,
                      const std::map<std::string, Structure>& subst);

struct DeepWitness {
  Structure substructure;  // the nested part whose relations changed
  int a = 0, b = 0;        // occurrence ids in the conclusion
};

struct DeepPreservationResult {
  bool ok = false;
  std::optional<DeepWitness> witness;
};

// For an instance of a depth-n shallow rule, relations inside any
// substructure of the conclusion nested deeper than n must carry over to
// the premise unchanged. The matching pairs conclusion occurrence ids with
// premise occurrence ids and must be a total bijection; anything else
// throws BadMatching.
DeepPreservationResult checkDeepPreservation(
    const Structure& instanceConclusion, const Structure& instancePremise,
    const std::vector<std::pair<int, int>>& matching, int n);

// Matching by occurrence label, for instances whose labels are pairwise
// distinct on each side; throws BadMatching when labels do not pair up.
std::vector<std::pair<int, int>> matchingByLabel(const Structure& conclusion,
                                                 const Structure& premise);

}  // namespace bv
