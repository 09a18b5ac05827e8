#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bv/structure.hpp"

namespace bv {

// Relation between an ordered pair of occurrences (i,j). SeqLR means
// "i before j"; the co-seq relation is SeqLR read backwards, so it never
// needs a tag of its own.
enum class Rel : uint8_t { SeqLR, SeqRL, Par, Copar };

// The symmetric kind, forgetting seq direction.
enum class RelKind : uint8_t { Seq, Par, Copar };

RelKind relKind(Rel r);
Rel flip(Rel r);
std::string relName(Rel r);

class DuplicateAtoms : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadMatching : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A total edge labeling of the occurrence pairs. When produced by webOf it
// is the relation web of a structure; constructed by hand it is merely a
// candidate with no promise of being realizable.
class RelationWeb {
 public:
  RelationWeb() = default;
  explicit RelationWeb(OccurrenceTable occ);

  const OccurrenceTable& occ() const { return occ_; }
  int size() const { return static_cast<int>(occ_.size()); }

  // Relation of the ordered pair (i, j), i != j.
  Rel at(int i, int j) const;
  void set(int i, int j, Rel r);

  RelKind kindAt(int i, int j) const { return relKind(at(i, j)); }
  bool seqBefore(int i, int j) const { return at(i, j) == Rel::SeqLR; }

  // True once every pair has been assigned a relation.
  bool complete() const;

  bool operator==(const RelationWeb& o) const;
  bool operator!=(const RelationWeb& o) const { return !(*this == o); }

 private:
  size_t cell(int i, int j) const;

  OccurrenceTable occ_;
  std::vector<uint8_t> rel_;  // upper triangle, stored for i < j
};

// Candidates share the representation; only the provenance differs.
using WebCandidate = RelationWeb;

// The relation web of a canonical structure. Unit yields the empty web.
RelationWeb webOf(const Structure& s);

struct PropertyViolation {
  std::string tag;            // e.g. "S4-transitivity", "S7-par"
  std::vector<int> witness;   // occurrence ids
};

struct PropertyReport {
  bool passed = true;
  std::vector<PropertyViolation> violations;
};

// Checks seq transitivity, the triangular property, and the three square
// properties over all triples/quadruples. Genuine webs always pass.
PropertyReport verifyWebProperties(const WebCandidate& w);

// Checks the inverse square property for par and copar (it fails for seq
// in general, which is why it is not part of verifyWebProperties).
PropertyReport checkInverseSquare(const RelationWeb& w);

struct ReconstructResult {
  bool ok = false;
  Structure structure;
  // Partition states, each partition rendered as its structure text; the
  // first state is the all-singletons one, then one state per merge.
  std::vector<std::vector<std::string>> trace;
};

// Partition-merging decision procedure: singletons first, then repeatedly
// merge two blocks that relate uniformly to each other and identically to
// everything outside. A candidate is a web iff a single block remains.
ReconstructResult reconstruct(const WebCandidate& w);

struct ForbiddenWitness {
  int pattern = 0;            // 1, 2 or 3, see forbiddenConfigPattern
  std::array<int, 4> occ{};   // ids playing the roles a, ~a, b, ~b
};

// The three unprovable two-dual-pair webs, as structures.
const std::array<const char*, 3>& forbiddenConfigPatterns();

// Scans every two dual atom pairs for a sub-web matching one of the three
// forbidden configurations (in any role or polarity symmetry). Requires
// pairwise distinct atoms; throws DuplicateAtoms otherwise.
std::vector<ForbiddenWitness> forbiddenConfigs(const RelationWeb& w);

struct RelationDiffEntry {
  int aR = 0, bR = 0;  // occurrence ids in wR; the matched ids in wT differ
  Rel inR = Rel::Par;
  Rel inT = Rel::Par;
};

// Pairs whose relation changes across the matching (ids in wR paired with
// ids in wT). The matching must be injective both ways; throws BadMatching.
std::vector<RelationDiffEntry> relationDiff(
    const RelationWeb& wR, const RelationWeb& wT,
    const std::vector<std::pair<int, int>>& matching);

std::string webToJson(const RelationWeb& w, bool pretty = false);
RelationWeb webFromJson(const std::string& text);
std::string webToDot(const RelationWeb& w);

}  // namespace bv
