#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bv/derivation.hpp"
#include "bv/structure.hpp"

namespace bv {

class NotFlat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters of the recursively superimposed structure family. R and T
// must be flat par structures (unit, one atom, or a par of atoms) over
// atoms disjoint from the generated indexed ones.
struct AlphaParams {
  int n = 0;
  std::vector<int> u;  // index sequence seeding the generated atom names
  Structure R;
  Structure T;
};

// The generated structure together with the locations of its innermost
// base blocks, so their depths can be read off without re-searching.
struct AlphaStructure {
  Structure structure;
  std::vector<std::vector<int>> blockPaths;  // one path per base block
};

AlphaStructure alpha(const AlphaParams& p);

// alpha(n, [0], o, o): the n-th member of the counterexample family.
AlphaStructure sn(int n);

// Context depth of every base block occurrence; all equal 2n for sn(n).
std::vector<int> alphaZeroDepths(const AlphaStructure& s);

// Schematic derivation from [R,T] up from alpha(p), by transcribing the
// base-case step sequence and composing it recursively. No search is
// involved, so it scales linearly with the structure size.
Derivation alphaDerivation(const AlphaParams& p);

// alphaDerivation for sn(n), closed with the axiom: a checkable proof.
Derivation proofOfSn(int n);

// Searches all par substructures (modulo the equations) for one that
// splits into two dual halves; returns the pair if found.
std::optional<std::pair<Structure, Structure>> checkNoDualPars(
    const Structure& s);

}  // namespace bv
