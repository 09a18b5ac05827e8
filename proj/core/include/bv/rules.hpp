#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bv/derivation.hpp"
#include "bv/structure.hpp"

namespace bv {

// All ways to read s as <left; right>: every cut of a seq node, plus the
// unit paddings <o; s> and <s; o> for everything else.
std::vector<std::pair<Structure, Structure>> seqSplits(const Structure& s);

// All ways to read s as (left, right), including unit paddings.
std::vector<std::pair<Structure, Structure>> coparSplits(const Structure& s);

// Whether the redex/contractum pair has the shape of the named rule.
bool instanceShapeOk(RuleName rule, const Structure& redex,
                     const Structure& contractum);

// Rebuilds the context whose hole sits at the node addressed by path, with
// the redex removed; handles redexes that are child groupings of that node
// (subsets for par/copar, contiguous runs for seq).
std::optional<Structure> contextFor(const Structure& conclusion,
                                    const std::vector<int>& path,
                                    const Structure& redex);

}  // namespace bv
