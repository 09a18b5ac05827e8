#pragma once

// Test-only helpers: an exhaustive enumerator of canonical structures over
// a fixed atom alphabet, and an independent provability oracle that works
// top-down from the unit by applying the rules in the premise-to-conclusion
// direction. The production prover searches bottom-up over a one-step
// expansion, so agreement between the two is a meaningful cross-check.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bv/structure.hpp"

namespace bvtest {

using bv::Structure;

// All ways to read s as [left, right] including unit paddings.
inline std::vector<std::pair<Structure, Structure>> parSplits(
    const Structure& s) {
  std::vector<std::pair<Structure, Structure>> out;
  out.emplace_back(Structure::unit(), s);
  out.emplace_back(s, Structure::unit());
  if (s.kind() == Structure::Kind::Par) {
    const auto& kids = s.children();
    size_t k = kids.size();
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      std::vector<Structure> left, right;
      for (size_t i = 0; i < k; ++i)
        (mask & (1u << i) ? left : right).push_back(kids[i]);
      out.emplace_back(Structure::par(std::move(left)),
                       Structure::par(std::move(right)));
    }
  }
  return out;
}

inline std::vector<std::pair<Structure, Structure>> seqCuts(
    const Structure& s) {
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

// One top-down step: all conclusions derivable from the premise by a single
// rule application (anywhere, modulo the equations).
inline std::vector<Structure> downward(const Structure& premise,
                                       const std::vector<std::string>& names) {
  std::vector<Structure> out;
  auto push = [&](Structure s) { out.push_back(std::move(s)); };

  // interaction: replace any subterm W by a node joining W with [x,~x];
  // the unit premise admits the bare pair
  std::vector<Structure> pairs;
  for (const auto& n : names) {
    pairs.push_back(Structure::par(
        {Structure::atom(n, false), Structure::atom(n, true)}));
  }
  for (const auto& [ctx, sub] : positions(premise)) {
    for (const auto& p : pairs) {
      push(plug(ctx, Structure::par({sub, p})));
      push(plug(ctx, Structure::copar({sub, p})));
      push(plug(ctx, Structure::seq({sub, p})));
      push(plug(ctx, Structure::seq({p, sub})));
    }
    // switch read downward: sub = ([R,T],R') becomes [(R,R'),T]
    if (sub.kind() == Structure::Kind::Copar) {
      const auto& kids = sub.children();
      size_t k = kids.size();
      for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        std::vector<Structure> inner, rps;
        for (size_t i = 0; i < k; ++i)
          (mask & (1u << i) ? inner : rps).push_back(kids[i]);
        Structure innerS = Structure::copar(std::move(inner));
        Structure rp = Structure::copar(std::move(rps));
        for (const auto& [r, t] : parSplits(innerS)) {
          if (t.isUnit()) continue;
          push(plug(ctx, Structure::par({Structure::copar({r, rp}), t})));
        }
      }
    }
    // q_down read downward: sub = <[R,T];[R',T']> becomes [<R;R'>,<T;T'>]
    for (const auto& [f, g] : seqCuts(sub)) {
      for (const auto& [r, t] : parSplits(f)) {
        for (const auto& [rp, tp] : parSplits(g)) {
          push(plug(ctx, Structure::par({Structure::seq({r, rp}),
                                         Structure::seq({t, tp})})));
        }
      }
    }
  }
  return out;
}

// The set of provable structures with at most maxAtoms atom occurrences
// over the given names, computed as the downward closure of the unit.
inline std::set<std::string> provableClosure(
    const std::vector<std::string>& names, size_t maxAtoms) {
  std::set<std::string> reached;
  std::vector<Structure> frontier{Structure::unit()};
  reached.insert("o");
  while (!frontier.empty()) {
    std::vector<Structure> next;
    for (const auto& p : frontier) {
      for (auto& c : downward(p, names)) {
        if (c.occurrenceCount() > maxAtoms) continue;
        if (reached.insert(c.text()).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }
  return reached;
}

// All canonical structures with exactly the given atom leaves (as a
// multiset), built by brute force over groupings and deduplicated.
inline std::vector<Structure> structuresOver(std::vector<bv::Atom> leaves) {
  std::vector<Structure> out;
  if (leaves.empty()) {
    out.push_back(Structure::unit());
    return out;
  }
  if (leaves.size() == 1) {
    out.push_back(Structure::atom(leaves[0]));
    return out;
  }
  std::set<std::string> seen;
  // Split the multiset into an ordered sequence of 2..n nonempty groups,
  // recurse, and join with each operator; canonicalization collapses the
  // redundant presentations and the text key deduplicates.
  size_t n = leaves.size();
  std::vector<uint32_t> assignment(n);
  // assignment[i] in [0, groups): which group the i-th leaf joins
  for (size_t groups = 2; groups <= n; ++groups) {
    std::vector<size_t> idx(n, 0);
    while (true) {
      bool valid = true;
      std::vector<std::vector<bv::Atom>> parts(groups);
      for (size_t i = 0; i < n; ++i) parts[idx[i]].push_back(leaves[i]);
      for (const auto& part : parts) {
        if (part.empty()) valid = false;
      }
      if (valid) {
        // recursively enumerate structures per part and combine
        std::vector<std::vector<Structure>> options;
        for (auto& part : parts) options.push_back(structuresOver(part));
        std::vector<size_t> pick(groups, 0);
        while (true) {
          std::vector<Structure> kids;
          for (size_t g = 0; g < groups; ++g)
            kids.push_back(options[g][pick[g]]);
          for (int kind = 0; kind < 3; ++kind) {
            Structure s = kind == 0   ? Structure::par(kids)
                          : kind == 1 ? Structure::copar(kids)
                                      : Structure::seq(kids);
            // discard degenerate combinations that collapsed
            if (s.isComposite() && seen.insert(s.text()).second)
              out.push_back(s);
          }
          size_t g = 0;
          while (g < groups && ++pick[g] == options[g].size()) {
            pick[g] = 0;
            ++g;
          }
          if (g == groups) break;
        }
      }
      size_t i = 0;
      while (i < n && ++idx[i] == groups) {
        idx[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
  (void)assignment;
  return out;
}

// Every canonical structure with at most maxAtoms occurrences drawn from
// the four literals over the given two names.
inline std::vector<Structure> allSmallStructures(const std::string& n1,
                                                 const std::string& n2,
                                                 size_t maxAtoms) {
  std::vector<bv::Atom> alphabet = {
      {n1, false, {}}, {n1, true, {}}, {n2, false, {}}, {n2, true, {}}};
  std::vector<Structure> out;
  std::set<std::string> seen;
  // multisets as counts per alphabet letter
  std::vector<size_t> cnt(4, 0);
  while (true) {
    size_t total = cnt[0] + cnt[1] + cnt[2] + cnt[3];
    if (total <= maxAtoms) {
      std::vector<bv::Atom> leaves;
      for (size_t i = 0; i < 4; ++i)
        for (size_t c = 0; c < cnt[i]; ++c) leaves.push_back(alphabet[i]);
      for (auto& s : structuresOver(std::move(leaves))) {
        if (seen.insert(s.text()).second) out.push_back(std::move(s));
      }
    }
    size_t i = 0;
    while (i < 4 && ++cnt[i] > maxAtoms) {
      cnt[i] = 0;
      ++i;
    }
    if (i == 4) break;
  }
  return out;
}

}  // namespace bvtest
