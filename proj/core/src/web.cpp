#include "bv/web.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bv {

RelKind relKind(Rel r) {
  switch (r) {
    case Rel::SeqLR:
    case Rel::SeqRL:
      return RelKind::Seq;
    case Rel::Par:
      return RelKind::Par;
    default:
      return RelKind::Copar;
  }
}

Rel flip(Rel r) {
  switch (r) {
    case Rel::SeqLR: return Rel::SeqRL;
    case Rel::SeqRL: return Rel::SeqLR;
    default: return r;
  }
}

std::string relName(Rel r) {
  switch (r) {
    case Rel::SeqLR: return "seq";
    case Rel::SeqRL: return "co-seq";
    case Rel::Par: return "par";
    default: return "copar";
  }
}

RelationWeb::RelationWeb(OccurrenceTable occ) : occ_(std::move(occ)) {
  size_t n = occ_.size();
  rel_.assign(n * (n - 1) / 2, 255);
  if (n == 0) rel_.clear();
}

size_t RelationWeb::cell(int i, int j) const {
  // upper triangle index for i < j
  size_t n = occ_.size();
  return static_cast<size_t>(i) * (2 * n - static_cast<size_t>(i) - 1) / 2 +
         static_cast<size_t>(j - i - 1);
}

Rel RelationWeb::at(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= size() || j >= size())
    throw std::out_of_range("bad occurrence pair");
  bool swapped = i > j;
  if (swapped) std::swap(i, j);
  uint8_t v = rel_[cell(i, j)];
  if (v == 255) throw std::logic_error("relation not set");
  Rel r = static_cast<Rel>(v);
  return swapped ? flip(r) : r;
}

void RelationWeb::set(int i, int j, Rel r) {
  if (i == j || i < 0 || j < 0 || i >= size() || j >= size())
    throw std::out_of_range("bad occurrence pair");
  if (i > j) {
    std::swap(i, j);
    r = flip(r);
  }
  rel_[cell(i, j)] = static_cast<uint8_t>(r);
}

bool RelationWeb::complete() const {
  return std::all_of(rel_.begin(), rel_.end(),
                     [](uint8_t v) { return v != 255; });
}

bool RelationWeb::operator==(const RelationWeb& o) const {
  if (size() != o.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (occ_.entries[i].label() != o.occ_.entries[i].label()) return false;
  }
  return rel_ == o.rel_;
}

namespace {

// Ids of the atom occurrences inside each child of a composite node, in
// canonical traversal order.
void fillWeb(const Structure& s, int& next, RelationWeb& w) {
  if (s.kind() == Structure::Kind::Atom || s.kind() == Structure::Kind::Var) {
    ++next;
    return;
  }
  if (!s.isComposite()) return;
  std::vector<std::pair<int, int>> spans;  // [first, last) per child
  for (const auto& c : s.children()) {
    int first = next;
    fillWeb(c, next, w);
    spans.emplace_back(first, next);
  }
  Rel rel = s.kind() == Structure::Kind::Par     ? Rel::Par
            : s.kind() == Structure::Kind::Copar ? Rel::Copar
                                                 : Rel::SeqLR;
  for (size_t x = 0; x < spans.size(); ++x) {
    for (size_t y = x + 1; y < spans.size(); ++y) {
      for (int i = spans[x].first; i < spans[x].second; ++i) {
        for (int j = spans[y].first; j < spans[y].second; ++j) {
          w.set(i, j, rel);
        }
      }
    }
  }
}

}  // namespace

RelationWeb webOf(const Structure& s) {
  RelationWeb w(occurrences(s));
  int next = 0;
  fillWeb(s, next, w);
  return w;
}

PropertyReport verifyWebProperties(const WebCandidate& w) {
  PropertyReport report;
  int n = w.size();
  auto add = [&](std::string tag, std::vector<int> witness) {
    report.passed = false;
    report.violations.push_back({std::move(tag), std::move(witness)});
  };

  // S4: seq transitivity (co-seq transitivity is the same scan backwards).
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a || !w.seqBefore(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (w.seqBefore(b, c) && !w.seqBefore(a, c))
          add("S4-transitivity", {a, b, c});
      }
    }
  }

  // S6: among any three occurrences the three pairwise relation kinds
  // cannot be pairwise distinct (seq and co-seq count as one kind).
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        RelKind r1 = w.kindAt(a, b);
        RelKind r2 = w.kindAt(b, c);
        RelKind r3 = w.kindAt(c, a);
        if (r1 != r2 && r2 != r3 && r3 != r1) add("S6-triangular", {a, b, c});
      }
    }
  }

  // S7 square properties, quantified over ordered distinct quadruples.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (int d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (w.seqBefore(a, b) && w.seqBefore(a, d) && w.seqBefore(c, d)) {
            if (!(w.seqBefore(a, c) || w.seqBefore(b, c) ||
                  w.seqBefore(b, d) || w.seqBefore(c, a) ||
                  w.seqBefore(c, b) || w.seqBefore(d, b)))
              add("S7-seq", {a, b, c, d});
          }
          auto sq = [&](Rel rel, const char* tag) {
            if (w.at(a, b) == rel && w.at(a, d) == rel && w.at(c, d) == rel) {
              if (!(w.at(a, c) == rel || w.at(b, c) == rel ||
                    w.at(b, d) == rel))
                add(tag, {a, b, c, d});
            }
          };
          sq(Rel::Par, "S7-par");
          sq(Rel::Copar, "S7-copar");
        }
      }
    }
  }
  return report;
}

PropertyReport checkInverseSquare(const RelationWeb& w) {
  PropertyReport report;
  int n = w.size();
  auto add = [&](std::string tag, std::vector<int> witness) {
    report.passed = false;
    report.violations.push_back({std::move(tag), std::move(witness)});
  };
  auto clause = [&](Rel rel, const char* tag) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            if (a == b || a == c || a == d || b == c || b == d || c == d)
              continue;
            if (w.at(a, b) != rel && w.at(a, d) != rel &&
                w.at(c, d) != rel && w.at(a, c) == rel &&
                w.at(b, d) == rel && w.at(b, c) == rel)
              add(tag, {a, b, c, d});
          }
  };
  clause(Rel::Par, "inverse-square-par");
  clause(Rel::Copar, "inverse-square-copar");
  return report;
}

namespace {

struct Block {
  std::vector<int> members;  // sorted occurrence ids
  Structure structure;
};

Structure joinStructures(Rel rel, const Structure& u, const Structure& v) {
  switch (relKind(rel)) {
    case RelKind::Par: return Structure::par({u, v});
    case RelKind::Copar: return Structure::copar({u, v});
    default:
      return rel == Rel::SeqLR ? Structure::seq({u, v})
                               : Structure::seq({v, u});
  }
}

}  // namespace

ReconstructResult reconstruct(const WebCandidate& w) {
  ReconstructResult res;
  int n = w.size();
  if (n == 0) {
    res.ok = true;
    res.structure = Structure::unit();
    res.trace.push_back({});
    return res;
  }

  std::vector<Block> blocks;
  for (int i = 0; i < n; ++i) {
    Block b;
    b.members = {i};
    const auto& e = w.occ().entries[i];
    b.structure = e.isVar ? Structure::var(e.atom.name) : Structure::atom(e.atom);
    blocks.push_back(std::move(b));
  }

  auto snapshot = [&]() {
    std::vector<std::string> state;
    for (const auto& b : blocks) state.push_back(b.structure.text());
    res.trace.push_back(std::move(state));
  };
  snapshot();

  // Two blocks may merge when they relate uniformly to each other and see
  // every outside occurrence through the same relation.
  auto uniformRel = [&](const Block& x, const Block& y) -> std::optional<Rel> {
    Rel r = w.at(x.members[0], y.members[0]);
    for (int i : x.members)
      for (int j : y.members)
        if (w.at(i, j) != r) return std::nullopt;
    return r;
  };
  auto sameOutside = [&](const Block& x, const Block& y) {
    std::set<int> inside(x.members.begin(), x.members.end());
    inside.insert(y.members.begin(), y.members.end());
    int i = x.members[0];
    int j = y.members[0];
    for (int c = 0; c < n; ++c) {
      if (inside.count(c)) continue;
      if (w.at(i, c) != w.at(j, c)) return false;
    }
    // Uniformity inside each block guarantees the representative suffices,
    // but blocks built from a bad candidate may not be uniform yet, so
    // check all members.
    for (int a : x.members)
      for (int b : y.members)
        for (int c = 0; c < n; ++c) {
          if (inside.count(c)) continue;
          if (w.at(a, c) != w.at(b, c)) return false;
        }
    return true;
  };

  while (blocks.size() > 1) {
    bool merged = false;
    // Deterministic tie-break: least (min id of first block, min id of
    // second block) among eligible pairs.
    for (size_t x = 0; x < blocks.size() && !merged; ++x) {
      for (size_t y = x + 1; y < blocks.size() && !merged; ++y) {
        auto rel = uniformRel(blocks[x], blocks[y]);
        if (!rel || !sameOutside(blocks[x], blocks[y])) continue;
        Block nb;
        nb.members = blocks[x].members;
        nb.members.insert(nb.members.end(), blocks[y].members.begin(),
                          blocks[y].members.end());
        std::sort(nb.members.begin(), nb.members.end());
        nb.structure =
            joinStructures(*rel, blocks[x].structure, blocks[y].structure);
        blocks.erase(blocks.begin() + static_cast<long>(y));
        blocks.erase(blocks.begin() + static_cast<long>(x));
        blocks.push_back(std::move(nb));
        std::sort(blocks.begin(), blocks.end(),
                  [](const Block& a, const Block& b) {
                    return a.members[0] < b.members[0];
                  });
        merged = true;
      }
    }
    if (!merged) return res;  // not a web
    snapshot();
  }

  res.ok = true;
  res.structure = blocks[0].structure;
  return res;
}

const std::array<const char*, 3>& forbiddenConfigPatterns() {
  static const std::array<const char*, 3> patterns = {
      "[(a,~b),(~a,b)]",
      "[<a;~b>,(~a,b)]",
      "[<a;~b>,<b;~a>]",
  };
  return patterns;
}

namespace {

// Relation lookup by label for a 4-occurrence pattern web.
struct PatternWeb {
  RelationWeb web;
  std::map<std::string, int> byLabel;
};

const std::vector<PatternWeb>& patternWebs() {
  static const std::vector<PatternWeb> pats = [] {
    std::vector<PatternWeb> out;
    for (const char* text : forbiddenConfigPatterns()) {
      PatternWeb p;
      p.web = webOf(parse(text));
      for (const auto& e : p.web.occ().entries) p.byLabel[e.label()] = e.id;
      out.push_back(std::move(p));
    }
    return out;
  }();
  return pats;
}

}  // namespace

std::vector<ForbiddenWitness> forbiddenConfigs(const RelationWeb& w) {
  int n = w.size();
  std::set<std::string> seen;
  for (const auto& e : w.occ().entries) {
    if (!seen.insert(e.label()).second)
      throw DuplicateAtoms("occurrence atoms are not pairwise distinct: " +
                           e.label());
  }

  // Dual pairs present in the web, keyed by (name, index).
  std::map<std::pair<std::string, std::vector<int>>, std::pair<int, int>>
      pairs;  // positive id, negative id (-1 when absent)
  for (const auto& e : w.occ().entries) {
    if (e.isVar) continue;
    auto key = std::make_pair(e.atom.name, e.atom.index);
    auto it = pairs.emplace(key, std::make_pair(-1, -1)).first;
    (e.atom.negated ? it->second.second : it->second.first) = e.id;
  }
  std::vector<std::pair<int, int>> duals;  // (positive, negative)
  for (const auto& [key, ids] : pairs) {
    if (ids.first >= 0 && ids.second >= 0) duals.push_back(ids);
  }

  std::vector<ForbiddenWitness> out;
  for (size_t x = 0; x < duals.size(); ++x) {
    for (size_t y = x + 1; y < duals.size(); ++y) {
      for (int pat = 0; pat < 3; ++pat) {
        const auto& p = patternWebs()[static_cast<size_t>(pat)];
        int pa = p.byLabel.at("a"), pna = p.byLabel.at("~a");
        int pb = p.byLabel.at("b"), pnb = p.byLabel.at("~b");
        bool hit = false;
        std::array<int, 4> roles{};
        // Role and polarity symmetries: which dual pair plays (a,~a) and
        // which occurrence of each pair is the positive one.
        for (int swapPairs = 0; swapPairs < 2 && !hit; ++swapPairs) {
          auto p1 = swapPairs ? duals[y] : duals[x];
          auto p2 = swapPairs ? duals[x] : duals[y];
          for (int flip1 = 0; flip1 < 2 && !hit; ++flip1) {
            for (int flip2 = 0; flip2 < 2 && !hit; ++flip2) {
              int A = flip1 ? p1.second : p1.first;
              int nA = flip1 ? p1.first : p1.second;
              int B = flip2 ? p2.second : p2.first;
              int nB = flip2 ? p2.first : p2.second;
              std::array<std::pair<int, int>, 4> map = {
                  std::make_pair(pa, A), std::make_pair(pna, nA),
                  std::make_pair(pb, B), std::make_pair(pnb, nB)};
              bool match = true;
              for (size_t i = 0; i < 4 && match; ++i) {
                for (size_t j = i + 1; j < 4 && match; ++j) {
                  if (p.web.at(map[i].first, map[j].first) !=
                      w.at(map[i].second, map[j].second))
                    match = false;
                }
              }
              if (match) {
                hit = true;
                roles = {A, nA, B, nB};
              }
            }
          }
        }
        if (hit) {
          out.push_back({pat + 1, roles});
          break;  // report each pair-of-pairs at most once
        }
      }
    }
  }
  (void)n;
  return out;
}

std::vector<RelationDiffEntry> relationDiff(
    const RelationWeb& wR, const RelationWeb& wT,
    const std::vector<std::pair<int, int>>& matching) {
  std::set<int> usedR, usedT;
  for (const auto& [r, t] : matching) {
    if (r < 0 || r >= wR.size() || t < 0 || t >= wT.size())
      throw BadMatching("matching refers to an occurrence out of range");
    if (!usedR.insert(r).second || !usedT.insert(t).second)
      throw BadMatching("matching is not injective");
  }
  std::vector<RelationDiffEntry> out;
  for (size_t i = 0; i < matching.size(); ++i) {
    for (size_t j = i + 1; j < matching.size(); ++j) {
      auto [r1, t1] = matching[i];
      auto [r2, t2] = matching[j];
      Rel inR = wR.at(r1, r2);
      Rel inT = wT.at(t1, t2);
      if (inR != inT) out.push_back({r1, r2, inR, inT});
    }
  }
  return out;
}

std::string webToJson(const RelationWeb& w, bool pretty) {
  nlohmann::json j;
  j["occurrences"] = nlohmann::json::array();
  for (const auto& e : w.occ().entries) {
    nlohmann::json o;
    o["id"] = e.id;
    o["atom"] = e.atom.name;
    o["neg"] = e.atom.negated;
    o["index"] = e.atom.index;
    j["occurrences"].push_back(std::move(o));
  }
  j["relations"] = nlohmann::json::array();
  for (int a = 0; a < w.size(); ++a) {
    for (int b = a + 1; b < w.size(); ++b) {
      nlohmann::json r;
      Rel rel = w.at(a, b);
      if (rel == Rel::SeqRL) {
        r["a"] = b;
        r["b"] = a;
        r["rel"] = "seq";
      } else {
        r["a"] = a;
        r["b"] = b;
        r["rel"] = relName(rel);
      }
      j["relations"].push_back(std::move(r));
    }
  }
  return pretty ? j.dump(2) : j.dump();
}

RelationWeb webFromJson(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  OccurrenceTable occ;
  for (const auto& o : j.at("occurrences")) {
    OccurrenceEntry e;
    e.id = o.at("id").get<int>();
    e.atom.name = o.at("atom").get<std::string>();
    e.atom.negated = o.value("neg", false);
    if (o.contains("index")) e.atom.index = o["index"].get<std::vector<int>>();
    occ.entries.push_back(std::move(e));
  }
  std::sort(occ.entries.begin(), occ.entries.end(),
            [](const OccurrenceEntry& a, const OccurrenceEntry& b) {
              return a.id < b.id;
            });
  for (size_t i = 0; i < occ.entries.size(); ++i) {
    if (occ.entries[i].id != static_cast<int>(i))
      throw std::invalid_argument("occurrence ids must be dense 0..k-1");
  }
  RelationWeb w(std::move(occ));
  for (const auto& r : j.at("relations")) {
    int a = r.at("a").get<int>();
    int b = r.at("b").get<int>();
    std::string rel = r.at("rel").get<std::string>();
    if (rel == "seq")
      w.set(a, b, Rel::SeqLR);
    else if (rel == "par")
      w.set(a, b, Rel::Par);
    else if (rel == "copar")
      w.set(a, b, Rel::Copar);
    else
      throw std::invalid_argument("unknown relation tag: " + rel);
  }
  if (!w.complete())
    throw std::invalid_argument("relations do not cover every pair");
  return w;
}

std::string webToDot(const RelationWeb& w) {
  std::ostringstream out;
  out << "digraph web {\n";
  for (const auto& e : w.occ().entries) {
    out << "  n" << e.id << " [label=\"" << e.label() << "\"];\n";
  }
  for (int a = 0; a < w.size(); ++a) {
    for (int b = a + 1; b < w.size(); ++b) {
      switch (w.at(a, b)) {
        case Rel::SeqLR:
          out << "  n" << a << " -> n" << b << ";\n";
          break;
        case Rel::SeqRL:
          out << "  n" << b << " -> n" << a << ";\n";
          break;
        case Rel::Par:
          out << "  n" << a << " -> n" << b << " [dir=none];\n";
          break;
        case Rel::Copar:
          out << "  n" << a << " -> n" << b << " [dir=none,style=dashed];\n";
          break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace bv
