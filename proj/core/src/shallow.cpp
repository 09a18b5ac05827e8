#include "bv/shallow.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bv {

namespace {

// Label -> occurrence id, rejecting repeated labels.
std::optional<std::map<std::string, int>> labelMap(const OccurrenceTable& occ) {
  std::map<std::string, int> out;
  for (const auto& e : occ.entries) {
    if (!out.emplace(e.label(), e.id).second) return std::nullopt;
  }
  return out;
}

}  // namespace

PrecResult precOrder(const Structure& R, const Structure& T) {
  PrecResult res;
  if (R == T) {
    res.status = PrecStatus::Equal;
    return res;
  }
  auto occR = occurrences(R);
  auto occT = occurrences(T);
  auto mapR = labelMap(occR);
  auto mapT = labelMap(occT);
  if (!mapR || !mapT) {
    res.status = PrecStatus::OccMismatch;
    res.detail = "occurrence labels are not pairwise distinct";
    return res;
  }
  if (mapR->size() != mapT->size() ||
      !std::equal(mapR->begin(), mapR->end(), mapT->begin(),
                  [](const auto& a, const auto& b) {
                    return a.first == b.first;
                  })) {
    res.status = PrecStatus::OccMismatch;
    res.detail = "the two sides have different occurrence labels";
    return res;
  }

  RelationWeb wR = webOf(R);
  RelationWeb wT = webOf(T);
  res.status = PrecStatus::True;
  std::vector<std::string> labels;
  for (const auto& [label, id] : *mapT) labels.push_back(label);
  for (size_t i = 0; i < labels.size(); ++i) {
    for (size_t j = i + 1; j < labels.size(); ++j) {
      Rel inT = wT.at(mapT->at(labels[i]), mapT->at(labels[j]));
      Rel inR = wR.at(mapR->at(labels[i]), mapR->at(labels[j]));
      int clause = 0;
      switch (inT) {
        case Rel::Par:
          if (inR != Rel::Par) clause = 1;
          break;
        case Rel::Copar:
          break;  // any relation in R is allowed below a copar
        case Rel::SeqLR:
          if (inR != Rel::SeqLR && inR != Rel::Par) clause = 3;
          break;
        case Rel::SeqRL:
          if (inR != Rel::SeqRL && inR != Rel::Par) clause = 4;
          break;
      }
      if (clause) {
        res.status = PrecStatus::False;
        res.violations.push_back({labels[i], labels[j], clause, inR, inT});
      }
    }
  }
  return res;
}

ShallowVerdict validateShallowRule(const RuleScheme& r) {
  ShallowVerdict v;
  v.depth = std::max(depthOfStructure(r.premise),
                     depthOfStructure(r.conclusion));
  if (r.premise.isUnit()) v.reasons.push_back("premise is the unit");
  if (r.conclusion.isUnit()) v.reasons.push_back("conclusion is the unit");
  if (!v.reasons.empty()) return v;

  PrecResult prec = precOrder(r.conclusion, r.premise);
  switch (prec.status) {
    case PrecStatus::Equal:
      v.reasons.push_back("premise and conclusion are equal");
      break;
    case PrecStatus::OccMismatch:
      v.reasons.push_back(prec.detail);
      break;
    case PrecStatus::False:
      for (const auto& viol : prec.violations) {
        v.reasons.push_back("ordering clause " + std::to_string(viol.clause) +
                            " fails on (" + viol.a + "," + viol.b + "): " +
                            relName(viol.inT) + " in the premise but " +
                            relName(viol.inR) + " in the conclusion");
      }
      break;
    case PrecStatus::True:
      v.isShallow = true;
      break;
  }
  return v;
}

int systemDepth(const ShallowSystem& s) {
  int depth = 0;
  for (const auto& r : s.rules) {
    ShallowVerdict v = validateShallowRule(r);
    if (!v.isShallow) throw NotShallow(r.name);
    depth = std::max(depth, v.depth);
  }
  return depth;
}

Structure instantiate(const Structure& scheme,
                      const std::map<std::string, Structure>& subst) {
  switch (scheme.kind()) {
    case Structure::Kind::Var: {
      auto it = subst.find(scheme.varName());
      return it == subst.end() ? scheme : it->second;
    }
    case Structure::Kind::Par:
    case Structure::Kind::Copar:
    case Structure::Kind::Seq: {
      std::vector<Structure> kids;
      kids.reserve(scheme.children().size());
      for (const auto& c : scheme.children())
        kids.push_back(instantiate(c, subst));
      if (scheme.kind() == Structure::Kind::Par) return Structure::par(kids);
      if (scheme.kind() == Structure::Kind::Copar)
        return Structure::copar(kids);
      return Structure::seq(kids);
    }
    default:
      return scheme;
  }
}

std::vector<std::pair<int, int>> matchingByLabel(const Structure& conclusion,
                                                 const Structure& premise) {
  auto mapC = labelMap(occurrences(conclusion));
  auto mapP = labelMap(occurrences(premise));
  if (!mapC || !mapP)
    throw BadMatching("occurrence labels are not pairwise distinct");
  if (mapC->size() != mapP->size())
    throw BadMatching("the two sides have different occurrence counts");
  std::vector<std::pair<int, int>> out;
  for (const auto& [label, id] : *mapC) {
    auto it = mapP->find(label);
    if (it == mapP->end())
      throw BadMatching("occurrence " + label + " is missing in the premise");
    out.emplace_back(id, it->second);
  }
  return out;
}

namespace {

// Occurrence id spans of substructures nested deeper than the cutoff.
void deepSpans(const Structure& s, int depth, int cutoff, int& next,
               std::vector<std::pair<const Structure*, std::pair<int, int>>>&
                   out) {
  if (s.kind() == Structure::Kind::Atom ||
      s.kind() == Structure::Kind::Var) {
    ++next;
    return;
  }
  if (!s.isComposite()) return;
  int first = next;
  for (const auto& c : s.children()) deepSpans(c, depth + 1, cutoff, next, out);
  if (depth > cutoff) out.push_back({&s, {first, next}});
}

}  // namespace

DeepPreservationResult checkDeepPreservation(
    const Structure& instanceConclusion, const Structure& instancePremise,
    const std::vector<std::pair<int, int>>& matching, int n) {
  size_t cCount = instanceConclusion.occurrenceCount();
  size_t pCount = instancePremise.occurrenceCount();
  if (matching.size() != cCount || matching.size() != pCount)
    throw BadMatching("matching must pair every occurrence of both sides");

  RelationWeb wC = webOf(instanceConclusion);
  RelationWeb wP = webOf(instancePremise);
  std::map<int, int> toPremise;
  std::set<int> usedP;
  for (const auto& [c, p] : matching) {
    if (c < 0 || c >= wC.size() || p < 0 || p >= wP.size())
      throw BadMatching("matching refers to an occurrence out of range");
    if (!toPremise.emplace(c, p).second || !usedP.insert(p).second)
      throw BadMatching("matching is not a bijection");
  }

  DeepPreservationResult res;
  std::vector<std::pair<const Structure*, std::pair<int, int>>> spans;
  int next = 0;
  deepSpans(instanceConclusion, 0, n, next, spans);
  for (const auto& [sub, span] : spans) {
    for (int i = span.first; i < span.second; ++i) {
      for (int j = i + 1; j < span.second; ++j) {
        if (wC.at(i, j) != wP.at(toPremise.at(i), toPremise.at(j))) {
          res.witness = DeepWitness{*sub, i, j};
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

}  // namespace bv
