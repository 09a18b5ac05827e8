#include "bv/structure.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace bv {

std::string Atom::text() const {
  std::string out;
  if (negated) out += '~';
  out += name;
  if (!index.empty()) {
    out += '_';
    for (size_t i = 0; i < index.size(); ++i) {
      if (i) out += '.';
      out += std::to_string(index[i]);
    }
  }
  return out;
}

int compareAtoms(const Atom& a, const Atom& b) {
  if (int c = a.name.compare(b.name)) return c;
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  if (a.negated != b.negated) return a.negated ? 1 : -1;
  return 0;
}

namespace {

int kindRank(Structure::Kind k) {
  switch (k) {
    case Structure::Kind::Unit: return 0;
    case Structure::Kind::Atom: return 1;
    case Structure::Kind::Var: return 2;
    case Structure::Kind::Hole: return 3;
    case Structure::Kind::Par: return 4;
    case Structure::Kind::Copar: return 5;
    case Structure::Kind::Seq: return 6;
  }
  return 7;
}

}  // namespace

int Structure::compare(const Structure& a, const Structure& b) {
  if (a.kind_ != b.kind_) return kindRank(a.kind_) < kindRank(b.kind_) ? -1 : 1;
  switch (a.kind_) {
    case Kind::Unit:
    case Kind::Hole:
      return 0;
    case Kind::Atom:
      return compareAtoms(a.atom_, b.atom_);
    case Kind::Var:
      return a.atom_.name.compare(b.atom_.name);
    default: {
      size_t n = std::min(a.children_.size(), b.children_.size());
      for (size_t i = 0; i < n; ++i) {
        if (int c = compare(a.children_[i], b.children_[i])) return c;
      }
      if (a.children_.size() != b.children_.size())
        return a.children_.size() < b.children_.size() ? -1 : 1;
      return 0;
    }
  }
}

Structure Structure::atom(Atom a) {
  Structure s;
  s.kind_ = Kind::Atom;
  s.atom_ = std::move(a);
  return s;
}

Structure Structure::atom(std::string name, bool negated,
                          std::vector<int> index) {
  return atom(Atom{std::move(name), negated, std::move(index)});
}

Structure Structure::var(std::string name) {
  Structure s;
  s.kind_ = Kind::Var;
  s.atom_.name = std::move(name);
  return s;
}

Structure Structure::hole() {
  Structure s;
  s.kind_ = Kind::Hole;
  return s;
}

// Shared normalizing constructor for par/copar/seq.
Structure Structure::composite(Kind kind, std::vector<Structure> children) {
  std::vector<Structure> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    if (c.isUnit()) continue;  // unit is neutral for all three relations
    if (c.kind() == kind) {
      for (const auto& g : c.children()) flat.push_back(g);
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return flat[0];
  if (kind != Kind::Seq) {
    std::sort(flat.begin(), flat.end(),
              [](const Structure& a, const Structure& b) {
                return compare(a, b) < 0;
              });
  }
  Structure s;
  s.kind_ = kind;
  s.children_ = std::move(flat);
  return s;
}

Structure Structure::par(std::vector<Structure> children) {
  return composite(Kind::Par, std::move(children));
}

Structure Structure::copar(std::vector<Structure> children) {
  return composite(Kind::Copar, std::move(children));
}

Structure Structure::seq(std::vector<Structure> children) {
  return composite(Kind::Seq, std::move(children));
}

size_t Structure::occurrenceCount() const {
  switch (kind_) {
    case Kind::Atom:
    case Kind::Var:
      return 1;
    case Kind::Unit:
    case Kind::Hole:
      return 0;
    default: {
      size_t n = 0;
      for (const auto& c : children_) n += c.occurrenceCount();
      return n;
    }
  }
}

bool Structure::containsHole() const {
  if (kind_ == Kind::Hole) return true;
  for (const auto& c : children_)
    if (c.containsHole()) return true;
  return false;
}

std::string Structure::text() const {
  switch (kind_) {
    case Kind::Unit: return "o";
    case Kind::Hole: return "{}";
    case Kind::Atom: return atom_.text();
    case Kind::Var: return atom_.name;
    default: {
      char open = kind_ == Kind::Par ? '[' : kind_ == Kind::Copar ? '(' : '<';
      char close = kind_ == Kind::Par ? ']' : kind_ == Kind::Copar ? ')' : '>';
      char sep = kind_ == Kind::Seq ? ';' : ',';
      std::string out(1, open);
      for (size_t i = 0; i < children_.size(); ++i) {
        if (i) out += sep;
        out += children_[i].text();
      }
      out += close;
      return out;
    }
  }
}

Structure negate(const Structure& s) {
  switch (s.kind()) {
    case Structure::Kind::Unit:
      return Structure::unit();
    case Structure::Kind::Atom:
      return Structure::atom(s.atomValue().dual());
    case Structure::Kind::Var:
      throw std::invalid_argument("cannot negate a structure variable");
    case Structure::Kind::Hole:
      throw std::invalid_argument("cannot negate a context hole");
    case Structure::Kind::Par:
    case Structure::Kind::Copar: {
      std::vector<Structure> kids;
      kids.reserve(s.children().size());
      for (const auto& c : s.children()) kids.push_back(negate(c));
      return s.kind() == Structure::Kind::Par ? Structure::copar(std::move(kids))
                                              : Structure::par(std::move(kids));
    }
    case Structure::Kind::Seq: {
      std::vector<Structure> kids;
      kids.reserve(s.children().size());
      for (const auto& c : s.children()) kids.push_back(negate(c));
      return Structure::seq(std::move(kids));
    }
  }
  return Structure::unit();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, bool schemeMode)
      : text_(text), schemeMode_(schemeMode) {}

  Structure run() {
    skipWs();
    if (eof()) fail("empty input");
    Structure s = parseStructure(false);
    skipWs();
    if (!eof()) fail("trailing input");
    return s;
  }

 private:
  std::string_view text_;
  bool schemeMode_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line_, col_);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skipWs() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  void expect(char c) {
    if (eof() || peek() != c)
      fail(std::string("expected '") + c + "'");
    advance();
  }

  Structure parseStructure(bool neg) {
    skipWs();
    if (eof()) fail("unexpected end of input");
    char c = peek();
    if (c == '~') {
      advance();
      return parseStructure(!neg);
    }
    if (c == '{') {
      advance();
      expect('}');
      if (neg) fail("cannot negate a context hole");
      return Structure::hole();
    }
    if (c == '[') return parseList('[', ']', ',', neg);
    if (c == '(') return parseList('(', ')', ',', neg);
    if (c == '<') return parseList('<', '>', ';', neg);
    if (c == '1') {
      advance();
      return Structure::unit();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parseAtom(neg);
    fail("unexpected character");
  }

  Structure parseList(char open, char close, char sep, bool neg) {
    expect(open);
    std::vector<Structure> kids;
    kids.push_back(parseStructure(neg));
    skipWs();
    while (!eof() && peek() == sep) {
      advance();
      kids.push_back(parseStructure(neg));
      skipWs();
    }
    expect(close);
    // De Morgan: a negated par reads as a copar of negated children and
    // vice versa; seq keeps its kind and order.
    if (open == '<') return Structure::seq(std::move(kids));
    bool mkPar = (open == '[') != neg;
    return mkPar ? Structure::par(std::move(kids))
                 : Structure::copar(std::move(kids));
  }

  Structure parseAtom(bool neg) {
    std::string name;
    name += advance();
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '\'')) {
      name += advance();
    }
    std::vector<int> index;
    if (!eof() && peek() == '_') {
      advance();
      index.push_back(parseNat());
      while (!eof() && peek() == '.') {
        advance();
        index.push_back(parseNat());
      }
    }
    if (name == "o" && index.empty()) {
      return Structure::unit();
    }
    if (schemeMode_ && std::isupper(static_cast<unsigned char>(name[0])) &&
        index.empty()) {
      if (neg) fail("cannot negate a structure variable");
      return Structure::var(std::move(name));
    }
    return Structure::atom(std::move(name), neg, std::move(index));
  }

  int parseNat() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected digits in atom index");
    int v = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (advance() - '0');
    }
    return v;
  }
};

}  // namespace

Structure parse(std::string_view text, bool schemeMode) {
  return Parser(text, schemeMode).run();
}

std::string OccurrenceEntry::label() const {
  if (isVar) return atom.name;
  return atom.text();
}

namespace {

void collectOccurrences(const Structure& s, std::vector<int>& path,
                        OccurrenceTable& out) {
  switch (s.kind()) {
    case Structure::Kind::Atom:
    case Structure::Kind::Var: {
      OccurrenceEntry e;
      e.id = static_cast<int>(out.entries.size());
      e.atom = s.atomValue();
      e.isVar = s.kind() == Structure::Kind::Var;
      e.path = path;
      out.entries.push_back(std::move(e));
      return;
    }
    case Structure::Kind::Unit:
    case Structure::Kind::Hole:
      return;
    default:
      for (size_t i = 0; i < s.children().size(); ++i) {
        path.push_back(static_cast<int>(i));
        collectOccurrences(s.children()[i], path, out);
        path.pop_back();
      }
  }
}

}  // namespace

OccurrenceTable occurrences(const Structure& s) {
  OccurrenceTable t;
  std::vector<int> path;
  collectOccurrences(s, path, t);
  return t;
}

namespace {

void findHoles(const Structure& s, std::vector<int>& path,
               std::vector<std::vector<int>>& out) {
  if (s.kind() == Structure::Kind::Hole) {
    out.push_back(path);
    return;
  }
  for (size_t i = 0; i < s.children().size(); ++i) {
    path.push_back(static_cast<int>(i));
    findHoles(s.children()[i], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<int> holePath(const Structure& context) {
  std::vector<int> path;
  std::vector<std::vector<int>> found;
  findHoles(context, path, found);
  if (found.empty()) throw std::invalid_argument("context has no hole");
  if (found.size() > 1)
    throw std::invalid_argument("context has more than one hole");
  return found[0];
}

int contextDepth(const Structure& context) {
  // The canonical form has no same-kind nesting, so the collapsed depth is
  // just the length of the path to the hole.
  return static_cast<int>(holePath(context).size());
}

const Structure& subtreeAt(const Structure& s, const std::vector<int>& path) {
  const Structure* cur = &s;
  for (int i : path) {
    if (i < 0 || static_cast<size_t>(i) >= cur->children().size())
      throw std::out_of_range("path does not resolve");
    cur = &cur->children()[static_cast<size_t>(i)];
  }
  return *cur;
}

Structure replaceAt(const Structure& s, const std::vector<int>& path,
                    const Structure& replacement) {
  if (path.empty()) return replacement;
  if (!s.isComposite()) throw std::out_of_range("path does not resolve");
  size_t i = static_cast<size_t>(path[0]);
  if (i >= s.children().size()) throw std::out_of_range("path does not resolve");
  std::vector<Structure> kids = s.children();
  std::vector<int> rest(path.begin() + 1, path.end());
  kids[i] = replaceAt(kids[i], rest, replacement);
  switch (s.kind()) {
    case Structure::Kind::Par: return Structure::par(std::move(kids));
    case Structure::Kind::Copar: return Structure::copar(std::move(kids));
    default: return Structure::seq(std::move(kids));
  }
}

Structure plug(const Structure& context, const Structure& filler) {
  if (context.kind() == Structure::Kind::Hole) return filler;
  return replaceAt(context, holePath(context), filler);
}

namespace {

Structure rebuild(Structure::Kind kind, std::vector<Structure> kids) {
  switch (kind) {
    case Structure::Kind::Par: return Structure::par(std::move(kids));
    case Structure::Kind::Copar: return Structure::copar(std::move(kids));
    default: return Structure::seq(std::move(kids));
  }
}

void collectPositions(const Structure& root, const Structure& node,
                      const std::vector<int>& path,
                      std::vector<std::pair<Structure, Structure>>& out) {
  out.emplace_back(replaceAt(root, path, Structure::hole()), node);
  if (!node.isComposite()) return;

  const auto& kids = node.children();
  size_t k = kids.size();
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> sub = path;
    sub.push_back(static_cast<int>(i));
    collectPositions(root, kids[i], sub, out);
  }

  // Child groupings of size 2..k-1: subsets for par/copar, contiguous runs
  // for seq. Size 1 and size k are already covered above.
  if (node.kind() == Structure::Kind::Seq) {
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = i + 1; j < k; ++j) {
        if (j - i + 1 == k) continue;
        std::vector<Structure> grp(kids.begin() + i, kids.begin() + j + 1);
        std::vector<Structure> rest;
        rest.insert(rest.end(), kids.begin(), kids.begin() + i);
        rest.push_back(Structure::hole());
        rest.insert(rest.end(), kids.begin() + j + 1, kids.end());
        Structure ctx =
            replaceAt(root, path, Structure::seq(std::move(rest)));
        out.emplace_back(std::move(ctx), Structure::seq(std::move(grp)));
      }
    }
  } else {
    for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
      size_t bits = static_cast<size_t>(__builtin_popcount(mask));
      if (bits < 2) continue;
      std::vector<Structure> grp, rest;
      for (size_t i = 0; i < k; ++i) {
        if (mask & (1u << i))
          grp.push_back(kids[i]);
        else
          rest.push_back(kids[i]);
      }
      rest.push_back(Structure::hole());
      Structure ctx = replaceAt(root, path, rebuild(node.kind(), std::move(rest)));
      out.emplace_back(std::move(ctx), rebuild(node.kind(), std::move(grp)));
    }
  }
}

}  // namespace

std::vector<std::pair<Structure, Structure>> positions(const Structure& s) {
  std::vector<std::pair<Structure, Structure>> out;
  collectPositions(s, s, {}, out);
  return out;
}

int depthOfStructure(const Structure& s) {
  int best = 0;
  for (const auto& e : occurrences(s).entries) {
    best = std::max(best, static_cast<int>(e.path.size()));
  }
  return best;
}

Structure substituteAtom(const Structure& s, const Atom& a,
                         const Structure& replacement) {
  switch (s.kind()) {
    case Structure::Kind::Atom:
      return s.atomValue() == a ? replacement : s;
    case Structure::Kind::Par:
    case Structure::Kind::Copar:
    case Structure::Kind::Seq: {
      std::vector<Structure> kids;
      kids.reserve(s.children().size());
      for (const auto& c : s.children())
        kids.push_back(substituteAtom(c, a, replacement));
      return rebuild(s.kind(), std::move(kids));
    }
    default:
      return s;
  }
}

}  // namespace bv
