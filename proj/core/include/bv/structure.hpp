#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bv {

// An atom: a named literal, possibly negated, possibly carrying a numeric
// index sequence (used to keep generated atoms pairwise distinct).
struct Atom {
  std::string name;
  bool negated = false;
  std::vector<int> index;

  Atom dual() const {
    Atom a = *this;
    a.negated = !a.negated;
    return a;
  }
  bool operator==(const Atom&) const = default;
  std::string text() const;
};

// Orders atoms by (name, index, negated).
int compareAtoms(const Atom& a, const Atom& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

// A structure in canonical normal form. Instances are immutable; the
// factory functions below normalize on construction:
//   - unit children are dropped, singleton par/copar/seq collapse,
//   - nested same-kind nodes are flattened,
//   - par/copar children are sorted by a fixed total order,
//   - negation lives only in atoms (there is no negation node).
// Var leaves occur only in rule schemes; Hole leaves only in contexts.
class Structure {
 public:
  enum class Kind : uint8_t { Unit, Atom, Var, Hole, Par, Copar, Seq };

  Structure() : kind_(Kind::Unit) {}

  static Structure unit() { return Structure(); }
  static Structure atom(Atom a);
  static Structure atom(std::string name, bool negated = false,
                        std::vector<int> index = {});
  static Structure var(std::string name);
  static Structure hole();
  static Structure par(std::vector<Structure> children);
  static Structure copar(std::vector<Structure> children);
  static Structure seq(std::vector<Structure> children);

  Kind kind() const { return kind_; }
  bool isUnit() const { return kind_ == Kind::Unit; }
  bool isComposite() const {
    return kind_ == Kind::Par || kind_ == Kind::Copar || kind_ == Kind::Seq;
  }
  const Atom& atomValue() const { return atom_; }
  const std::string& varName() const { return atom_.name; }
  const std::vector<Structure>& children() const { return children_; }

  // Number of atom and variable occurrences.
  size_t occurrenceCount() const;
  bool containsHole() const;

  std::string text() const;

  static int compare(const Structure& a, const Structure& b);
  bool operator==(const Structure& o) const { return compare(*this, o) == 0; }
  bool operator!=(const Structure& o) const { return !(*this == o); }
  bool operator<(const Structure& o) const { return compare(*this, o) < 0; }

 private:
  static Structure composite(Kind kind, std::vector<Structure> children);

  Kind kind_;
  Atom atom_;  // payload for Atom (full) and Var (name only)
  std::vector<Structure> children_;
};

// De Morgan dual in canonical form. Throws std::invalid_argument on
// structures containing variables or holes.
Structure negate(const Structure& s);

// Parses the concrete syntax:
//   structure := "o" | atom | "~" structure | "{}" |
//                "[" list "]" | "(" list ")" | "<" seqlist ">"
//   atom      := [A-Za-z][A-Za-z0-9']* ("_" digits ("." digits)*)?
// "1" is accepted as an alias of the unit "o". "~" binds tightest.
// With schemeMode, identifiers starting with an upper-case letter denote
// structure variables.
Structure parse(std::string_view text, bool schemeMode = false);

struct OccurrenceEntry {
  int id = 0;
  Atom atom;          // for variables: name only
  bool isVar = false;
  std::vector<int> path;  // child indices in the canonical form

  std::string label() const;  // printable identity, e.g. "~b" or "a_0.1"
};

struct OccurrenceTable {
  std::vector<OccurrenceEntry> entries;
  size_t size() const { return entries.size(); }
};

// Atom/variable occurrences in left-to-right order of the canonical form.
OccurrenceTable occurrences(const Structure& s);

// Contexts are structures containing exactly one Hole leaf.
std::vector<int> holePath(const Structure& context);

// Depth of the hole: the number of structural nodes crossed on the way to
// the hole, with same-kind nesting already collapsed by canonicalization.
int contextDepth(const Structure& context);

// Replaces the hole with the filler and renormalizes.
Structure plug(const Structure& context, const Structure& filler);

// All (context, substructure) splits of s, one per subterm occurrence plus
// one per child grouping of a composite node (subsets for par/copar,
// contiguous runs for seq), so that redexes hidden by associativity and
// commutativity are visible.
std::vector<std::pair<Structure, Structure>> positions(const Structure& s);

// Max contextDepth over the contexts of all atom/variable occurrences.
int depthOfStructure(const Structure& s);

// Substructure at a child-index path.
const Structure& subtreeAt(const Structure& s, const std::vector<int>& path);

// Replaces the subterm at the path and renormalizes.
Structure replaceAt(const Structure& s, const std::vector<int>& path,
                    const Structure& replacement);

// Replaces every occurrence of the atom (exact match) by the replacement
// and renormalizes.
Structure substituteAtom(const Structure& s, const Atom& a,
                         const Structure& replacement);

}  // namespace bv
