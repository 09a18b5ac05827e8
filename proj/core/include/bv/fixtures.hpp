#pragma once

namespace bv::fixtures {

// The six-atom hexagon structure whose proofs all start two levels deep.
inline constexpr const char* kS0Text = "[<[a,b];c>,<~a;[~b,~c]>]";

// Its step-by-step proof, bottom-up.
inline constexpr const char* kS0ProofJson = R"JSON({
  "conclusion": "[<[a,b];c>,<~a;[~b,~c]>]",
  "steps": [
    {"rule": "q_down", "path": [1, 0], "redex": "[a,b]",
     "contractum": "<a;b>", "premise": "[<a;b;c>,<~a;[~b,~c]>]"},
    {"rule": "q_down", "path": [], "redex": "[<a;b;c>,<~a;[~b,~c]>]",
     "contractum": "<[a,~a];[~b,~c,<b;c>]>",
     "premise": "<[a,~a];[~b,~c,<b;c>]>"},
    {"rule": "ai_down", "path": [0], "redex": "[a,~a]",
     "contractum": "o", "premise": "[~b,~c,<b;c>]"},
    {"rule": "q_down", "path": [], "redex": "[~b,<b;c>]",
     "contractum": "<[b,~b];c>", "premise": "[~c,<[b,~b];c>]"},
    {"rule": "q_down", "path": [], "redex": "[~c,<[b,~b];c>]",
     "contractum": "<[b,~b];[c,~c]>", "premise": "<[b,~b];[c,~c]>"},
    {"rule": "ai_down", "path": [1], "redex": "[c,~c]",
     "contractum": "o", "premise": "[b,~b]"},
    {"rule": "ai_down", "path": [], "redex": "[b,~b]",
     "contractum": "o", "premise": "o"},
    {"rule": "axiom", "path": [], "redex": "o",
     "contractum": "o", "premise": "o"}
  ]
})JSON";

// The six-occurrence reconstruction example: the web of
// [([a,b],c),<d;[e,f]>], given as a bare candidate.
inline constexpr const char* kSixOccurrenceWebJson = R"JSON({
  "occurrences": [
    {"id": 0, "atom": "a", "neg": false, "index": []},
    {"id": 1, "atom": "b", "neg": false, "index": []},
    {"id": 2, "atom": "c", "neg": false, "index": []},
    {"id": 3, "atom": "d", "neg": false, "index": []},
    {"id": 4, "atom": "e", "neg": false, "index": []},
    {"id": 5, "atom": "f", "neg": false, "index": []}
  ],
  "relations": [
    {"a": 0, "b": 1, "rel": "par"},
    {"a": 0, "b": 2, "rel": "copar"},
    {"a": 1, "b": 2, "rel": "copar"},
    {"a": 0, "b": 3, "rel": "par"},
    {"a": 0, "b": 4, "rel": "par"},
    {"a": 0, "b": 5, "rel": "par"},
    {"a": 1, "b": 3, "rel": "par"},
    {"a": 1, "b": 4, "rel": "par"},
    {"a": 1, "b": 5, "rel": "par"},
    {"a": 2, "b": 3, "rel": "par"},
    {"a": 2, "b": 4, "rel": "par"},
    {"a": 2, "b": 5, "rel": "par"},
    {"a": 3, "b": 4, "rel": "seq"},
    {"a": 3, "b": 5, "rel": "seq"},
    {"a": 4, "b": 5, "rel": "par"}
  ]
})JSON";

inline constexpr const char* kSixOccurrenceStructure = "[([a,b],c),<d;[e,f]>]";

}  // namespace bv::fixtures
