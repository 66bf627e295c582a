#ifndef ESGRAPH_WHITEHEAD_HPP
#define ESGRAPH_WHITEHEAD_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esgraph/word.hpp"

namespace esgraph {

// Multigraph on the signed generators (all 2n of them, or 2(n-1) when one
// generator is excluded).  Vertices are letter codes; edges are unordered
// pairs stored in a canonical sorted order.  Loops occur only in augmented
// graphs, and only when an input word is not cyclically reduced.
struct WhiteheadGraph {
  int rank = 0;
  std::optional<int> excluded;
  bool augmented = false;
  std::vector<std::pair<Letter, Letter>> edges;

  std::vector<Letter> vertices() const;
};

// One edge per pair of consecutive letters (c1 c2 yields c1 -- c2^-1); the
// augmented graph adds one wraparound edge per word, from the last letter to
// the inverse of the first.  A length-1 word a_j contributes exactly the
// augmented edge a_j -- a_j^-1.  Throws if a word uses the excluded
// generator.
WhiteheadGraph build_whitehead(const std::vector<Word>& words, Rank rank,
                               std::optional<int> excluded, bool augmented);

// True iff the graph is disconnected over its full fixed vertex set
// (isolated vertices count), or some vertex is an articulation point of the
// underlying simple graph, or some vertex carries a loop while at least one
// other vertex exists.
bool has_cut_vertex(const WhiteheadGraph& g);

// Deterministic DOT text; vertices named a3 / a3_inv, parallel edges emitted
// separately.
std::string to_dot(const WhiteheadGraph& g);

// Deterministic JSON: {"rank", "excluded", "augmented", "edges": [[u,v],...]}
// with vertex names as in DOT and the edge multiset sorted.
std::string to_json(const WhiteheadGraph& g);

std::string vertex_name(Letter l);

}  // namespace esgraph

#endif
