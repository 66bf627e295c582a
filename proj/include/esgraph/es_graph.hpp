#ifndef ESGRAPH_ES_GRAPH_HPP
#define ESGRAPH_ES_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "esgraph/ilength.hpp"
#include "esgraph/nielsen.hpp"
#include "esgraph/word.hpp"

namespace esgraph {

// Proper nonempty subset of {1..n}, as a bitmask (bit k-1 for index k).
struct IndexSet {
  int n = 0;
  std::uint32_t bits = 0;

  IndexSet() = default;
  IndexSet(int n_, std::uint32_t bits_);
  static IndexSet from_indices(int n, const std::vector<int>& indices);

  IndexSet complement() const { return IndexSet(n, ~bits & mask()); }
  std::uint32_t mask() const { return n == 32 ? ~0u : (1u << n) - 1; }
  bool contains(int k) const { return (bits >> (k - 1)) & 1; }
  std::vector<int> indices() const;

  bool operator==(const IndexSet&) const = default;
};

// S' or its complement is a proper subset of S or its complement.
bool compatible(const IndexSet& s, const IndexSet& s2);

// Elementary-wise criterion: inversions always preserve; swaps and
// transvections preserve iff both indices lie on the same side.
bool is_S_preserving(const ElementaryMove& m, const IndexSet& s);

struct Block {
  std::vector<ElementaryMove> moves;  // every move preserves the block side
  IndexSet side;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
};

struct MinChanges {
  int k = 0;
  BlockDecomposition decomposition;
};

// Dynamic program over (position, current side); changing sides costs one
// and requires compatibility.  Blocks are certified elementary-wise, so the
// result is an upper bound for the minimal number of index changes, which is
// the sound direction for every distance estimate derived from it.
// Requires 3 <= rank <= 16.
MinChanges min_index_changes(const TransformationWord& m);

struct ESVertex {
  BasisTuple tuple;
  IndexSet side;
};

// Certifies one edge: both endpoint factorizations refine to the common
// three-part split (P_A, P_C, P_B) of the refined tuple.
struct ESEdgeWitness {
  BasisTuple refined;
  IndexSet part_a, part_c, part_b;
  ESVertex endpoint1, endpoint2;
  Word conj1, conj2;  // endpoint tuples equal refined conjugated entrywise

  ESEdgeWitness() : conj1(Rank(2)), conj2(Rank(2)) {}
};

bool verify_edge_witness(const ESEdgeWitness& w);

struct ESPath {
  std::vector<ESVertex> vertices;
  std::vector<ESEdgeWitness> witnesses;  // one per consecutive vertex pair
};

// Walks the decomposition from the start vertex: each block applies its
// moves (which must preserve the block side), each side change crosses one
// edge when the sides are compatible and two otherwise.
ESPath path_from_blocks(const ESVertex& start, const BlockDecomposition& d);

// Incremental path construction, used by path_from_blocks and the quasiflat
// builder.  extend_path_hop crosses to the target side (one edge when
// compatible, two via a bridge otherwise); extend_path_moves applies moves
// preserving the final vertex's side, advancing its representative;
// rewrite_path_tuple swaps in another representative of the same vertex
// (caller's responsibility).
void extend_path_hop(ESPath& path, const IndexSet& target);
void extend_path_moves(ESPath& path, const std::vector<ElementaryMove>& moves);
void rewrite_path_tuple(ESPath& path, const BasisTuple& tuple);

struct DistanceLower {
  long ilength_lower = 0;
  bool certified = false;
  long bound = 0;  // max(0, ceil(L/24 - 1))
};

// Theorem-style lower bound for the distance between the standard vertex and
// any vertex carrying the given basis, for any index sets on both ends.
DistanceLower distance_lower_bound(const BasisTuple& x, int index,
                                   const CrConfig& cfg = {});

std::string to_json(const ESPath& path);
std::string side_to_string(const IndexSet& s);

}  // namespace esgraph

#endif
