#ifndef ESGRAPH_NIELSEN_HPP
#define ESGRAPH_NIELSEN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esgraph/word.hpp"

namespace esgraph {

enum class MoveKind { Swap, Invert, Transvect };

// swap(i,j): x_i <-> x_j;  invert(i): x_i -> x_i^-1;
// transvect(i,j,sign): x_i -> x_i x_j^sign.
struct ElementaryMove {
  MoveKind kind;
  int i = 0;
  int j = 0;
  int sign = 1;

  bool operator==(const ElementaryMove&) const = default;
};

ElementaryMove swap_move(int i, int j);
ElementaryMove invert_move(int i);
ElementaryMove transvect_move(int i, int j, int sign);

// Moves compose left to right, acting on basis tuples on the right.
struct TransformationWord {
  int rank = 0;
  std::vector<ElementaryMove> moves;
};

// Text syntax: `s i j`, `t i`, `a i j`, `A i j`, semicolon-separated.
TransformationWord parse_moves(std::string_view text, Rank rank);
std::string format_moves(const TransformationWord& m);

struct BasisTuple {
  int rank = 0;
  std::vector<Word> entries;

  long total_length() const;
  bool operator==(const BasisTuple&) const = default;
};

BasisTuple standard_basis(Rank rank);

BasisTuple apply_move(const BasisTuple& t, const ElementaryMove& m);
BasisTuple apply(const BasisTuple& t, const TransformationWord& m);

// Generator images of the automorphism the word denotes: the moves read in
// the same order, composed as functions right to left.  Substituting these
// images into the standard tuple reproduces apply(standard, m).
std::vector<Word> as_automorphism(const TransformationWord& m);

struct ReductionResult {
  BasisTuple reduced;
  TransformationWord moves;  // apply(input, moves) == reduced
};

// Greedy length descent over the replacements x_i -> x_i x_j^s and
// x_i -> x_j^s x_i (the latter realized as invert, transvect, invert),
// lexicographically least move first.  Every recorded step is
// non-increasing in total length.
ReductionResult nielsen_reduce(const BasisTuple& t);

// True iff the reduced form is a signed permutation of the standard basis.
bool is_basis(const BasisTuple& t);

// Deterministic random walk over the elementary moves.
std::pair<BasisTuple, TransformationWord> random_basis(Rank rank, int steps,
                                                       std::uint64_t seed);

// Necessary condition for w to be primitive (or a proper power of a
// primitive): the augmented Whitehead graph of its cyclic reduction has a
// cut vertex.  False certifies non-primitivity.
bool primitive_necessary(const Word& w);

}  // namespace esgraph

#endif
