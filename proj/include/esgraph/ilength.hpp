#ifndef ESGRAPH_ILENGTH_HPP
#define ESGRAPH_ILENGTH_HPP

#include <optional>
#include <vector>

#include "esgraph/word.hpp"

namespace esgraph {

// Simple i-length: the greatest t such that w = w_1...w_t with every piece's
// Whitehead graph over the generators other than a_i free of cut vertices.
// Zero iff the graph of w itself has a cut vertex; the witness partition is
// empty in that case.
struct SimpleResult {
  int value = 0;
  std::vector<Word> pieces;
};

SimpleResult simple_ilength(const Word& w, int index);

// One factor v^u = u^-1 v u of a decomposition.
struct DecompositionFactor {
  Word base;        // v
  Word conjugator;  // u
};

struct Decomposition {
  std::vector<DecompositionFactor> factors;
  long associated = 0;  // (l-1) + sum of simple i-lengths of the bases
};

// Freely reduced product of the factors.
Word recompose(const Decomposition& d, Rank rank);

// A canceling pair: two disjoint mutually inverse subword occurrences,
// [first_begin, first_end) before [second_begin, second_end).
struct IntervalPair {
  int first_begin, first_end, second_begin, second_end;
};

struct CancelingFamily {
  std::vector<IntervalPair> pairs;
};

struct CrConfig {
  long upper_insert_budget = -1;  // total inserted length for cr_upper; -1 = 2|w|
  int lower_cap = 24;             // full canceling-family enumeration up to here
  int oracle_cap = 8;             // cr_oracle refuses longer words
  int upper_search_cap = 64;      // rotation/split search only below this length
};

struct UpperBound {
  long value = 0;
  Decomposition witness;
};

struct LowerBound {
  long value = 0;
  bool certified = false;
  // Ten times the exact minimized bound, before clamping: the minimum over
  // nested families of max(5|F| - 10, 2|w - F|^simple - 30).  Meaningful only
  // when certified.
  long raw_times_10 = 0;
  CancelingFamily family;
};

// Certified interval for the conjugate-reduced i-length.
struct CrBound {
  long lower = 0;
  long upper = 0;
  bool lower_certified = false;
  std::optional<Decomposition> upper_witness;
  std::optional<CancelingFamily> family_witness;
};

// Minimum over the trivial decomposition, cyclic-conjugate factors, and
// multi-factor splits; all candidates stay within the inserted-length budget.
UpperBound cr_upper(const Word& w, int index, const CrConfig& cfg = {});

// Evaluates the nested-canceling-family minimization.  Exact (certified) when
// the word is positive or short enough for complete enumeration; otherwise
// returns 0 uncertified.
LowerBound cr_lower(const Word& w, int index, const CrConfig& cfg = {});

// Exhaustive minimum over decompositions of total unreduced length at most
// 3|w|.  An upper-bound-style oracle: complete within the budget only.
// Throws std::length_error above the cap.
long cr_oracle(const Word& w, int index, const CrConfig& cfg = {});

CrBound cr_bounds(const Word& w, int index, const CrConfig& cfg = {});

// The alignment data of a word set: the forced conjugation words wL, wR, wC,
// the automorphisms alpha' and alpha they define, and the i-chunks of the
// alpha images.
struct Alignment {
  int rank = 0;
  int index = 0;
  Word wL, wR, wC;
  Word alpha_prime_image;            // alpha'(a_i)
  Word alpha_image;                  // alpha(a_i)
  std::vector<Word> reduced_inputs;  // inputs after cyclic reduction
  std::vector<Word> images;          // alpha applied to the reduced inputs
  std::vector<std::vector<Word>> chunks;  // i-chunks per image

  Alignment() : wL(Rank(2)), wR(Rank(2)), wC(Rank(2)), alpha_prime_image(Rank(2)), alpha_image(Rank(2)) {}

  std::vector<Word> alpha_images_of_generators() const;
};

Alignment align_words(const std::vector<Word>& ys, int index);

struct FullIlength {
  CrBound bound;        // chunk part plus tail part, as an interval
  CrBound chunk_bound;  // k: max over i-chunks of their cr interval
  CrBound tail_bound;   // |wR wL|^cr interval
  Word tail;            // wR wL
  Alignment alignment;

  FullIlength() : tail(Rank(2)) {}
};

FullIlength full_ilength(const std::vector<Word>& ys, int index, const CrConfig& cfg = {});

}  // namespace esgraph

#endif
