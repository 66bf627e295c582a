#ifndef ESGRAPH_ORACLES_HPP
#define ESGRAPH_ORACLES_HPP

#include "esgraph/ilength.hpp"
#include "esgraph/nielsen.hpp"
#include "esgraph/word.hpp"

namespace esgraph {

// Caps for the brute-force computations; they enumerate without pruning and
// refuse anything larger.
struct OracleBudget {
  int max_word_length = 14;
  int max_family_word_length = 16;
  int max_moves = 6;
};

// Exhaustive maximum over all 2^(|w|-1) partitions.
int brute_simple(const Word& w, int index, const OracleBudget& budget = {});

struct FamiliesResult {
  long raw_times_10 = 0;  // min over all nested families, scaled as in cr_lower
  long value = 0;         // clamped integer bound
  CancelingFamily family;
};

// Complete enumeration of the nested canceling-pair families.
FamiliesResult brute_families(const Word& w, int index, const OracleBudget& budget = {});

// Iterative deepening over all block counts, boundaries and side sequences.
int brute_index_changes(const TransformationWord& m, const OracleBudget& budget = {});

}  // namespace esgraph

#endif
