#ifndef ESGRAPH_QUASIFLAT_HPP
#define ESGRAPH_QUASIFLAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "esgraph/es_graph.hpp"
#include "esgraph/word.hpp"

namespace esgraph {

using LatticePoint = std::vector<long>;

// p_t = a_1^{t+1} a_2^{t+1} ... a_{n-1}^{t+1} a_1^{t+1} a_2^{t+1} a_1^{t+1};
// its Whitehead graph over the generators other than a_n has no cut vertex.
Word p_word(int t, Rank rank);

// Standard basis with a_n replaced by a_n p_1^{k_1} ... p_m^{k_m}, paired
// with the given side (default {n}).
ESVertex psi(const LatticePoint& p, Rank rank,
             std::optional<IndexSet> side = std::nullopt);

// Freely reduced difference word
// p_m^{-k_m} ... p_1^{-k_1} p_1^{l_1} ... p_m^{l_m}.
Word omega(const LatticePoint& from, const LatticePoint& to, Rank rank);

struct FlatLower {
  long d = 0;              // lattice distance
  long ilength_lower = 0;  // certified lower end of the full i-length
  bool certified = false;
  long distance_lower = 0;  // max(0, ceil(L/24 - 1))
};

FlatLower flat_lower_bound(const LatticePoint& from, const LatticePoint& to,
                           Rank rank, const CrConfig& cfg = {});

// The explicit edge path between the two lattice vertices: one gadget of
// 2|l_t - k_t| + 1 edges per coordinate change, length at most 2d + m for
// the default side.  Requires rank >= 4.
ESPath flat_upper_path(const LatticePoint& from, const LatticePoint& to, Rank rank,
                       std::optional<IndexSet> side = std::nullopt);

// Structural check that a_1 .. a_{n-1} lie in one factor of every psi
// vertex: the witness that the whole lattice image has a common elliptic
// element.
bool common_elliptic_check(const std::vector<LatticePoint>& points, Rank rank);

// JSON report: {d, ilength_lower, lower_certified, distance_lower,
// path_length, path}.  The path is omitted below rank 4.
std::string flat_report(const LatticePoint& from, const LatticePoint& to, Rank rank,
                        const CrConfig& cfg = {});

}  // namespace esgraph

#endif
