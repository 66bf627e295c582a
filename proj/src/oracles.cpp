#include "esgraph/oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "esgraph/es_graph.hpp"
#include "esgraph/whitehead.hpp"

namespace esgraph {

namespace {

bool subword_cut_vertex_free(const Word& w, int begin, int end, int index) {
  Word piece = subword(w, begin, end);
  WhiteheadGraph g = build_whitehead({piece}, Rank(w.rank()), index, false);
  return !has_cut_vertex(g);
}

}  // namespace

int brute_simple(const Word& w, int index, const OracleBudget& budget) {
  if (static_cast<int>(w.size()) > budget.max_word_length) {
    throw std::length_error("brute_simple cap exceeded");
  }
  if (contains_index(w, index)) {
    throw std::invalid_argument("word contains the excluded generator a_i");
  }
  const int m = static_cast<int>(w.size());
  if (m == 0) return 0;
  std::vector<std::vector<char>> cvf(m, std::vector<char>(m + 1, 0));
  for (int p = 0; p < m; ++p) {
    for (int j = p + 1; j <= m; ++j) {
      cvf[p][j] = subword_cut_vertex_free(w, p, j, index);
    }
  }
  int best = 0;
  const std::uint64_t masks = 1ull << (m - 1);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    int pieces = 0;
    int p = 0;
    bool ok = true;
    for (int j = 1; j <= m && ok; ++j) {
      if (j == m || ((mask >> (j - 1)) & 1)) {
        if (!cvf[p][j]) {
          ok = false;
        } else {
          ++pieces;
          p = j;
        }
      }
    }
    if (ok) best = std::max(best, pieces);
  }
  return best;
}

namespace {

struct FamilyEnumerator {
  const Word& w;
  int index;
  int m;
  std::vector<std::vector<long>> sub_simple;  // via brute partitions
  long best_raw;
  std::vector<IntervalPair> current;
  std::vector<IntervalPair> best_family;

  FamilyEnumerator(const Word& w_, int index_) : w(w_), index(index_), m(w_.size()) {
    OracleBudget wide;
    wide.max_word_length = m;
    sub_simple.assign(m + 1, std::vector<long>(m + 1, 0));
    for (int i = 0; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        sub_simple[i][j] = brute_simple(subword(w, i, j), index, wide);
      }
    }
    best_raw = evaluate();
  }

  bool inverse_content(int a, int b, int c, int d) const {
    if (b - a != d - c) return false;
    for (int t = 0; t < b - a; ++t) {
      if (w.at(a + t) != -w.at(d - 1 - t)) return false;
    }
    return true;
  }

  bool disjoint_ok(const IntervalPair& q) const {
    for (const IntervalPair& p : current) {
      // pairwise disjoint intervals
      auto overlap = [](int a, int b, int c, int d) { return a < d && c < b; };
      if (overlap(p.first_begin, p.first_end, q.first_begin, q.first_end) ||
          overlap(p.first_begin, p.first_end, q.second_begin, q.second_end) ||
          overlap(p.second_begin, p.second_end, q.first_begin, q.first_end) ||
          overlap(p.second_begin, p.second_end, q.second_begin, q.second_end)) {
        return false;
      }
      // nesting: q sits between p's intervals iff both its halves do,
      // and symmetrically.
      auto between = [](int a, int b, int gap_begin, int gap_end) {
        return a >= gap_begin && b <= gap_end;
      };
      bool q1_in = between(q.first_begin, q.first_end, p.first_end, p.second_begin);
      bool q2_in = between(q.second_begin, q.second_end, p.first_end, p.second_begin);
      if (q1_in != q2_in) return false;
      bool p1_in = between(p.first_begin, p.first_end, q.first_end, q.second_begin);
      bool p2_in = between(p.second_begin, p.second_end, q.first_end, q.second_begin);
      if (p1_in != p2_in) return false;
    }
    return true;
  }

  long evaluate() const {
    // residual maximal runs = positions not covered by any interval
    std::vector<char> covered(m, 0);
    for (const IntervalPair& p : current) {
      for (int t = p.first_begin; t < p.first_end; ++t) covered[t] = 1;
      for (int t = p.second_begin; t < p.second_end; ++t) covered[t] = 1;
    }
    long sum = 0;
    int t = 0;
    while (t < m) {
      if (covered[t]) {
        ++t;
        continue;
      }
      int s = t;
      while (t < m && !covered[t]) ++t;
      sum += sub_simple[s][t];
    }
    long f = static_cast<long>(current.size());
    return std::max(5 * f - 10, 2 * (f + sum) - 30);
  }

  // Enumerate pairs in lexicographic order of (first_begin, first_end,
  // second_begin) to visit every family exactly once.
  void run(int min_first_begin) {
    for (int a = min_first_begin; a < m; ++a) {
      for (int b = a + 1; b <= m; ++b) {
        for (int c = b; c < m; ++c) {
          int d = c + (b - a);
          if (d > m) break;
          IntervalPair q{a, b, c, d};
          if (!inverse_content(a, b, c, d)) continue;
          if (!disjoint_ok(q)) continue;
          current.push_back(q);
          long raw = evaluate();
          if (raw < best_raw) {
            best_raw = raw;
            best_family = current;
          }
          run(a);  // further pairs in canonical order
          current.pop_back();
        }
      }
    }
  }
};

}  // namespace

FamiliesResult brute_families(const Word& w, int index, const OracleBudget& budget) {
  if (static_cast<int>(w.size()) > budget.max_family_word_length) {
    throw std::length_error("brute_families cap exceeded");
  }
  if (contains_index(w, index)) {
    throw std::invalid_argument("word contains the excluded generator a_i");
  }
  FamiliesResult out;
  if (w.empty()) {
    out.raw_times_10 = -10;
    out.value = 0;
    return out;
  }
  FamilyEnumerator e(w, index);
  e.run(0);
  out.raw_times_10 = e.best_raw;
  out.value = e.best_raw <= 0 ? 0 : (e.best_raw + 9) / 10;
  out.family.pairs = e.best_family;
  return out;
}

namespace {

// Does some assignment of sides to the k+1 blocks delimited by `cuts` make
// every block side-preserving with compatible neighbors?
bool blocks_feasible(const TransformationWord& m, const std::vector<int>& cuts,
                     std::size_t at, int prev_side_bits) {
  const int n = m.rank;
  const std::uint32_t full = (1u << n) - 1;
  if (at + 1 >= cuts.size()) return true;
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    IndexSet side(n, bits);
    if (prev_side_bits != 0 &&
        !compatible(IndexSet(n, static_cast<std::uint32_t>(prev_side_bits)), side)) {
      continue;
    }
    bool ok = true;
    for (int pos = cuts[at]; pos < cuts[at + 1] && ok; ++pos) {
      ok = is_S_preserving(m.moves[pos], side);
    }
    if (ok && blocks_feasible(m, cuts, at + 1, static_cast<int>(bits))) return true;
  }
  return false;
}

bool cuts_search(const TransformationWord& m, std::vector<int>& cuts, int remaining) {
  const int L = static_cast<int>(m.moves.size());
  if (remaining == 0) {
    cuts.push_back(L);
    bool ok = blocks_feasible(m, cuts, 0, 0);
    cuts.pop_back();
    return ok;
  }
  int last = cuts.back();
  for (int c = last; c <= L; ++c) {
    cuts.push_back(c);
    if (cuts_search(m, cuts, remaining - 1)) {
      cuts.pop_back();
      return true;
    }
    cuts.pop_back();
  }
  return false;
}

}  // namespace

int brute_index_changes(const TransformationWord& m, const OracleBudget& budget) {
  if (static_cast<int>(m.moves.size()) > budget.max_moves) {
    throw std::length_error("brute_index_changes cap exceeded");
  }
  if (m.rank < 3 || m.rank > 8) {
    throw std::invalid_argument("brute_index_changes needs 3 <= rank <= 8");
  }
  const int L = static_cast<int>(m.moves.size());
  for (int k = 0;; ++k) {
    // k+1 blocks: k interior cut positions (nondecreasing, possibly empty
    // blocks).
    std::vector<int> cuts{0};
    if (cuts_search(m, cuts, k)) return k;
    if (k > 2 * L + 2) throw std::logic_error("index-change search failed to terminate");
  }
}

}  // namespace esgraph
