#include "esgraph/ilength.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

#include "esgraph/whitehead.hpp"

namespace esgraph {

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;

void validate_input(const Word& w, int index) {
  if (index < 1 || index > w.rank()) {
    throw std::invalid_argument("index out of rank range");
  }
  if (contains_index(w, index)) {
    throw std::invalid_argument("word contains the excluded generator a_i");
  }
}

// Fixed vertex set of the Whitehead graphs used here: all signed generators
// except a_i^{+-1}, so 2(rank-1) vertices.  Fits in a 64-bit mask up to rank
// 33; larger ranks take the generic path through whitehead.cpp.
struct PieceGraph {
  int rank, index, nv;
  std::array<std::uint64_t, 64> adj{};

  PieceGraph(int rank_, int index_) : rank(rank_), index(index_), nv(2 * (rank_ - 1)) {}

  int vid(Letter l) const {
    int k = letter_index(l);
    int g = k < index ? k - 1 : k - 2;
    return 2 * g + (l < 0 ? 1 : 0);
  }

  void clear() { std::fill(adj.begin(), adj.begin() + nv, 0); }

  void add_pair(Letter c1, Letter c2) {
    int u = vid(c1), v = vid(-c2);
    adj[u] |= 1ull << v;
    adj[v] |= 1ull << u;
  }

  std::uint64_t reach(int start, std::uint64_t allowed) const {
    std::uint64_t seen = 1ull << start;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int u = __builtin_ctzll(f);
        f &= f - 1;
        next |= adj[u];
      }
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  // Connected over the whole vertex set and free of articulation points.
  bool cut_vertex_free() const {
    std::uint64_t full = nv == 64 ? ~0ull : (1ull << nv) - 1;
    if (reach(0, full) != full) return false;
    for (int v = 0; v < nv; ++v) {
      std::uint64_t rest = full & ~(1ull << v);
      int start = __builtin_ctzll(rest);
      if (reach(start, rest) != rest) return false;
    }
    return true;
  }
};

bool piece_cvf_generic(const Word& w, std::size_t begin, std::size_t end, int index) {
  Word piece = subword(w, begin, end);
  WhiteheadGraph g = build_whitehead({piece}, Rank(w.rank()), index, false);
  return !has_cut_vertex(g);
}

// Whether the Whitehead graph of w[begin..end) over the generators other than
// a_index is cut-vertex-free.
bool piece_cvf(const Word& w, std::size_t begin, std::size_t end, int index) {
  int nv = 2 * (w.rank() - 1);
  if (nv > 64) return piece_cvf_generic(w, begin, end, index);
  PieceGraph g(w.rank(), index);
  for (std::size_t t = begin; t + 1 < end; ++t) g.add_pair(w.at(t), w.at(t + 1));
  return g.cut_vertex_free();
}

long ceil_div10(long raw) { return raw <= 0 ? 0 : (raw + 9) / 10; }

}  // namespace

SimpleResult simple_ilength(const Word& w, int index) {
  validate_input(w, index);
  const std::size_t m = w.size();
  if (m == 0) return {};

  // thr[j]: largest p such that the piece w[p..j) is cut-vertex-free, or -1.
  // Cut-vertex-freeness is monotone under extending a piece (more edges on a
  // fixed loop-free vertex set), so thr is nondecreasing in j and the valid
  // p for a given j form the down-set [0, thr[j]].
  std::vector<long> thr(m + 1, -1);
  std::vector<long> best(m + 1, -kInf), prefmax(m + 1, -kInf);
  std::vector<long> prefarg(m + 1, -1), bp(m + 1, -1);
  best[0] = 0;
  prefmax[0] = 0;
  prefarg[0] = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    long c = thr[j - 1];
    while (c + 1 < static_cast<long>(j) && piece_cvf(w, c + 1, j, index)) ++c;
    thr[j] = c;
    if (c >= 0 && prefmax[c] > -kInf) {
      best[j] = prefmax[c] + 1;
      bp[j] = prefarg[c];
    }
    prefmax[j] = prefmax[j - 1];
    prefarg[j] = prefarg[j - 1];
    if (best[j] > prefmax[j]) {
      prefmax[j] = best[j];
      prefarg[j] = static_cast<long>(j);
    }
  }

  SimpleResult out;
  if (best[m] <= 0) {
    out.value = 0;
    return out;
  }
  out.value = static_cast<int>(best[m]);
  std::vector<std::pair<long, long>> ranges;
  long j = static_cast<long>(m);
  while (j > 0) {
    long p = bp[j];
    ranges.emplace_back(p, j);
    j = p;
  }
  std::reverse(ranges.begin(), ranges.end());
  for (auto [p, q] : ranges) out.pieces.push_back(subword(w, p, q));
  return out;
}

Word recompose(const Decomposition& d, Rank rank) {
  Word out{rank};
  for (const auto& f : d.factors) {
    out = concat(out, concat(inverse(f.conjugator), concat(f.base, f.conjugator)));
  }
  return out;
}

namespace {

// Conjugating factor for the rotation of a cyclic core: core = T S with
// |T| = r, v = S T and z = conj^-1 (T S) conj = v^u for u = S conj or
// u = T^-1 conj, whichever is shorter.
Word rotation_conjugator(const Word& core, std::size_t r, const Word& conj) {
  const std::size_t len = core.size();
  if (r == 0) return conj;
  if (r <= len - r) {
    return concat(inverse(subword(core, 0, r)), conj);
  }
  return concat(subword(core, r, len), conj);
}

struct RotationPick {
  int value;        // simple i-length of the best rotation
  std::size_t rot;  // its offset
};

// Minimum simple i-length over the cyclic conjugates of the core, with early
// exit once a cut-vertexed rotation (value 0) appears.
RotationPick best_rotation(const Word& core, int index) {
  if (core.empty()) return {0, 0};
  RotationPick best{std::numeric_limits<int>::max(), 0};
  for (std::size_t r = 0; r < core.size(); ++r) {
    Word v = rotate(core, r);
    if (!piece_cvf(v, 0, v.size(), index)) return {0, r};
    int val = simple_ilength(v, index).value;
    if (val < best.value) best = {val, r};
  }
  return best;
}

}  // namespace

UpperBound cr_upper(const Word& w, int index, const CrConfig& cfg) {
  validate_input(w, index);
  const Rank rank{w.rank()};
  const long m = static_cast<long>(w.size());
  const long budget = cfg.upper_insert_budget < 0 ? 2 * m : cfg.upper_insert_budget;

  SimpleResult triv = simple_ilength(w, index);
  UpperBound best;
  best.value = triv.value;
  best.witness.factors = {DecompositionFactor{w, Word(rank)}};
  best.witness.associated = triv.value;

  if (m == 0 || m > static_cast<long>(cfg.upper_search_cap)) return best;

  // Split into consecutive segments, each replaced by the cheapest cyclic
  // conjugate of its core.  The inserted length of any such decomposition is
  // at most 2|w|.
  struct SegInfo {
    int value;
    std::size_t rot;
  };
  std::vector<std::vector<SegInfo>> seg(m, std::vector<SegInfo>(m + 1, SegInfo{0, 0}));
  std::vector<std::vector<CyclicReduction>> segcyc(m);
  for (long p = 0; p < m; ++p) {
    segcyc[p].reserve(m - p);
    for (long j = p + 1; j <= m; ++j) {
      CyclicReduction cr = cyclic_reduce(subword(w, p, j));
      RotationPick pick = best_rotation(cr.core, index);
      seg[p][j] = {pick.value, pick.rot};
      segcyc[p].push_back(std::move(cr));
    }
  }

  std::vector<long> dp(m + 1, kInf);
  std::vector<long> from(m + 1, -1);
  dp[0] = 0;
  for (long j = 1; j <= m; ++j) {
    for (long p = 0; p < j; ++p) {
      if (dp[p] == kInf) continue;
      long cand = dp[p] + 1 + seg[p][j].value;
      if (cand < dp[j]) {
        dp[j] = cand;
        from[j] = p;
      }
    }
  }

  if (dp[m] - 1 < best.value) {
    Decomposition d;
    std::vector<std::pair<long, long>> ranges;
    for (long j = m; j > 0; j = from[j]) ranges.emplace_back(from[j], j);
    std::reverse(ranges.begin(), ranges.end());
    long inserted = 0;
    for (auto [p, j] : ranges) {
      const CyclicReduction& cyc = segcyc[p][j - p - 1];
      std::size_t r = seg[p][j].rot;
      Word v = rotate(cyc.core, r);
      Word u = rotation_conjugator(cyc.core, r, cyc.conjugator);
      inserted += static_cast<long>(v.size() + 2 * u.size()) - (j - p);
      d.factors.push_back({v, u});
    }
    d.associated = dp[m] - 1;
    if (inserted <= budget) {
      best.value = d.associated;
      best.witness = std::move(d);
    }
  }
  return best;
}

namespace {

// ---- canceling-family machinery ------------------------------------------

struct FamilyContext {
  const Word& w;
  int index;
  int m;
  std::vector<std::vector<long>> sub_simple;  // [i][j]
  std::vector<std::vector<int>> match;        // match[p][q]: w[p..p+L) = inv(w[q-L..q))

  explicit FamilyContext(const Word& w_, int index_) : w(w_), index(index_), m(w_.size()) {
    sub_simple.assign(m + 1, std::vector<long>(m + 1, 0));
    for (int i = 0; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        sub_simple[i][j] = simple_ilength(subword(w, i, j), index).value;
      }
    }
    match.assign(m + 1, std::vector<int>(m + 1, 0));
    for (int span = 2; span <= m; ++span) {
      for (int p = 0; p + span <= m; ++p) {
        int q = p + span;
        if (w.at(p) == -w.at(q - 1)) {
          match[p][q] = 1 + (span >= 4 ? match[p + 1][q - 1] : 0);
        }
      }
    }
  }
};

struct RegionChoice {
  int p = -1, L = 0, p2 = -1, f1 = 0;  // p == -1: no pairs in this region
};

struct RegionTable {
  std::vector<long> vals;            // vals[f] = min residual simple sum, kInf if none
  std::vector<RegionChoice> choice;  // realizing transition per f
};

struct FamilyDP {
  FamilyContext& ctx;
  int fcap;
  std::map<std::pair<int, int>, RegionTable> memo;

  FamilyDP(FamilyContext& ctx_, int fcap_) : ctx(ctx_), fcap(fcap_) {}

  const RegionTable& region(int i, int j) {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    RegionTable t;
    t.vals.assign(fcap + 1, kInf);
    t.choice.assign(fcap + 1, RegionChoice{});
    t.vals[0] = ctx.sub_simple[i][j];
    // Enumerate the pair whose first interval starts leftmost; everything
    // else lives either strictly between its intervals or strictly after.
    for (int p = i; p < j; ++p) {
      for (int q2 = p + 2; q2 <= j; ++q2) {
        int lmax = std::min(ctx.match[p][q2], (q2 - p) / 2);
        for (int L = 1; L <= lmax; ++L) {
          int p2 = q2 - L;
          long lead = ctx.sub_simple[i][p];
          const RegionTable& gap = region(p + L, p2);
          const RegionTable& right = region(q2, j);
          for (int f1 = 0; f1 <= fcap - 1; ++f1) {
            if (gap.vals[f1] >= kInf) continue;
            for (int f2 = 0; f1 + f2 + 1 <= fcap; ++f2) {
              if (right.vals[f2] >= kInf) continue;
              int f = f1 + f2 + 1;
              long cand = lead + gap.vals[f1] + right.vals[f2];
              if (cand < t.vals[f]) {
                t.vals[f] = cand;
                t.choice[f] = {p, L, p2, f1};
              }
            }
          }
        }
      }
    }
    return memo.emplace(key, std::move(t)).first->second;
  }

  void collect(int i, int j, int f, std::vector<IntervalPair>& out) {
    if (f == 0) return;
    const RegionTable& t = region(i, j);
    const RegionChoice& c = t.choice[f];
    assert(c.p >= 0);
    out.push_back({c.p, c.p + c.L, c.p2, c.p2 + c.L});
    collect(c.p + c.L, c.p2, c.f1, out);
    collect(c.p2 + c.L, j, f - 1 - c.f1, out);
  }
};

long scaled_family_value(long f, long residual_sum) {
  return std::max(5 * f - 10, 2 * (f + residual_sum) - 30);
}

}  // namespace

LowerBound cr_lower(const Word& w, int index, const CrConfig& cfg) {
  validate_input(w, index);
  LowerBound out;
  const int m = static_cast<int>(w.size());

  long s = simple_ilength(w, index).value;
  long empty_raw = scaled_family_value(0, s);

  if (is_positive(w)) {
    // The only nested family of a positive word is the empty one.
    out.raw_times_10 = empty_raw;
    out.value = ceil_div10(empty_raw);
    out.certified = true;
    return out;
  }
  if (m > cfg.lower_cap) {
    out.value = 0;
    out.certified = false;
    return out;
  }

  // A family with f pairs scores at least 5f - 10, so only f below this
  // threshold can undercut the empty family.
  int fcap = static_cast<int>((empty_raw + 9) / 5);
  if (empty_raw + 9 < 0) fcap = -1;
  fcap = std::min(fcap, m / 2);

  long best_raw = empty_raw;
  int best_f = 0;
  if (fcap >= 0) {
    FamilyContext ctx(w, index);
    FamilyDP dp(ctx, fcap);
    const RegionTable& top = dp.region(0, m);
    for (int f = 1; f <= fcap; ++f) {
      if (top.vals[f] >= kInf) continue;
      long raw = scaled_family_value(f, top.vals[f]);
      if (raw < best_raw) {
        best_raw = raw;
        best_f = f;
      }
    }
    if (best_f > 0) dp.collect(0, m, best_f, out.family.pairs);
  }

  out.raw_times_10 = best_raw;
  out.value = ceil_div10(best_raw);
  out.certified = true;
  return out;
}

namespace {

// ---- budget-bounded exhaustive oracle -------------------------------------

struct RotationOption {
  long cost;  // extra unreduced length beyond |z|
  int value;  // simple i-length of that rotation
};

struct OracleSearch {
  const Word& w;
  int index;
  Rank rank;
  long m, B;
  long best;
  std::map<std::vector<Letter>, std::vector<RotationOption>> rot_cache;

  OracleSearch(const Word& w_, int index_)
      : w(w_), index(index_), rank(w_.rank()), m(w_.size()), B(3 * w_.size()), best(kInf) {}

  // Pareto set (increasing cost, strictly decreasing value) of the rotation
  // choices for a factor equal to z.
  const std::vector<RotationOption>& rotations(const Word& z) {
    auto it = rot_cache.find(z.letters());
    if (it != rot_cache.end()) return it->second;
    CyclicReduction cyc = cyclic_reduce(z);
    std::vector<RotationOption> all;
    const long len = static_cast<long>(cyc.core.size());
    for (long r = 0; r < std::max(len, 1l); ++r) {
      Word v = len ? rotate(cyc.core, r) : cyc.core;
      long cost = 2 * std::min(r, len - r);
      int val = piece_cvf(v, 0, v.size(), index) ? simple_ilength(v, index).value : 0;
      all.push_back({cost, val});
      if (val == 0 && cost == 0) break;
    }
    std::sort(all.begin(), all.end(),
              [](const RotationOption& a, const RotationOption& b) {
                return a.cost != b.cost ? a.cost < b.cost : a.value < b.value;
              });
    std::vector<RotationOption> pareto;
    int seen_best = std::numeric_limits<int>::max();
    for (const RotationOption& o : all) {
      if (o.value < seen_best) {
        pareto.push_back(o);
        seen_best = o.value;
      }
    }
    return rot_cache.emplace(z.letters(), std::move(pareto)).first->second;
  }

  // Phase 1: every cut of w into consecutive segments (2^(m-1) masks), each
  // segment conjugated to its cheapest cyclic rotation.  Any rotation choice
  // stays within the 3|w| budget here.
  void plain_splits() {
    if (m == 0) return;
    std::vector<std::vector<int>> segval(m, std::vector<int>(m + 1, 0));
    for (long p = 0; p < m; ++p) {
      for (long j = p + 1; j <= m; ++j) {
        segval[p][j] = best_rotation(cyclic_reduce(subword(w, p, j)).core, index).value;
      }
    }
    const std::uint64_t masks = 1ull << (m - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      long total = -1;
      long p = 0;
      for (long j = 1; j <= m; ++j) {
        if (j == m || (mask >> (j - 1)) & 1) {
          total += 1 + segval[p][j];
          p = j;
          if (total >= best) break;
        }
      }
      if (total < best) best = total;
    }
  }

  // Phase 2: factors that insert canceling material at the junctions.  A
  // state is the freely reduced prefix product written as w[0..c) * s with
  // c maximal; each step appends one more factor.
  void dfs(long c, std::vector<Letter>& s, long spent, long partial) {
    for (long c2 = 0; c2 <= m; ++c2) {
      // z0 = red(s^-1 * w[c..c2))
      std::vector<Letter> z0;
      for (auto itr = s.rbegin(); itr != s.rend(); ++itr) z0.push_back(-*itr);
      auto push = [](std::vector<Letter>& v, Letter x) {
        if (!v.empty() && v.back() == -x) {
          v.pop_back();
        } else {
          v.push_back(x);
        }
      };
      if (c2 >= c) {
        for (long t = c; t < c2; ++t) push(z0, w.at(t));
      } else {
        for (long t = c - 1; t >= c2; --t) push(z0, -w.at(t));
      }
      std::vector<Letter> s2;
      extend(c2, s2, z0, c, s, spent, partial);
    }
  }

  void try_candidate(long c2, std::vector<Letter>& s2, std::vector<Letter>& z,
                     long spent, long partial) {
    if (z.empty()) return;
    const bool goal = (c2 == m && s2.empty());
    const long future = goal ? 0 : static_cast<long>(s2.size()) + (m - c2);
    const long zlen = static_cast<long>(z.size());
    if (spent + zlen + future > B) return;
    Word zword = Word::from_letters(rank, z);
    for (const RotationOption& o : rotations(zword)) {
      if (spent + zlen + o.cost + future > B) continue;
      long partial2 = partial + 1 + o.value;
      if (goal) {
        if (partial2 - 1 < best) best = partial2 - 1;
      } else if (partial2 < best) {
        std::vector<Letter> s2copy = s2;
        dfs(c2, s2copy, spent + zlen + o.cost, partial2);
      }
    }
  }

  // Depth-first enumeration of the inserted tail s2 (letters avoiding a_i),
  // with z maintained incrementally.
  void extend(long c2, std::vector<Letter>& s2, std::vector<Letter>& z,
              long c, std::vector<Letter>& s, long spent, long partial) {
    try_candidate(c2, s2, z, spent, partial);
    const long base = static_cast<long>(s.size()) + std::abs(c2 - c);
    const long next_len = static_cast<long>(s2.size()) + 1;
    // A factor of the extended state has length at least next_len - base and
    // still owes |s2|+1 + (m - c2) letters of future factors.
    if (spent + std::max(1l, next_len - base) + next_len + (m - c2) > B) return;
    for (int k = 1; k <= rank.n; ++k) {
      if (k == index) continue;
      for (int sgn : {1, -1}) {
        Letter x = sgn * k;
        if (!s2.empty() && s2.back() == -x) continue;
        if (s2.empty() && c2 < m && x == w.at(c2)) continue;  // non-canonical
        bool popped = false;
        Letter saved = 0;
        if (!z.empty() && z.back() == -x) {
          saved = z.back();
          z.pop_back();
          popped = true;
        } else {
          z.push_back(x);
        }
        s2.push_back(x);
        extend(c2, s2, z, c, s, spent, partial);
        s2.pop_back();
        if (popped) {
          z.push_back(saved);
        } else {
          z.pop_back();
        }
      }
    }
  }
};

}  // namespace

long cr_oracle(const Word& w, int index, const CrConfig& cfg) {
  validate_input(w, index);
  if (static_cast<int>(w.size()) > cfg.oracle_cap) {
    throw std::length_error("cr_oracle cap exceeded");
  }
  if (w.empty()) return 0;
  OracleSearch search(w, index);
  search.plain_splits();
  if (search.best > 0) {
    std::vector<Letter> s;
    search.dfs(0, s, 0, 0);
  }
  return search.best;
}

CrBound cr_bounds(const Word& w, int index, const CrConfig& cfg) {
  CrBound out;
  UpperBound up = cr_upper(w, index, cfg);
  LowerBound lo = cr_lower(w, index, cfg);
  out.lower = lo.value;
  out.upper = up.value;
  out.lower_certified = lo.certified;
  out.upper_witness = up.witness;
  if (lo.certified) out.family_witness = lo.family;
  return out;
}

// ---- alignment -------------------------------------------------------------

namespace {

// One predecessor/follower constraint: the k-th candidate letter read from a
// cyclic word, or 0 once the walk hits a letter of the excluded index.
struct Stream {
  const Word* word;
  long origin;
  long step;      // +1 or -1
  bool inverted;  // report the inverse of the letter read

  Letter get(long k, int index) const {
    const long len = static_cast<long>(word->size());
    long pos = ((origin + step * k) % len + len) % len;
    Letter l = word->at(pos);
    if (letter_index(l) == index) return 0;
    return inverted ? -l : l;
  }
};

// Longest k such that all streams agree on letters 1..k.
long common_prefix(const std::vector<Stream>& streams, int index, long cap) {
  if (streams.empty()) return 0;
  long k = 0;
  while (k < cap) {
    Letter l = streams.front().get(k + 1, index);
    if (l == 0) break;
    bool ok = true;
    for (const Stream& st : streams) {
      if (st.get(k + 1, index) != l) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    ++k;
  }
  return k;
}

// Maximal cyclic runs of a_index^{+-1} in a cyclically reduced word, as
// (start, length) with start taken modulo the length.  A word consisting of
// such letters only is one full run.
std::vector<std::pair<long, long>> index_runs(const Word& core, int index) {
  const long len = static_cast<long>(core.size());
  std::vector<std::pair<long, long>> runs;
  if (len == 0) return runs;
  long anchor = 0;
  while (anchor < len && letter_index(core.at(anchor)) == index) ++anchor;
  if (anchor == len) {
    runs.emplace_back(0, len);
    return runs;
  }
  long t = 0;
  while (t < len) {
    long pos = (anchor + t) % len;
    if (letter_index(core.at(pos)) != index) {
      ++t;
      continue;
    }
    long s = t;
    while (t < len && letter_index(core.at((anchor + t) % len)) == index) ++t;
    runs.emplace_back((anchor + s) % len, t - s);
  }
  return runs;
}

std::vector<Word> identity_images(Rank rank) {
  std::vector<Word> images;
  for (int k = 1; k <= rank.n; ++k) {
    images.push_back(Word::from_letters(rank, {k}));
  }
  return images;
}

}  // namespace

std::vector<Word> Alignment::alpha_images_of_generators() const {
  Rank r{rank};
  std::vector<Word> images = identity_images(r);
  images[index - 1] = alpha_image;
  return images;
}

Alignment align_words(const std::vector<Word>& ys, int index) {
  if (ys.empty()) throw std::invalid_argument("alignment needs at least one word");
  const int rank_n = ys.front().rank();
  const Rank rank{rank_n};
  if (index < 1 || index > rank_n) throw std::invalid_argument("index out of rank range");

  Alignment out;
  out.rank = rank_n;
  out.index = index;
  for (const Word& y : ys) {
    if (y.rank() != rank_n) throw std::invalid_argument("rank mismatch in alignment");
    out.reduced_inputs.push_back(cyclic_reduce(y).core);
  }

  bool any_occurrence = false;
  for (const Word& z : out.reduced_inputs) {
    if (contains_index(z, index)) any_occurrence = true;
  }
  if (!any_occurrence) {
    throw std::invalid_argument("no word contains the alignment generator");
  }

  // wL: read backward from every a_i and forward-inverted from every a_i^-1.
  std::vector<Stream> wl_streams;
  long cap = kInf;
  for (const Word& z : out.reduced_inputs) {
    if (!contains_index(z, index)) continue;
    cap = std::min(cap, static_cast<long>(z.size()));
    for (long p = 0; p < static_cast<long>(z.size()); ++p) {
      Letter l = z.at(p);
      if (letter_index(l) != index) continue;
      if (l > 0) {
        wl_streams.push_back({&z, p, -1, false});
      } else {
        wl_streams.push_back({&z, p, +1, true});
      }
    }
  }
  long wl_len = common_prefix(wl_streams, index, cap);
  {
    std::vector<Letter> rev;
    for (long k = 1; k <= wl_len; ++k) rev.push_back(wl_streams.front().get(k, index));
    std::reverse(rev.begin(), rev.end());
    out.wL = Word::from_letters(rank, rev);
  }

  // Positions covered by the wL occurrences, per word.
  std::vector<std::vector<char>> covered;
  for (const Word& z : out.reduced_inputs) {
    covered.emplace_back(z.size(), 0);
  }
  for (std::size_t wi = 0; wi < out.reduced_inputs.size(); ++wi) {
    const Word& z = out.reduced_inputs[wi];
    const long len = static_cast<long>(z.size());
    if (!contains_index(z, index)) continue;
    for (long p = 0; p < len; ++p) {
      Letter l = z.at(p);
      if (letter_index(l) != index) continue;
      for (long k = 1; k <= wl_len; ++k) {
        long pos = l > 0 ? (p - k % len + len) % len : (p + k) % len;
        covered[wi][pos] = 1;
      }
    }
  }

  // wR: forward from a_i, backward-inverted from a_i^-1, with the extra
  // requirement that no wR window touches a wL window.
  std::vector<Stream> wr_streams;
  struct WindowWalk {
    std::size_t wi;
    long origin;
    long step;
  };
  std::vector<WindowWalk> wr_windows;
  for (std::size_t wi = 0; wi < out.reduced_inputs.size(); ++wi) {
    const Word& z = out.reduced_inputs[wi];
    if (!contains_index(z, index)) continue;
    for (long p = 0; p < static_cast<long>(z.size()); ++p) {
      Letter l = z.at(p);
      if (letter_index(l) != index) continue;
      if (l > 0) {
        wr_streams.push_back({&z, p, +1, false});
        wr_windows.push_back({wi, p, +1});
      } else {
        wr_streams.push_back({&z, p, -1, true});
        wr_windows.push_back({wi, p, -1});
      }
    }
  }
  long wr_len = 0;
  while (wr_len < cap) {
    long k = wr_len + 1;
    Letter l = wr_streams.front().get(k, index);
    if (l == 0) break;
    bool ok = true;
    for (const Stream& st : wr_streams) {
      if (st.get(k, index) != l) {
        ok = false;
        break;
      }
    }
    for (const WindowWalk& ww : wr_windows) {
      if (!ok) break;
      const long len = static_cast<long>(out.reduced_inputs[ww.wi].size());
      long pos = ((ww.origin + ww.step * k) % len + len) % len;
      if (covered[ww.wi][pos]) ok = false;
    }
    if (!ok) break;
    ++wr_len;
  }
  {
    std::vector<Letter> letters;
    for (long k = 1; k <= wr_len; ++k) letters.push_back(wr_streams.front().get(k, index));
    out.wR = Word::from_letters(rank, letters);
  }

  // alpha' : a_i -> wL^-1 a_i wR^-1
  Word ai = Word::from_letters(rank, {index});
  out.alpha_prime_image = concat(inverse(out.wL), concat(ai, inverse(out.wR)));
  std::vector<Word> prime_images = identity_images(rank);
  prime_images[index - 1] = out.alpha_prime_image;

  std::vector<Word> prime_cores;
  for (const Word& z : out.reduced_inputs) {
    prime_cores.push_back(cyclic_reduce(substitute(z, prime_images)).core);
  }

  // wC on the cyclic reductions of the alpha' images: a maximal power run
  // that is a whole element constrains nothing; every other run must be
  // cyclically conjugated by wC.
  std::vector<Stream> wc_streams;
  long wc_cap = kInf;
  for (const Word& z : prime_cores) {
    const long len = static_cast<long>(z.size());
    for (auto [s, runlen] : index_runs(z, index)) {
      if (runlen == len) continue;  // occurs by itself
      long e = (s + runlen) % len;
      wc_streams.push_back({&z, (e - 1 + len) % len, +1, false});
      wc_streams.push_back({&z, s, -1, true});
      wc_cap = std::min(wc_cap, (len - runlen) / 2);
    }
  }
  long wc_len = wc_streams.empty() ? 0 : common_prefix(wc_streams, index, wc_cap);
  {
    std::vector<Letter> letters;
    for (long k = 1; k <= wc_len; ++k) letters.push_back(wc_streams.front().get(k, index));
    out.wC = Word::from_letters(rank, letters);
  }

  // alpha : a_i -> wL^-1 wC a_i wC^-1 wR^-1
  out.alpha_image = concat(inverse(out.wL),
                           concat(out.wC, concat(ai, concat(inverse(out.wC), inverse(out.wR)))));
  std::vector<Word> alpha_images = identity_images(rank);
  alpha_images[index - 1] = out.alpha_image;

  for (const Word& z : out.reduced_inputs) {
    Word image = substitute(z, alpha_images);
    out.images.push_back(image);
    Word core = cyclic_reduce(image).core;
    std::vector<Word> chunks;
    const long len = static_cast<long>(core.size());
    if (len > 0) {
      std::vector<std::pair<long, long>> runs = index_runs(core, index);
      if (runs.empty()) {
        chunks.push_back(core);
      } else {
        for (std::size_t t = 0; t < runs.size(); ++t) {
          long seg_begin = (runs[t].first + runs[t].second) % len;
          long seg_end = runs[(t + 1) % runs.size()].first;
          long seg_len = ((seg_end - seg_begin) % len + len) % len;
          if (seg_len == 0) continue;
          std::vector<Letter> letters;
          for (long k = 0; k < seg_len; ++k) letters.push_back(core.at((seg_begin + k) % len));
          chunks.push_back(Word::from_letters(rank, letters));
        }
      }
    }
    out.chunks.push_back(std::move(chunks));
  }
  return out;
}

FullIlength full_ilength(const std::vector<Word>& ys, int index, const CrConfig& cfg) {
  FullIlength out;
  out.alignment = align_words(ys, index);
  const Rank rank{out.alignment.rank};

  out.chunk_bound.lower = 0;
  out.chunk_bound.upper = 0;
  out.chunk_bound.lower_certified = true;
  for (const auto& word_chunks : out.alignment.chunks) {
    for (const Word& chunk : word_chunks) {
      CrBound cb = cr_bounds(chunk, index, cfg);
      if (static_cast<int>(chunk.size()) <= cfg.oracle_cap) {
        long o = cr_oracle(chunk, index, cfg);
        if (o < cb.upper) {
          cb.upper = o;
          cb.upper_witness.reset();
        }
      }
      out.chunk_bound.lower = std::max(out.chunk_bound.lower, cb.lower);
      out.chunk_bound.upper = std::max(out.chunk_bound.upper, cb.upper);
      out.chunk_bound.lower_certified =
          out.chunk_bound.lower_certified && cb.lower_certified;
    }
  }

  out.tail = concat(out.alignment.wR, out.alignment.wL);
  out.tail_bound = cr_bounds(out.tail, index, cfg);

  out.bound.lower = out.chunk_bound.lower + out.tail_bound.lower;
  out.bound.upper = out.chunk_bound.upper + out.tail_bound.upper;
  out.bound.lower_certified =
      out.chunk_bound.lower_certified && out.tail_bound.lower_certified;
  return out;
}

}  // namespace esgraph
