#include "esgraph/es_graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace esgraph {

namespace {

constexpr int kInfInt = std::numeric_limits<int>::max() / 4;

bool proper_subset(std::uint32_t a, std::uint32_t b) {
  return a != b && (a & ~b) == 0;
}

// A side compatible with both, for the two-edge detour between incompatible
// sides.
IndexSet bridge_side_impl(const IndexSet& s, const IndexSet& s2) {
  const std::uint32_t full = s.mask();
  for (std::uint32_t bits = 1; bits < full; ++bits) {
    IndexSet mid(s.n, bits);
    if (compatible(s, mid) && compatible(mid, s2)) return mid;
  }
  throw std::invalid_argument("no bridge side exists");
}

}  // namespace

IndexSet::IndexSet(int n_, std::uint32_t bits_) : n(n_), bits(bits_) {
  if (n < 2 || n > 32) throw std::invalid_argument("index set rank out of range");
  if (bits == 0 || bits == mask()) {
    throw std::invalid_argument("index set must be proper and nonempty");
  }
  if ((bits & ~mask()) != 0) throw std::invalid_argument("index set bits out of range");
}

IndexSet IndexSet::from_indices(int n, const std::vector<int>& indices) {
  std::uint32_t bits = 0;
  for (int k : indices) {
    if (k < 1 || k > n) throw std::invalid_argument("index out of range");
    bits |= 1u << (k - 1);
  }
  return IndexSet(n, bits);
}

std::vector<int> IndexSet::indices() const {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

bool compatible(const IndexSet& s, const IndexSet& s2) {
  if (s.n != s2.n) throw std::invalid_argument("rank mismatch in compatibility check");
  std::uint32_t a = s.bits, ac = s.complement().bits;
  std::uint32_t b = s2.bits, bc = s2.complement().bits;
  return proper_subset(b, a) || proper_subset(b, ac) || proper_subset(bc, a) ||
         proper_subset(bc, ac);
}

bool is_S_preserving(const ElementaryMove& m, const IndexSet& s) {
  if (m.kind == MoveKind::Invert) return true;
  return s.contains(m.i) == s.contains(m.j);
}

MinChanges min_index_changes(const TransformationWord& m) {
  const int n = m.rank;
  if (n < 3) throw std::invalid_argument("index changes need rank >= 3");
  if (n > 16) throw std::invalid_argument("rank above 16 not supported (state space)");
  const std::uint32_t full = (1u << n) - 1;
  const int nsides = static_cast<int>(full) - 1;  // bits run over 1..full-1
  const int L = static_cast<int>(m.moves.size());

  auto side_of = [n](int bits) { return IndexSet(n, static_cast<std::uint32_t>(bits)); };

  // Hop distance between consumption sides.  Any two sides are joined by a
  // chain of at most two compatibilities (a singleton bridge always exists
  // for n >= 3), so longer chains are never optimal.
  std::vector<char> comp_cache(static_cast<std::size_t>(nsides + 2) * (nsides + 2), 2);
  auto comp = [&](int a, int b) -> bool {
    char& c = comp_cache[static_cast<std::size_t>(a) * (nsides + 2) + b];
    if (c == 2) c = compatible(side_of(a), side_of(b)) ? 1 : 0;
    return c == 1;
  };
  auto dist = [&](int a, int b) -> int {
    if (a == b) return 0;
    return comp(a, b) ? 1 : 2;
  };

  MinChanges out;
  if (L == 0) {
    out.k = 0;
    out.decomposition.blocks.push_back({{}, side_of(1)});
    return out;
  }

  // cost[pos][s]: minimal changes so that move pos was consumed at side s.
  std::vector<std::vector<int>> cost(L, std::vector<int>(nsides + 2, kInfInt));
  std::vector<std::vector<int>> from(L, std::vector<int>(nsides + 2, -1));
  for (int s = 1; s <= nsides; ++s) {
    if (is_S_preserving(m.moves[0], side_of(s))) cost[0][s] = 0;
  }
  for (int pos = 1; pos < L; ++pos) {
    for (int b = 1; b <= nsides; ++b) {
      if (!is_S_preserving(m.moves[pos], side_of(b))) continue;
      for (int a = 1; a <= nsides; ++a) {
        if (cost[pos - 1][a] >= kInfInt) continue;
        int cand = cost[pos - 1][a] + dist(a, b);
        if (cand < cost[pos][b]) {
          cost[pos][b] = cand;
          from[pos][b] = a;
        }
      }
    }
  }

  int best_side = -1;
  for (int s = 1; s <= nsides; ++s) {
    if (best_side == -1 || cost[L - 1][s] < cost[L - 1][best_side]) best_side = s;
  }
  if (best_side == -1 || cost[L - 1][best_side] >= kInfInt) {
    throw std::logic_error("index-change DP found no admissible side");
  }
  out.k = cost[L - 1][best_side];

  std::vector<int> consume(L);
  int s = best_side;
  for (int pos = L - 1; pos >= 0; --pos) {
    consume[pos] = s;
    if (pos > 0) s = from[pos][s];
  }

  int begin = 0;
  for (int pos = 1; pos <= L; ++pos) {
    if (pos == L || consume[pos] != consume[begin]) {
      Block b;
      b.side = side_of(consume[begin]);
      b.moves.assign(m.moves.begin() + begin, m.moves.begin() + pos);
      if (!out.decomposition.blocks.empty()) {
        const IndexSet& prev = out.decomposition.blocks.back().side;
        if (!compatible(prev, b.side)) {
          // two-hop change: materialize the bridge as an empty block
          out.decomposition.blocks.push_back({{}, bridge_side_impl(prev, b.side)});
        }
      }
      out.decomposition.blocks.push_back(std::move(b));
      begin = pos;
    }
  }
  return out;
}

namespace {

// Witness for one hop between sides s and s2 at a common tuple, where one of
// {s2, ~s2} is a proper subset of one of {s, ~s}.
ESEdgeWitness hop_witness(const BasisTuple& tuple, const IndexSet& s, const IndexSet& s2) {
  std::uint32_t candidates_u[2] = {s.bits, s.complement().bits};
  std::uint32_t candidates_t[2] = {s2.bits, s2.complement().bits};
  for (std::uint32_t u : candidates_u) {
    for (std::uint32_t t : candidates_t) {
      if (!proper_subset(t, u)) continue;
      ESEdgeWitness w;
      w.refined = tuple;
      w.part_a = IndexSet(s.n, t);
      w.part_c = IndexSet(s.n, u & ~t);
      w.part_b = IndexSet(s.n, ~u & s.mask());
      w.endpoint1 = {tuple, s};
      w.endpoint2 = {tuple, s2};
      w.conj1 = Word(Rank(tuple.rank));
      w.conj2 = Word(Rank(tuple.rank));
      return w;
    }
  }
  throw std::invalid_argument("sides are not compatible");
}

BasisTuple conjugate_tuple(const BasisTuple& t, const Word& g) {
  BasisTuple out = t;
  for (Word& w : out.entries) {
    w = concat(inverse(g), concat(w, g));
  }
  return out;
}

}  // namespace

bool verify_edge_witness(const ESEdgeWitness& w) {
  const int n = w.refined.rank;
  if (w.part_a.n != n || w.part_c.n != n || w.part_b.n != n) return false;
  std::uint32_t a = w.part_a.bits, c = w.part_c.bits, b = w.part_b.bits;
  std::uint32_t full = w.part_a.mask();
  if (a == 0 || c == 0 || b == 0) return false;
  if ((a & c) || (a & b) || (c & b)) return false;
  if ((a | c | b) != full) return false;
  if (!is_basis(w.refined)) return false;

  auto side_words = [](const BasisTuple& t, std::uint32_t bits) {
    std::vector<Word> out;
    for (int k = 1; k <= t.rank; ++k) {
      if ((bits >> (k - 1)) & 1) out.push_back(t.entries[k - 1]);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  // endpoint1 factorization must match {A u C | B}, endpoint2 must match
  // {A | C u B}, up to exchanging a side with its complement.
  const BasisTuple t1 = conjugate_tuple(w.refined, w.conj1);
  const BasisTuple t2 = conjugate_tuple(w.refined, w.conj2);
  auto matches = [&](const ESVertex& v, const BasisTuple& conj_refined,
                     std::uint32_t want_bits) {
    if (v.tuple.rank != n || v.side.n != n) return false;
    std::uint32_t side = v.side.bits;
    std::uint32_t comp = v.side.complement().bits;
    for (std::uint32_t chosen : {side, comp}) {
      if (side_words(v.tuple, chosen) == side_words(conj_refined, want_bits) &&
          side_words(v.tuple, ~chosen & full) ==
              side_words(conj_refined, ~want_bits & full)) {
        return true;
      }
    }
    return false;
  };
  return matches(w.endpoint1, t1, a | c) && matches(w.endpoint2, t2, a);
}

void extend_path_hop(ESPath& path, const IndexSet& target) {
  const ESVertex& cur = path.vertices.back();
  if (cur.side == target) return;
  const BasisTuple tuple = cur.tuple;
  const IndexSet side = cur.side;
  if (compatible(side, target)) {
    path.witnesses.push_back(hop_witness(tuple, side, target));
    path.vertices.push_back({tuple, target});
  } else {
    IndexSet mid = bridge_side_impl(side, target);
    path.witnesses.push_back(hop_witness(tuple, side, mid));
    path.vertices.push_back({tuple, mid});
    path.witnesses.push_back(hop_witness(tuple, mid, target));
    path.vertices.push_back({tuple, target});
  }
}

void extend_path_moves(ESPath& path, const std::vector<ElementaryMove>& moves) {
  ESVertex& cur = path.vertices.back();
  for (const ElementaryMove& mv : moves) {
    if (!is_S_preserving(mv, cur.side)) {
      throw std::invalid_argument("block move does not preserve the block side");
    }
    cur.tuple = apply_move(cur.tuple, mv);
  }
}

void rewrite_path_tuple(ESPath& path, const BasisTuple& tuple) {
  path.vertices.back().tuple = tuple;
}

ESPath path_from_blocks(const ESVertex& start, const BlockDecomposition& d) {
  ESPath path;
  path.vertices.push_back(start);
  for (const Block& block : d.blocks) {
    extend_path_hop(path, block.side);
    extend_path_moves(path, block.moves);
  }
  return path;
}

DistanceLower distance_lower_bound(const BasisTuple& x, int index, const CrConfig& cfg) {
  if (x.rank < 3) throw std::invalid_argument("distance bound needs rank >= 3");
  if (!is_basis(x)) throw std::invalid_argument("tuple is not a basis");
  FullIlength full = full_ilength(x.entries, index, cfg);
  DistanceLower out;
  out.ilength_lower = full.bound.lower;
  out.certified = full.bound.lower_certified;
  // ceil(L/24 - 1) = ceil((L - 24)/24), clamped at zero
  long num = out.ilength_lower - 24;
  long q = num <= 0 ? 0 : (num + 23) / 24;
  out.bound = q;
  return out;
}

std::string side_to_string(const IndexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int k : s.indices()) {
    if (!first) out += ",";
    out += std::to_string(k);
    first = false;
  }
  return out + "}";
}

std::string to_json(const ESPath& path) {
  nlohmann::ordered_json j;
  auto tuple_json = [](const BasisTuple& t) {
    auto arr = nlohmann::ordered_json::array();
    for (const Word& w : t.entries) arr.push_back(to_text(w));
    return arr;
  };
  auto side_json = [](const IndexSet& s) {
    auto arr = nlohmann::ordered_json::array();
    for (int k : s.indices()) arr.push_back(k);
    return arr;
  };
  auto vertices = nlohmann::ordered_json::array();
  for (const ESVertex& v : path.vertices) {
    nlohmann::ordered_json vj;
    vj["tuple"] = tuple_json(v.tuple);
    vj["side"] = side_json(v.side);
    vertices.push_back(vj);
  }
  j["vertices"] = vertices;
  auto witnesses = nlohmann::ordered_json::array();
  for (const ESEdgeWitness& w : path.witnesses) {
    nlohmann::ordered_json wj;
    wj["refined"] = tuple_json(w.refined);
    wj["part_a"] = side_json(w.part_a);
    wj["part_c"] = side_json(w.part_c);
    wj["part_b"] = side_json(w.part_b);
    wj["conj1"] = to_text(w.conj1);
    wj["conj2"] = to_text(w.conj2);
    wj["verified"] = verify_edge_witness(w);
    witnesses.push_back(wj);
  }
  j["witnesses"] = witnesses;
  return j.dump();
}

}  // namespace esgraph
