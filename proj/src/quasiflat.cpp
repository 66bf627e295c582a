#include "esgraph/quasiflat.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace esgraph {

namespace {

void check_dims(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lattice dimension mismatch");
  if (a.empty()) throw std::invalid_argument("lattice dimension must be at least 1");
}

IndexSet default_side(Rank rank) {
  return IndexSet::from_indices(rank.n, {rank.n});
}

Word tail_word(const LatticePoint& p, Rank rank) {
  Word out{rank};
  for (std::size_t t = 0; t < p.size(); ++t) {
    out = concat(out, power(p_word(static_cast<int>(t) + 1, rank), p[t]));
  }
  return out;
}

}  // namespace

Word p_word(int t, Rank rank) {
  if (rank.n < 3) throw std::invalid_argument("p words need rank >= 3");
  if (t < 1) throw std::invalid_argument("p word index must be positive");
  std::vector<Letter> letters;
  auto block = [&](int k) {
    for (int rep = 0; rep <= t; ++rep) letters.push_back(k);
  };
  for (int k = 1; k <= rank.n - 1; ++k) block(k);
  block(1);
  block(2);
  block(1);
  return Word::from_letters(rank, letters);
}

ESVertex psi(const LatticePoint& p, Rank rank, std::optional<IndexSet> side) {
  if (rank.n < 3) throw std::invalid_argument("psi needs rank >= 3");
  if (p.empty()) throw std::invalid_argument("lattice dimension must be at least 1");
  BasisTuple tuple = standard_basis(rank);
  tuple.entries[rank.n - 1] = concat(tuple.entries[rank.n - 1], tail_word(p, rank));
  return {tuple, side.value_or(default_side(rank))};
}

Word omega(const LatticePoint& from, const LatticePoint& to, Rank rank) {
  check_dims(from, to);
  Word out{rank};
  for (std::size_t t = from.size(); t-- > 0;) {
    out = concat(out, power(p_word(static_cast<int>(t) + 1, rank), -from[t]));
  }
  for (std::size_t t = 0; t < to.size(); ++t) {
    out = concat(out, power(p_word(static_cast<int>(t) + 1, rank), to[t]));
  }
  return out;
}

FlatLower flat_lower_bound(const LatticePoint& from, const LatticePoint& to, Rank rank,
                           const CrConfig& cfg) {
  check_dims(from, to);
  if (rank.n < 3) throw std::invalid_argument("flat bounds need rank >= 3");
  FlatLower out;
  for (std::size_t t = 0; t < from.size(); ++t) {
    out.d += std::abs(from[t] - to[t]);
  }
  Word diff = omega(from, to, rank);
  BasisTuple basis = standard_basis(rank);
  basis.entries[rank.n - 1] = concat(basis.entries[rank.n - 1], diff);
  FullIlength full = full_ilength(basis.entries, rank.n, cfg);
  out.ilength_lower = full.bound.lower;
  out.certified = full.bound.lower_certified;
  long num = out.ilength_lower - 24;
  out.distance_lower = num <= 0 ? 0 : (num + 23) / 24;
  return out;
}

namespace {

struct GadgetBlock {
  std::vector<std::pair<int, long>> syllables;  // (generator, signed exponent)
  IndexSet side;
};

// The two alternating blocks of one copy of p_t (or its inverse).  For
// rank >= 5 these are the p_t syllables themselves; rank 4 uses the cyclic
// rotation rho_t = X^-1 p_t X with X = a_1^b a_2^b, whose syllables split
// the same way.
std::vector<GadgetBlock> copy_blocks(int t, Rank rank, bool positive) {
  const int n = rank.n;
  const long b = t + 1;
  std::vector<GadgetBlock> out;
  if (n >= 5) {
    IndexSet t1 = IndexSet::from_indices(n, {n - 1});
    std::vector<int> mid;
    for (int k = 3; k <= n - 2; ++k) mid.push_back(k);
    IndexSet t2 = IndexSet::from_indices(n, mid);
    GadgetBlock head{{}, t1}, tail{{}, t2};
    for (int k = 1; k <= n - 2; ++k) head.syllables.push_back({k, b});
    tail.syllables = {{n - 1, b}, {1, b}, {2, b}, {1, b}};
    if (positive) {
      out = {head, tail};
    } else {
      GadgetBlock rtail{{}, t2}, rhead{{}, t1};
      for (auto it = tail.syllables.rbegin(); it != tail.syllables.rend(); ++it) {
        rtail.syllables.push_back({it->first, -it->second});
      }
      for (auto it = head.syllables.rbegin(); it != head.syllables.rend(); ++it) {
        rhead.syllables.push_back({it->first, -it->second});
      }
      out = {rtail, rhead};
    }
  } else {
    // rho_t = a_3^b a_1^b a_2^b a_1^{2b} a_2^b
    IndexSet t1 = IndexSet::from_indices(4, {3});
    IndexSet t2 = IndexSet::from_indices(4, {1, 2});
    GadgetBlock head{{{3, b}}, t2};
    GadgetBlock tail{{{1, b}, {2, b}, {1, 2 * b}, {2, b}}, t1};
    if (positive) {
      out = {head, tail};
    } else {
      GadgetBlock rtail{{{2, -b}, {1, -2 * b}, {2, -b}, {1, -b}}, t1};
      GadgetBlock rhead{{{3, -b}}, t2};
      out = {rtail, rhead};
    }
  }
  return out;
}

std::vector<ElementaryMove> syllable_moves(int n, const std::vector<std::pair<int, long>>& sylls) {
  std::vector<ElementaryMove> moves;
  for (auto [k, e] : sylls) {
    int sign = e < 0 ? -1 : 1;
    for (long rep = 0; rep < std::labs(e); ++rep) {
      moves.push_back(transvect_move(n, k, sign));
    }
  }
  return moves;
}

// Conjugate only the last entry: another representative of the same vertex
// when the conjugator lies in the subgroup of the first n-1 entries and the
// current side is {n} (or its complement).
BasisTuple conjugate_last(const BasisTuple& t, const Word& g) {
  BasisTuple out = t;
  out.entries[t.rank - 1] = concat(inverse(g), concat(out.entries[t.rank - 1], g));
  return out;
}

}  // namespace

ESPath flat_upper_path(const LatticePoint& from, const LatticePoint& to, Rank rank,
                       std::optional<IndexSet> side) {
  check_dims(from, to);
  const int n = rank.n;
  if (n < 4) {
    throw std::invalid_argument("the explicit upper path needs rank >= 4");
  }
  const IndexSet base = default_side(rank);
  const IndexSet start_side = side.value_or(base);

  ESPath path;
  path.vertices.push_back(psi(from, rank, start_side));
  if (from == to) return path;

  extend_path_hop(path, base);

  LatticePoint cur = from;
  const std::size_t m = from.size();
  for (std::size_t t = 0; t < m; ++t) {
    const long j = to[t] - from[t];
    if (j == 0) continue;
    const Word pt = p_word(static_cast<int>(t) + 1, rank);

    // Rotate the representative so the p_t power sits at the end:
    // w = A B with B the powers above t, rewritten to A' = B w B^-1 = B A.
    Word b_tail{rank};
    for (std::size_t u = t + 1; u < m; ++u) {
      b_tail = concat(b_tail, power(p_word(static_cast<int>(u) + 1, rank), cur[u]));
    }
    BasisTuple rep = path.vertices.back().tuple;
    rep = conjugate_last(rep, inverse(b_tail));
    // Rank 4 additionally conjugates into the rotation rho_t = X^-1 p_t X.
    Word x_rot{rank};
    if (n == 4) {
      x_rot = concat(power(Word::from_letters(rank, {1}), t + 2),
                     power(Word::from_letters(rank, {2}), t + 2));
      rep = conjugate_last(rep, x_rot);
    }
    rewrite_path_tuple(path, rep);

    const std::vector<GadgetBlock> blocks = copy_blocks(static_cast<int>(t) + 1, rank, j > 0);
    for (long copy = 0; copy < std::labs(j); ++copy) {
      for (const GadgetBlock& block : blocks) {
        extend_path_hop(path, block.side);
        extend_path_moves(path, syllable_moves(n, block.syllables));
      }
    }
    extend_path_hop(path, base);

    cur[t] = to[t];
    // Normalize the representative back to the canonical psi form.
    BasisTuple done = path.vertices.back().tuple;
    if (n == 4) done = conjugate_last(done, inverse(x_rot));
    done = conjugate_last(done, b_tail);
    BasisTuple expect = standard_basis(rank);
    expect.entries[n - 1] = concat(expect.entries[n - 1], tail_word(cur, rank));
    if (!(done == expect)) {
      throw std::logic_error("quasiflat gadget failed to reproduce the psi form");
    }
    rewrite_path_tuple(path, done);
  }

  extend_path_hop(path, start_side);
  return path;
}

bool common_elliptic_check(const std::vector<LatticePoint>& points, Rank rank) {
  if (rank.n < 3) throw std::invalid_argument("elliptic check needs rank >= 3");
  const BasisTuple std_basis = standard_basis(rank);
  for (const LatticePoint& p : points) {
    if (p.empty()) throw std::invalid_argument("lattice dimension must be at least 1");
    ESVertex v = psi(p, rank);
    // All of a_1 .. a_{n-1} must sit verbatim in the factor away from the
    // side {n}.
    for (int k = 1; k <= rank.n - 1; ++k) {
      if (v.side.contains(k)) return false;
      if (!(v.tuple.entries[k - 1] == std_basis.entries[k - 1])) return false;
    }
    if (!v.side.contains(rank.n)) return false;
  }
  return true;
}

std::string flat_report(const LatticePoint& from, const LatticePoint& to, Rank rank,
                        const CrConfig& cfg) {
  FlatLower lower = flat_lower_bound(from, to, rank, cfg);
  nlohmann::ordered_json j;
  j["d"] = lower.d;
  j["ilength_lower"] = lower.ilength_lower;
  j["lower_certified"] = lower.certified;
  j["distance_lower"] = lower.distance_lower;
  if (rank.n >= 4) {
    ESPath path = flat_upper_path(from, to, rank);
    j["path_length"] = path.witnesses.size();
    j["path"] = nlohmann::ordered_json::parse(to_json(path));
  } else {
    j["path_length"] = nullptr;
    j["path"] = nullptr;
  }
  return j.dump();
}

}  // namespace esgraph
