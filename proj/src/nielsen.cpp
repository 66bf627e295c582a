#include "esgraph/nielsen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "esgraph/rng.hpp"
#include "esgraph/whitehead.hpp"

namespace esgraph {

namespace {

void check_indices(int rank, const ElementaryMove& m) {
  auto in_range = [rank](int k) { return k >= 1 && k <= rank; };
  switch (m.kind) {
    case MoveKind::Invert:
      if (!in_range(m.i)) throw std::invalid_argument("move index out of range");
      break;
    case MoveKind::Swap:
    case MoveKind::Transvect:
      if (!in_range(m.i) || !in_range(m.j) || m.i == m.j) {
        throw std::invalid_argument("move indices out of range or equal");
      }
      break;
  }
  if (m.kind == MoveKind::Transvect && m.sign != 1 && m.sign != -1) {
    throw std::invalid_argument("transvection sign must be +-1");
  }
}

}  // namespace

ElementaryMove swap_move(int i, int j) { return {MoveKind::Swap, i, j, 1}; }
ElementaryMove invert_move(int i) { return {MoveKind::Invert, i, 0, 1}; }
ElementaryMove transvect_move(int i, int j, int sign) {
  return {MoveKind::Transvect, i, j, sign};
}

TransformationWord parse_moves(std::string_view text, Rank rank) {
  TransformationWord out;
  out.rank = rank.n;
  std::string buf(text);
  std::replace(buf.begin(), buf.end(), ';', '\n');
  std::istringstream lines(buf);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    ElementaryMove m{};
    if (op == "s") {
      int i, j;
      if (!(ls >> i >> j)) throw std::invalid_argument("swap needs two indices");
      m = swap_move(i, j);
    } else if (op == "t") {
      int i;
      if (!(ls >> i)) throw std::invalid_argument("invert needs one index");
      m = invert_move(i);
    } else if (op == "a" || op == "A") {
      int i, j;
      if (!(ls >> i >> j)) throw std::invalid_argument("transvection needs two indices");
      m = transvect_move(i, j, op == "a" ? 1 : -1);
    } else {
      throw std::invalid_argument("unknown move kind: " + op);
    }
    std::string rest;
    if (ls >> rest) throw std::invalid_argument("trailing text after move");
    check_indices(rank.n, m);
    out.moves.push_back(m);
  }
  return out;
}

std::string format_moves(const TransformationWord& m) {
  std::string out;
  for (std::size_t k = 0; k < m.moves.size(); ++k) {
    if (k) out += "; ";
    const ElementaryMove& mv = m.moves[k];
    switch (mv.kind) {
      case MoveKind::Swap:
        out += "s " + std::to_string(mv.i) + " " + std::to_string(mv.j);
        break;
      case MoveKind::Invert:
        out += "t " + std::to_string(mv.i);
        break;
      case MoveKind::Transvect:
        out += std::string(mv.sign > 0 ? "a " : "A ") + std::to_string(mv.i) + " " +
               std::to_string(mv.j);
        break;
    }
  }
  return out;
}

long BasisTuple::total_length() const {
  long total = 0;
  for (const Word& w : entries) total += static_cast<long>(w.size());
  return total;
}

BasisTuple standard_basis(Rank rank) {
  BasisTuple t;
  t.rank = rank.n;
  for (int k = 1; k <= rank.n; ++k) {
    t.entries.push_back(Word::from_letters(rank, {k}));
  }
  return t;
}

BasisTuple apply_move(const BasisTuple& t, const ElementaryMove& m) {
  check_indices(t.rank, m);
  BasisTuple out = t;
  switch (m.kind) {
    case MoveKind::Swap:
      std::swap(out.entries[m.i - 1], out.entries[m.j - 1]);
      break;
    case MoveKind::Invert:
      out.entries[m.i - 1] = inverse(out.entries[m.i - 1]);
      break;
    case MoveKind::Transvect: {
      const Word& xj = out.entries[m.j - 1];
      out.entries[m.i - 1] =
          concat(out.entries[m.i - 1], m.sign > 0 ? xj : inverse(xj));
      break;
    }
  }
  return out;
}

BasisTuple apply(const BasisTuple& t, const TransformationWord& m) {
  if (t.rank != m.rank) throw std::invalid_argument("rank mismatch in apply");
  BasisTuple out = t;
  for (const ElementaryMove& mv : m.moves) out = apply_move(out, mv);
  return out;
}

std::vector<Word> as_automorphism(const TransformationWord& m) {
  const Rank rank{m.rank};
  std::vector<Word> elementary(m.rank, Word(rank));
  std::vector<Word> images;
  for (int k = 1; k <= m.rank; ++k) images.push_back(Word::from_letters(rank, {k}));
  // phi = s_1 o s_2 o ... o s_t applied as a function: s_t acts first, so the
  // image of a_k is built by substituting the moves from the right end inward.
  for (auto it = m.moves.rbegin(); it != m.moves.rend(); ++it) {
    std::vector<Word> step;
    for (int k = 1; k <= m.rank; ++k) step.push_back(Word::from_letters(rank, {k}));
    switch (it->kind) {
      case MoveKind::Swap:
        std::swap(step[it->i - 1], step[it->j - 1]);
        break;
      case MoveKind::Invert:
        step[it->i - 1] = inverse(step[it->i - 1]);
        break;
      case MoveKind::Transvect:
        step[it->i - 1] = concat(step[it->i - 1],
                                 it->sign > 0 ? step[it->j - 1] : inverse(step[it->j - 1]));
        break;
    }
    for (Word& im : images) im = substitute(im, step);
  }
  return images;
}

namespace {

struct Candidate {
  // replacement for entry i: x_i -> x_i x_j^s (side +1) or x_j^s x_i (side -1)
  int i, j, sign, side;
  Word result;

  Candidate(int i_, int j_, int sign_, int side_, Word r)
      : i(i_), j(j_), sign(sign_), side(side_), result(std::move(r)) {}
};

// Deterministic preference order among equally-shortening candidates.
bool candidate_less(const Candidate& a, const Candidate& b) {
  return std::tuple(a.side < 0, a.sign < 0, a.i, a.j) <
         std::tuple(b.side < 0, b.sign < 0, b.i, b.j);
}

}  // namespace

ReductionResult nielsen_reduce(const BasisTuple& t) {
  ReductionResult out;
  out.reduced = t;
  out.moves.rank = t.rank;
  if (t.rank < 2) throw std::invalid_argument("rank must be at least 2");
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<Candidate> winners;
    for (int i = 1; i <= t.rank; ++i) {
      const Word& xi = out.reduced.entries[i - 1];
      for (int j = 1; j <= t.rank; ++j) {
        if (i == j) continue;
        const Word& xj = out.reduced.entries[j - 1];
        for (int sign : {1, -1}) {
          Word factor = sign > 0 ? xj : inverse(xj);
          Word right = concat(xi, factor);
          if (right.size() < xi.size()) winners.emplace_back(i, j, sign, +1, right);
          Word left = concat(factor, xi);
          if (left.size() < xi.size()) winners.emplace_back(i, j, sign, -1, left);
        }
      }
    }
    if (winners.empty()) break;
    auto best = std::min_element(winners.begin(), winners.end(), candidate_less);
    if (best->side > 0) {
      out.moves.moves.push_back(transvect_move(best->i, best->j, best->sign));
      out.reduced = apply_move(out.reduced, out.moves.moves.back());
    } else {
      // x_i -> x_j^s x_i as invert(i), transvect(i,j,-s), invert(i)
      for (const ElementaryMove& mv :
           {invert_move(best->i), transvect_move(best->i, best->j, -best->sign),
            invert_move(best->i)}) {
        out.moves.moves.push_back(mv);
        out.reduced = apply_move(out.reduced, mv);
      }
    }
    progress = true;
  }
  return out;
}

bool is_basis(const BasisTuple& t) {
  if (t.rank < 2) return false;
  if (static_cast<int>(t.entries.size()) != t.rank) {
    throw std::invalid_argument("tuple length differs from rank");
  }
  for (const Word& w : t.entries) {
    if (w.rank() != t.rank) throw std::invalid_argument("entry rank mismatch");
  }
  BasisTuple reduced = nielsen_reduce(t).reduced;
  std::vector<char> seen(t.rank + 1, 0);
  for (const Word& w : reduced.entries) {
    if (w.size() != 1) return false;
    int idx = letter_index(w.at(0));
    if (seen[idx]) return false;
    seen[idx] = 1;
  }
  return true;
}

std::pair<BasisTuple, TransformationWord> random_basis(Rank rank, int steps,
                                                       std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("steps must be nonnegative");
  SplitMix64 rng(seed);
  const int n = rank.n;
  const std::uint64_t swaps = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const std::uint64_t inverts = n;
  const std::uint64_t transvects = 2ull * n * (n - 1);
  TransformationWord m;
  m.rank = n;
  for (int s = 0; s < steps; ++s) {
    std::uint64_t pick = rng.below(swaps + inverts + transvects);
    if (pick < swaps) {
      // unrank the pair (i, j), i < j
      std::uint64_t r = pick;
      int i = 1;
      while (r >= static_cast<std::uint64_t>(n - i)) {
        r -= n - i;
        ++i;
      }
      m.moves.push_back(swap_move(i, i + 1 + static_cast<int>(r)));
    } else if (pick < swaps + inverts) {
      m.moves.push_back(invert_move(static_cast<int>(pick - swaps) + 1));
    } else {
      std::uint64_t r = pick - swaps - inverts;
      int sign = r % 2 == 0 ? 1 : -1;
      r /= 2;
      int i = static_cast<int>(r / (n - 1)) + 1;
      int j = static_cast<int>(r % (n - 1)) + 1;
      if (j >= i) ++j;
      m.moves.push_back(transvect_move(i, j, sign));
    }
  }
  return {apply(standard_basis(rank), m), m};
}

bool primitive_necessary(const Word& w) {
  if (w.empty()) throw std::invalid_argument("primitive_necessary needs a nonempty word");
  Word core = cyclic_reduce(w).core;
  WhiteheadGraph g = build_whitehead({core}, Rank(w.rank()), std::nullopt, true);
  return has_cut_vertex(g);
}

}  // namespace esgraph
