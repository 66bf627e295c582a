#include "esgraph/word.hpp"

#include <atomic>
#include <cctype>
#include <stdexcept>

namespace esgraph {

namespace {

std::atomic<std::size_t> g_max_word_length{1000000};

void check_length(std::size_t len) {
  if (len > g_max_word_length.load(std::memory_order_relaxed)) {
    throw std::length_error("word length exceeds the configured cap");
  }
}

void check_letter(int rank, Letter l) {
  int idx = letter_index(l);
  if (l == 0 || idx < 1 || idx > rank) {
    throw std::invalid_argument("letter index out of rank range");
  }
}

std::vector<Letter> reduce_letters(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (Letter l : in) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

Rank::Rank(int n_) : n(n_) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
}

std::size_t max_word_length() {
  return g_max_word_length.load(std::memory_order_relaxed);
}

void set_max_word_length(std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("word length cap must be positive");
  g_max_word_length.store(cap, std::memory_order_relaxed);
}

Word reduce_and_wrap(int rank, std::vector<Letter> letters) {
  Word w{Rank(rank)};
  w.letters_ = reduce_letters(letters);
  check_length(w.letters_.size());
  return w;
}

Word Word::from_letters(Rank rank, const std::vector<Letter>& letters) {
  for (Letter l : letters) check_letter(rank.n, l);
  return reduce_and_wrap(rank.n, letters);
}

bool Word::operator<(const Word& other) const {
  if (letters_.size() != other.letters_.size()) {
    return letters_.size() < other.letters_.size();
  }
  return letters_ < other.letters_;
}

Word parse_word(std::string_view text, Rank rank) {
  bool token_form = false;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      token_form = true;
      break;
    }
  }
  std::vector<Letter> letters;
  if (token_form) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
      if (text[pos] != 'x') throw std::invalid_argument("malformed token: expected 'x'");
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw std::invalid_argument("malformed token: expected generator index");
      }
      long idx = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        idx = idx * 10 + (text[pos] - '0');
        if (idx > rank.n) throw std::invalid_argument("letter index out of rank range");
        ++pos;
      }
      int sign = 1;
      if (pos < text.size() && text[pos] == '^') {
        if (text.substr(pos, 3) != "^-1") throw std::invalid_argument("malformed token exponent");
        sign = -1;
        pos += 3;
      }
      if (idx < 1) throw std::invalid_argument("letter index out of rank range");
      letters.push_back(sign * static_cast<Letter>(idx));
      skip_ws();
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      int l;
      if (c >= 'a' && c <= 'z') {
        l = c - 'a' + 1;
      } else if (c >= 'A' && c <= 'Z') {
        l = -(c - 'A' + 1);
      } else {
        throw std::invalid_argument(std::string("malformed word character: ") + c);
      }
      if (letter_index(l) > rank.n) throw std::invalid_argument("letter index out of rank range");
      letters.push_back(l);
    }
  }
  return reduce_and_wrap(rank.n, letters);
}

std::string to_text(const Word& w) {
  std::string out;
  if (w.rank() <= 26) {
    for (Letter l : w.letters()) {
      out += static_cast<char>((l > 0 ? 'a' : 'A') + letter_index(l) - 1);
    }
  } else {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) out += ' ';
      Letter l = w.at(k);
      out += 'x';
      out += std::to_string(letter_index(l));
      if (l < 0) out += "^-1";
    }
  }
  return out;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch in concat");
  std::vector<Letter> letters = u.letters();
  for (Letter l : v.letters()) {
    if (!letters.empty() && letters.back() == -l) {
      letters.pop_back();
    } else {
      letters.push_back(l);
    }
  }
  check_length(letters.size());
  Word out = reduce_and_wrap(u.rank(), std::move(letters));
  return out;
}

Word inverse(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(-*it);
  }
  return reduce_and_wrap(w.rank(), std::move(letters));
}

bool is_cyclically_reduced(const Word& w) {
  return w.size() < 2 || w.letters().front() != -w.letters().back();
}

CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w.at(lo) == -w.at(hi - 1)) {
    ++lo;
    --hi;
  }
  std::vector<Letter> core(w.letters().begin() + lo, w.letters().begin() + hi);
  std::vector<Letter> conj(w.letters().begin() + hi, w.letters().end());
  return CyclicReduction{reduce_and_wrap(w.rank(), std::move(core)),
                         reduce_and_wrap(w.rank(), std::move(conj))};
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  if (static_cast<int>(images.size()) != w.rank()) {
    throw std::invalid_argument("substitute needs one image per generator");
  }
  int out_rank = images.empty() ? 0 : images.front().rank();
  for (const Word& im : images) {
    if (im.rank() != out_rank) throw std::invalid_argument("images of mixed rank");
  }
  std::vector<Letter> letters;
  for (Letter l : w.letters()) {
    const Word& im = images[letter_index(l) - 1];
    if (l > 0) {
      for (Letter x : im.letters()) {
        if (!letters.empty() && letters.back() == -x) {
          letters.pop_back();
        } else {
          letters.push_back(x);
        }
      }
    } else {
      for (auto it = im.letters().rbegin(); it != im.letters().rend(); ++it) {
        Letter x = -*it;
        if (!letters.empty() && letters.back() == -x) {
          letters.pop_back();
        } else {
          letters.push_back(x);
        }
      }
    }
    check_length(letters.size());
  }
  return reduce_and_wrap(out_rank, std::move(letters));
}

Word power(const Word& w, long e) {
  Word base = e < 0 ? inverse(w) : w;
  long reps = e < 0 ? -e : e;
  std::vector<Letter> letters;
  for (long k = 0; k < reps; ++k) {
    for (Letter l : base.letters()) {
      if (!letters.empty() && letters.back() == -l) {
        letters.pop_back();
      } else {
        letters.push_back(l);
      }
    }
    check_length(letters.size());
  }
  return reduce_and_wrap(w.rank(), std::move(letters));
}

Word subword(const Word& w, std::size_t begin, std::size_t end) {
  if (begin > end || end > w.size()) throw std::invalid_argument("subword range out of bounds");
  std::vector<Letter> letters(w.letters().begin() + begin, w.letters().begin() + end);
  return reduce_and_wrap(w.rank(), std::move(letters));
}

Word rotate(const Word& w, std::size_t r) {
  if (w.empty()) return w;
  r %= w.size();
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    letters.push_back(w.at((k + r) % w.size()));
  }
  return reduce_and_wrap(w.rank(), std::move(letters));
}

bool is_positive(const Word& w) {
  for (Letter l : w.letters()) {
    if (l < 0) return false;
  }
  return true;
}

bool contains_index(const Word& w, int index) {
  for (Letter l : w.letters()) {
    if (letter_index(l) == index) return true;
  }
  return false;
}

}  // namespace esgraph
