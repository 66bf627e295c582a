#ifndef ESGRAPH_WORD_HPP
#define ESGRAPH_WORD_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace esgraph {

// Number of standard generators a_1..a_n.  Word arithmetic needs n >= 2;
// the splitting-graph and quasiflat layers additionally require n >= 3 and
// check that themselves.
struct Rank {
  int n;
  explicit Rank(int n_);
};

// A letter is a signed generator index: +k encodes a_k, -k encodes a_k^-1.
using Letter = int;

inline int letter_index(Letter l) { return l < 0 ? -l : l; }
inline int letter_sign(Letter l) { return l < 0 ? -1 : 1; }
inline Letter letter_inverse(Letter l) { return -l; }

// Hard cap on word growth (free reduction only shrinks, but substitution and
// power maps can blow up).  Default 10^6 letters.
std::size_t max_word_length();
void set_max_word_length(std::size_t cap);

// A freely reduced word over the generators of F_n.  Immutable value type;
// the empty sequence is the identity.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank.n) {}

  // Freely reduces the given letter sequence.
  static Word from_letters(Rank rank, const std::vector<Letter>& letters);

  int rank() const { return rank_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter at(std::size_t pos) const { return letters_[pos]; }

  bool operator==(const Word& other) const = default;
  bool operator<(const Word& other) const;

 private:
  friend Word reduce_and_wrap(int rank, std::vector<Letter> letters);
  int rank_;
  std::vector<Letter> letters_;
};

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // original =_r conjugator^-1 * core * conjugator
};

// Parses compact syntax (a..z generator, A..Z inverse) or token syntax
// ("x3", "x3^-1"); whitespace-tolerant.  Any digit in the text selects the
// token reading.  Throws std::invalid_argument on malformed text or an index
// outside the rank.
Word parse_word(std::string_view text, Rank rank);

// Compact form for rank <= 26, token form otherwise.  The identity is the
// empty string.
std::string to_text(const Word& w);

Word concat(const Word& u, const Word& v);
Word inverse(const Word& w);
CyclicReduction cyclic_reduce(const Word& w);
bool is_cyclically_reduced(const Word& w);

// Replaces a_k by images[k-1] (and a_k^-1 by its inverse), then reduces.
// All images must share one rank, which becomes the rank of the result.
Word substitute(const Word& w, const std::vector<Word>& images);

// w^e for integer e (negative exponents use the inverse).
Word power(const Word& w, long e);

// The subword w[begin..end) as a word of the same rank.
Word subword(const Word& w, std::size_t begin, std::size_t end);

// Cyclic conjugate of a cyclically reduced word, starting at offset r.
Word rotate(const Word& w, std::size_t r);

bool is_positive(const Word& w);
bool contains_index(const Word& w, int index);

}  // namespace esgraph

#endif
