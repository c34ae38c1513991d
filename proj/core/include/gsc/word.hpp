#ifndef GSC_WORD_HPP_
#define GSC_WORD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/error.hpp"

namespace gsc {

// A letter is a small integer: generator i contributes the positive letter
// 2*i and its formal inverse 2*i+1. Inversion is a bit flip, which is an
// involution without fixed points by construction.
using Letter = std::int32_t;

inline Letter inverse(Letter s) { return s ^ 1; }
inline bool is_positive(Letter s) { return (s & 1) == 0; }
inline int generator_of(Letter s) { return s >> 1; }

// The generator set S' together with the formal inverses S''. Generator
// names keep their given order; name-based orderings used for deterministic
// tie-breaking are precomputed here.
class Alphabet {
 public:
  Alphabet() = default;

  int size() const { return static_cast<int>(names_.size()); }  // m = |S'|
  int letter_count() const { return 2 * size(); }               // |S|

  const std::string& generator_name(int i) const { return names_[i]; }

  // "a" for a positive letter, "a^-1" for its inverse.
  std::string letter_name(Letter s) const;

  // Resolves a token ("a" or "a^-1") to a letter.
  std::optional<Letter> find(std::string_view token) const;

  // True when every generator is a single lowercase character, which enables
  // the compact word form (lowercase = positive, uppercase = inverse).
  bool compact() const;

  // Rank of the letter in (letter-name) lexicographic order.
  int name_rank(Letter s) const { return name_rank_[s]; }

  // All letters sorted by name; the canonical scan order.
  const std::vector<Letter>& letters_by_name() const { return by_name_; }

  bool operator==(const Alphabet& o) const { return names_ == o.names_; }

  friend Alphabet make_alphabet(const std::vector<std::string>& names);

 private:
  std::vector<std::string> names_;
  std::vector<int> name_rank_;
  std::vector<Letter> by_name_;
};

// Builds an alphabet from generator names. Throws on an empty list,
// duplicate names, or a name colliding with a generated inverse name.
Alphabet make_alphabet(const std::vector<std::string>& names);

using Word = std::vector<Letter>;

// Parses the compact form ("abA", single-character alphabets only) or the
// token form ("a^-1, b"; names separated by commas or whitespace). An empty
// string is the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);

// Renders a word in the form parse_word accepts: compact when the alphabet
// allows it, token form otherwise.
std::string word_text(const Word& w, const Alphabet& alphabet);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// The unique reduced word freely equal to w.
Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w is freely equal to conjugator . core . conjugator^-1
};

// Freely reduces, then strips inverse first/last pairs.
CyclicReduction cyclic_reduce(const Word& w);

// Inverse letters in reverse order.
Word invert(const Word& w);

Word concat(const Word& a, const Word& b);

// w[r:] + w[:r]
Word rotated(const Word& w, int r);

// Length-then-name-lexicographic order; the deterministic word order used
// for canonical representatives and sorted reports.
bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet);

}  // namespace gsc

#endif  // GSC_WORD_HPP_
