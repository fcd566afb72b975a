#ifndef GT2_WORD_HPP
#define GT2_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gt2/errors.hpp"

namespace gt2 {

// One syllable of a word: generator index and a non-zero exponent.
struct Letter {
  int gen = 0;
  std::int64_t exp = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word over some generating set. Adjacent letters always
// have distinct generator indices and no exponent is zero; the empty word
// is the identity.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> reduced);  // trusts the caller

  static Word single(int gen, std::int64_t exp = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t syllables() const { return letters_.size(); }
  std::int64_t length() const;  // number of alphabet letters, sum of |exp|

  int max_generator() const;  // -1 for the identity

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

// Free reduction of an arbitrary letter sequence. Generator indices must be
// non-negative; negative indices are rejected as unknown generators.
Word free_reduce(const std::vector<Letter>& raw);

Word mul(const Word& a, const Word& b);
Word inv(const Word& w);
// x^{-1} g x
Word conj(const Word& g, const Word& x);
Word pow(const Word& w, std::int64_t n);

// ---------------------------------------------------------------------------
// Flat symbol strings.
//
// The rewriting engine and the enumerator work on strings over the alphabet
// {g0, g0^-1, g1, g1^-1, ...} with that exact order. Symbol values are
// 2*gen for a generator and 2*gen+1 for its inverse, stored one per byte,
// so byte-wise lexicographic comparison realizes the alphabet order.
// ---------------------------------------------------------------------------

using Sym = unsigned char;

inline Sym make_sym(int gen, bool inverse) {
  return static_cast<Sym>(2 * gen + (inverse ? 1 : 0));
}
inline int sym_gen(Sym s) { return s >> 1; }
inline bool sym_inverse(Sym s) { return (s & 1) != 0; }
inline Sym sym_inv(Sym s) { return static_cast<Sym>(s ^ 1); }

std::string to_symbols(const Word& w);
Word from_symbols(const std::string& s);  // merges runs; input need not be reduced
std::string free_reduce_symbols(const std::string& s);

// Shortlex: first by length, then byte-wise lexicographic.
bool shortlex_less(const std::string& a, const std::string& b);

// ---------------------------------------------------------------------------
// Deterministic enumeration of freely reduced words in shortlex order.
// ---------------------------------------------------------------------------

class WordEnumerator {
public:
  WordEnumerator(int num_generators, std::int64_t max_len);

  // Returns the next word as a symbol string, or nullopt when exhausted.
  // The stream starts with the empty word and is strictly shortlex-increasing.
  std::optional<std::string> next_symbols();
  std::optional<Word> next();

private:
  bool advance();
  int num_generators_;
  std::int64_t max_len_;
  std::string cur_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Word> enumerate_words(int num_generators, std::int64_t max_len);

}  // namespace gt2

#endif
