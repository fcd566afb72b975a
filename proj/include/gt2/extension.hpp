#ifndef GT2_EXTENSION_HPP
#define GT2_EXTENSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "gt2/presentation.hpp"
#include "gt2/seifert.hpp"
#include "gt2/word.hpp"

namespace gt2 {

// One generator of the orbifold quotient Z/p1 * ... * Z/pn * F_r.
// Cyclic factors carry the Seifert invariant used when syllable exponents
// wrap: c^p = h^alpha. Free generators carry the orientation character;
// a crosscap generator (character -1) inverts the fiber when it passes.
struct QGenerator {
  std::string name;
  int order = 0;      // 0 for a free generator, else p >= 2
  int alpha = 0;      // fiber charge per full wrap (cyclic only)
  int character = 1;  // +1 or -1

  bool cyclic() const { return order != 0; }
};

struct ExtSyllable {
  int gen = 0;  // index into the quotient alphabet
  std::int64_t exp = 0;

  friend bool operator==(const ExtSyllable&, const ExtSyllable&) = default;
};

// Normal form of an element of a cyclic extension of the free product:
// an alternating syllable word in the quotient (cyclic exponents reduced
// into (-p/2, p/2]) together with the fiber exponent. Two elements are
// equal exactly when orb and fib coincide. group_tag identifies the
// owning backend; a fresh element (tag 0) is the identity of any group.
struct ExtensionElement {
  std::vector<ExtSyllable> orb;
  std::int64_t fib = 0;
  int group_tag = 0;

  bool is_identity() const { return orb.empty() && fib == 0; }
  friend bool operator==(const ExtensionElement& a, const ExtensionElement& b) {
    return a.orb == b.orb && a.fib == b.fib;
  }
};

// Word-problem backend for the fundamental group of a Seifert piece with
// non-empty boundary. One boundary generator is eliminated through the long
// relator, leaving the central (or orientation-twisted) extension of
// Z/p1 * ... * Z/pn * F_r by the fiber subgroup <h>.
class ExtensionGroup {
public:
  explicit ExtensionGroup(const SeifertData& d);

  const SeifertData& seifert_data() const { return data_; }
  const Presentation& presentation() const { return pres_; }
  const std::vector<QGenerator>& quotient_alphabet() const { return alphabet_; }
  int free_rank() const { return free_rank_; }
  std::vector<int> cyclic_orders() const;

  ExtensionElement identity() const { return {}; }
  ExtensionElement mul(const ExtensionElement& x, const ExtensionElement& y) const;
  ExtensionElement inv(const ExtensionElement& x) const;
  // x^-1 g x
  ExtensionElement conj(const ExtensionElement& g, const ExtensionElement& x) const;

  // Homomorphic evaluation of a word over the full presentation (the
  // eliminated boundary generator expands through the long relator).
  ExtensionElement eval(const Word& w) const;

  // Orientation character of the quotient image of an element.
  int character(const ExtensionElement& x) const;

  std::string print(const ExtensionElement& x) const;

private:
  void append_generator(ExtensionElement& e, int qgen, std::int64_t exp) const;
  void append_fiber(ExtensionElement& e, std::int64_t exp) const;
  void check_member(const ExtensionElement& e) const;

  int tag_ = 0;
  SeifertData data_;
  Presentation pres_;
  std::vector<QGenerator> alphabet_;
  int free_rank_ = 0;
  // Presentation generator -> quotient generator (or -1 for h / eliminated).
  std::vector<int> pres_to_q_;
  int h_gen_ = 0;
  int eliminated_gen_ = 0;
  ExtensionElement eliminated_value_;
};

ExtensionGroup extension_from_seifert(const SeifertData& d);

}  // namespace gt2

#endif
