#ifndef GT2_KLEIN_HPP
#define GT2_KLEIN_HPP

#include <string>
#include <vector>

#include "gt2/bigint.hpp"
#include "gt2/presentation.hpp"
#include "gt2/word.hpp"

namespace gt2 {

// An element a^i b^j of the Klein bottle group <a, b | a^-1 b a b>.
// The pair (i, j) is a faithful normal form: distinct pairs are distinct
// group elements, and (0, 0) is the identity.
struct KleinElement {
  BigInt i;
  BigInt j;

  bool is_identity() const { return i == 0 && j == 0; }
  friend bool operator==(const KleinElement&, const KleinElement&) = default;
};

struct KleinPair {
  KleinElement g;
  KleinElement c;

  friend bool operator==(const KleinPair&, const KleinPair&) = default;
};

// (i,j) * (k,l) = (i+k, (-1)^k j + l), from b a = a b^-1.
KleinElement k_mul(const KleinElement& x, const KleinElement& y);
KleinElement k_inv(const KleinElement& x);
// x^-1 g x
KleinElement k_conj(const KleinElement& g, const KleinElement& x);
KleinElement k_pow(const KleinElement& x, const BigInt& n);

// True iff g != 1 and c^-1 g c g = 1, i.e. g is conjugated to its inverse
// by c. Decided by arithmetic, not by the closed-form characterization.
bool k_is_gt_pair(const KleinElement& g, const KleinElement& c);

// Exhaustive scan of the box |i|,|j|,|k|,|l| <= bound with k_is_gt_pair.
// Deliberately brute force so the closed form (i = 0, j != 0, k odd) stays
// an independent check. Requires bound >= 1.
std::vector<KleinPair> k_enumerate_gt_pairs(int bound);

// Membership in the centralizer of g.
bool k_centralizer_member(const KleinElement& x, const KleinElement& g);

// A verified pair (g, c) is primitive when g is not h^n for |n| >= 2 with
// (h, c) again a pair. The root search runs over divisors |n| <= |j|,
// which is exhaustive here: roots of b^j are exactly b^{j/n}.
bool k_is_primitive_pair(const KleinPair& p);

// The presentation <a, b | a^-1 b a b> with generator order a, b.
Presentation klein_presentation();

// Evaluate a word over the Klein presentation's generators.
KleinElement k_eval(const Word& w);
// The word a^i b^j.
Word k_word(const KleinElement& x);

// Rendering a^i*b^j with zero-exponent factors dropped; identity prints "1".
std::string k_print(const KleinElement& x);
KleinElement k_parse(const std::string& text);

}  // namespace gt2

#endif
