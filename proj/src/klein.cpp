#include "gt2/klein.hpp"

#include <limits>

namespace gt2 {

KleinElement k_mul(const KleinElement& x, const KleinElement& y) {
  return KleinElement{x.i + y.i, neg_one_pow(y.i) * x.j + y.j};
}

KleinElement k_inv(const KleinElement& x) {
  return KleinElement{-x.i, -(neg_one_pow(x.i) * x.j)};
}

KleinElement k_conj(const KleinElement& g, const KleinElement& x) {
  return k_mul(k_mul(k_inv(x), g), x);
}

KleinElement k_pow(const KleinElement& x, const BigInt& n) {
  if (n < 0) return k_pow(k_inv(x), -n);
  KleinElement acc{0, 0};
  KleinElement base = x;
  BigInt k = n;
  while (k > 0) {
    if (is_odd(k)) acc = k_mul(acc, base);
    base = k_mul(base, base);
    k >>= 1;
  }
  return acc;
}

bool k_is_gt_pair(const KleinElement& g, const KleinElement& c) {
  if (g.is_identity()) return false;
  return k_mul(k_conj(g, c), g).is_identity();
}

std::vector<KleinPair> k_enumerate_gt_pairs(int bound) {
  if (bound < 1) throw InputError("k_enumerate_gt_pairs requires bound >= 1");
  std::vector<KleinPair> out;
  for (int i = -bound; i <= bound; ++i)
    for (int j = -bound; j <= bound; ++j) {
      KleinElement g{i, j};
      for (int k = -bound; k <= bound; ++k)
        for (int l = -bound; l <= bound; ++l) {
          KleinElement c{k, l};
          if (k_is_gt_pair(g, c)) out.push_back(KleinPair{g, c});
        }
    }
  return out;
}

bool k_centralizer_member(const KleinElement& x, const KleinElement& g) {
  return k_mul(x, g) == k_mul(g, x);
}

bool k_is_primitive_pair(const KleinPair& p) {
  if (!k_is_gt_pair(p.g, p.c))
    throw ContractViolation("k_is_primitive_pair requires a verified pair");
  // p.g = (0, j) with j != 0 for any verified pair.
  BigInt bound = abs(p.g.j);
  for (BigInt n = 2; n <= bound; ++n) {
    if (p.g.j % n != 0) continue;
    for (int sign : {1, -1}) {
      KleinElement h{0, p.g.j / (sign * n)};
      if (k_pow(h, sign * n) == p.g && k_is_gt_pair(h, p.c)) return false;
    }
  }
  return true;
}

Presentation klein_presentation() {
  Presentation p({"a", "b"});
  // a^-1 b a b
  p.add_relator(free_reduce({{0, -1}, {1, 1}, {0, 1}, {1, 1}}));
  return p;
}

KleinElement k_eval(const Word& w) {
  if (w.max_generator() > 1)
    throw InputError("word is not over the Klein generators a, b");
  KleinElement acc{0, 0};
  for (const auto& l : w.letters()) {
    KleinElement gen = l.gen == 0 ? KleinElement{1, 0} : KleinElement{0, 1};
    acc = k_mul(acc, k_pow(gen, l.exp));
  }
  return acc;
}

static std::int64_t to_int64(const BigInt& x) {
  if (x < std::numeric_limits<std::int64_t>::min() ||
      x > std::numeric_limits<std::int64_t>::max())
    throw ArithmeticError("Klein exponent does not fit in a word letter");
  return static_cast<std::int64_t>(x);
}

Word k_word(const KleinElement& x) {
  std::vector<Letter> letters;
  if (x.i != 0) letters.push_back(Letter{0, to_int64(x.i)});
  if (x.j != 0) letters.push_back(Letter{1, to_int64(x.j)});
  return Word(std::move(letters));
}

std::string k_print(const KleinElement& x) {
  return print_word(klein_presentation(), k_word(x));
}

KleinElement k_parse(const std::string& text) {
  return k_eval(parse_word(klein_presentation(), text));
}

}  // namespace gt2
