#include "gt2/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "gt2/bigint.hpp"

namespace gt2 {

Word::Word(std::vector<Letter> reduced) : letters_(std::move(reduced)) {}

Word Word::single(int gen, std::int64_t exp) {
  if (exp == 0) return Word();
  return Word({Letter{gen, exp}});
}

std::int64_t Word::length() const {
  std::int64_t n = 0;
  for (const auto& l : letters_) n = checked_add(n, l.exp < 0 ? -l.exp : l.exp);
  return n;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const std::vector<Letter>& raw) {
  std::vector<Letter> out;
  for (const auto& l : raw) {
    if (l.gen < 0) throw InputError("unknown generator id in word");
    if (l.exp == 0) continue;
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exp = checked_add(out.back().exp, l.exp);
      if (out.back().exp == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(std::move(out));
}

Word mul(const Word& a, const Word& b) {
  std::vector<Letter> cat;
  cat.reserve(a.letters().size() + b.letters().size());
  cat.insert(cat.end(), a.letters().begin(), a.letters().end());
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return free_reduce(cat);
}

Word inv(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(Letter{it->gen, checked_neg(it->exp)});
  return Word(std::move(out));
}

Word conj(const Word& g, const Word& x) { return mul(mul(inv(x), g), x); }

Word pow(const Word& w, std::int64_t n) {
  if (n == 0) return Word();
  Word base = n < 0 ? inv(w) : w;
  std::int64_t k = n < 0 ? -n : n;
  Word acc;
  for (std::int64_t i = 0; i < k; ++i) acc = mul(acc, base);
  return acc;
}

std::string to_symbols(const Word& w) {
  std::string s;
  for (const auto& l : w.letters()) {
    if (l.gen > 127) throw InputError("generator index too large for symbol alphabet");
    Sym sym = make_sym(l.gen, l.exp < 0);
    std::int64_t k = l.exp < 0 ? -l.exp : l.exp;
    s.append(static_cast<std::size_t>(k), static_cast<char>(sym));
  }
  return s;
}

Word from_symbols(const std::string& s) {
  std::vector<Letter> letters;
  for (char c : s) {
    Sym sym = static_cast<Sym>(c);
    letters.push_back(Letter{sym_gen(sym), sym_inverse(sym) ? -1 : 1});
  }
  return free_reduce(letters);
}

std::string free_reduce_symbols(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!out.empty() && static_cast<Sym>(out.back()) == sym_inv(static_cast<Sym>(c)))
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

bool shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

WordEnumerator::WordEnumerator(int num_generators, std::int64_t max_len)
    : num_generators_(num_generators), max_len_(max_len) {
  if (num_generators < 0) throw InputError("negative generator count");
  if (max_len < 0) throw InputError("negative enumeration length");
}

// Advance cur_ to the next freely reduced string in shortlex order.
bool WordEnumerator::advance() {
  const Sym last_sym = static_cast<Sym>(2 * num_generators_ - 1);
  if (num_generators_ == 0) return false;

  auto valid_at = [&](std::size_t pos, Sym s) {
    return pos == 0 || sym_inv(static_cast<Sym>(cur_[pos - 1])) != s;
  };
  auto fill_min_from = [&](std::size_t pos) {
    for (std::size_t i = pos; i < cur_.size(); ++i) {
      Sym s = 0;
      while (!valid_at(i, s)) ++s;  // at most one skip
      cur_[i] = static_cast<char>(s);
    }
  };

  // Try to bump some position, rightmost first.
  for (std::size_t k = cur_.size(); k-- > 0;) {
    for (Sym s = static_cast<Sym>(cur_[k]) + 1; s <= last_sym; ++s) {
      if (valid_at(k, s)) {
        cur_[k] = static_cast<char>(s);
        fill_min_from(k + 1);
        return true;
      }
    }
  }

  // Grow by one.
  if (static_cast<std::int64_t>(cur_.size()) >= max_len_) return false;
  cur_.assign(cur_.size() + 1, 0);
  fill_min_from(0);
  return true;
}

std::optional<std::string> WordEnumerator::next_symbols() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    cur_.clear();
    return cur_;  // identity
  }
  if (!advance()) {
    done_ = true;
    return std::nullopt;
  }
  return cur_;
}

std::optional<Word> WordEnumerator::next() {
  auto s = next_symbols();
  if (!s) return std::nullopt;
  return from_symbols(*s);
}

std::vector<Word> enumerate_words(int num_generators, std::int64_t max_len) {
  WordEnumerator en(num_generators, max_len);
  std::vector<Word> out;
  while (auto w = en.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace gt2
