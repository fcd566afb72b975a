#include "gt2/extension.hpp"

#include <atomic>

#include "gt2/bigint.hpp"

namespace gt2 {

namespace {
std::atomic<int> next_group_tag{1};
}

ExtensionGroup::ExtensionGroup(const SeifertData& d)
    : tag_(next_group_tag.fetch_add(1)), data_(d) {
  d.validate();
  if (d.boundary_count < 1)
    throw InputError("extension backend needs a Seifert piece with boundary");

  pres_ = seifert_presentation(d);
  SeifertGenerators lay = seifert_generators(d);
  h_gen_ = lay.h_gen();
  eliminated_gen_ = lay.boundary_gen(d.boundary_count - 1);

  pres_to_q_.assign(static_cast<std::size_t>(pres_.num_generators()), -1);

  // Exceptional fibers first so the alphabet mirrors Z/p1 * ... * Z/pn * F_r.
  for (int i = 0; i < lay.num_fibers; ++i) {
    const auto& f = d.fibers[static_cast<std::size_t>(i)];
    pres_to_q_[static_cast<std::size_t>(lay.fiber_gen(i))] =
        static_cast<int>(alphabet_.size());
    alphabet_.push_back(QGenerator{pres_.generator_name(lay.fiber_gen(i)), f.p, f.alpha, 1});
  }
  for (int i = 0; i < lay.num_base; ++i) {
    int character = d.base_orientable ? 1 : -1;
    pres_to_q_[static_cast<std::size_t>(lay.base_gen(i))] =
        static_cast<int>(alphabet_.size());
    alphabet_.push_back(QGenerator{pres_.generator_name(lay.base_gen(i)), 0, 0, character});
    ++free_rank_;
  }
  for (int i = 0; i + 1 < d.boundary_count; ++i) {
    pres_to_q_[static_cast<std::size_t>(lay.boundary_gen(i))] =
        static_cast<int>(alphabet_.size());
    alphabet_.push_back(QGenerator{pres_.generator_name(lay.boundary_gen(i)), 0, 0, 1});
    ++free_rank_;
  }

  // Long relator: prefix * d_k = h^b, so d_k = prefix^-1 h^b.
  ExtensionElement prefix;
  if (d.base_orientable) {
    for (int i = 0; i < d.base_genus; ++i) {
      int a = pres_to_q_[static_cast<std::size_t>(lay.base_gen(2 * i))];
      int b = pres_to_q_[static_cast<std::size_t>(lay.base_gen(2 * i + 1))];
      append_generator(prefix, a, -1);
      append_generator(prefix, b, -1);
      append_generator(prefix, a, 1);
      append_generator(prefix, b, 1);
    }
  } else {
    for (int i = 0; i < d.base_genus; ++i)
      append_generator(prefix, pres_to_q_[static_cast<std::size_t>(lay.base_gen(i))], 2);
  }
  for (int i = 0; i < lay.num_fibers; ++i)
    append_generator(prefix, pres_to_q_[static_cast<std::size_t>(lay.fiber_gen(i))], 1);
  for (int i = 0; i + 1 < d.boundary_count; ++i)
    append_generator(prefix, pres_to_q_[static_cast<std::size_t>(lay.boundary_gen(i))], 1);
  eliminated_value_ = inv(prefix);
  append_fiber(eliminated_value_, d.euler_b);
}

std::vector<int> ExtensionGroup::cyclic_orders() const {
  std::vector<int> out;
  for (const auto& g : alphabet_)
    if (g.cyclic()) out.push_back(g.order);
  return out;
}

int ExtensionGroup::character(const ExtensionElement& x) const {
  int chi = 1;
  for (const auto& s : x.orb) {
    const auto& g = alphabet_[static_cast<std::size_t>(s.gen)];
    if (g.character == -1 && (s.exp % 2 != 0)) chi = -chi;
  }
  return chi;
}

// Multiply e on the right by qgen^exp, restoring the normal form. The
// fiber exponent crosses qgen^exp first (twisting by its character), then
// the syllable merges; a cyclic wrap of q full turns charges q*alpha.
void ExtensionGroup::append_generator(ExtensionElement& e, int qgen, std::int64_t exp) const {
  if (exp == 0) return;
  const QGenerator& g = alphabet_[static_cast<std::size_t>(qgen)];

  if (g.character == -1 && (exp % 2 != 0)) e.fib = checked_neg(e.fib);

  std::int64_t total = exp;
  if (!e.orb.empty() && e.orb.back().gen == qgen) {
    total = checked_add(total, e.orb.back().exp);
    e.orb.pop_back();
  }
  if (g.cyclic()) {
    // Reduce into (-p/2, p/2], charging alpha per wrap.
    std::int64_t p = g.order;
    std::int64_t m = total % p;
    if (2 * m > p) m -= p;
    if (2 * m <= -p) m += p;
    std::int64_t wraps = (total - m) / p;
    if (wraps != 0) e.fib = checked_add(e.fib, checked_mul(wraps, g.alpha));
    total = m;
  }
  if (total != 0) e.orb.push_back(ExtSyllable{qgen, total});
}

void ExtensionGroup::append_fiber(ExtensionElement& e, std::int64_t exp) const {
  e.fib = checked_add(e.fib, exp);
}

void ExtensionGroup::check_member(const ExtensionElement& e) const {
  if (e.group_tag != 0 && e.group_tag != tag_)
    throw ContractViolation("extension element belongs to a different group");
}

ExtensionElement ExtensionGroup::mul(const ExtensionElement& x, const ExtensionElement& y) const {
  check_member(x);
  check_member(y);
  ExtensionElement out = x;
  for (const auto& s : y.orb) append_generator(out, s.gen, s.exp);
  append_fiber(out, y.fib);
  out.group_tag = tag_;
  return out;
}

ExtensionElement ExtensionGroup::inv(const ExtensionElement& x) const {
  check_member(x);
  ExtensionElement out;
  for (auto it = x.orb.rbegin(); it != x.orb.rend(); ++it)
    append_generator(out, it->gen, checked_neg(it->exp));
  // (w h^e)^-1 = w^-1 h^{-chi(w) e}
  append_fiber(out, character(x) == 1 ? checked_neg(x.fib) : x.fib);
  out.group_tag = tag_;
  return out;
}

ExtensionElement ExtensionGroup::conj(const ExtensionElement& g, const ExtensionElement& x) const {
  return mul(mul(inv(x), g), x);
}

ExtensionElement ExtensionGroup::eval(const Word& w) const {
  pres_.check_word(w);
  ExtensionElement out;
  for (const auto& l : w.letters()) {
    if (l.gen == h_gen_) {
      append_fiber(out, l.exp);
    } else if (l.gen == eliminated_gen_) {
      ExtensionElement d = l.exp > 0 ? eliminated_value_ : inv(eliminated_value_);
      std::int64_t k = l.exp > 0 ? l.exp : checked_neg(l.exp);
      for (std::int64_t i = 0; i < k; ++i) out = mul(out, d);
    } else {
      append_generator(out, pres_to_q_[static_cast<std::size_t>(l.gen)], l.exp);
    }
  }
  return out;
}

std::string ExtensionGroup::print(const ExtensionElement& x) const {
  std::string orb;
  if (x.orb.empty()) {
    orb = "1";
  } else {
    bool first = true;
    for (const auto& s : x.orb) {
      if (!first) orb += '*';
      first = false;
      orb += alphabet_[static_cast<std::size_t>(s.gen)].name;
      if (s.exp != 1) orb += '^' + std::to_string(s.exp);
    }
  }
  return "(" + orb + ", h^" + std::to_string(x.fib) + ")";
}

ExtensionGroup extension_from_seifert(const SeifertData& d) { return ExtensionGroup(d); }

}  // namespace gt2
