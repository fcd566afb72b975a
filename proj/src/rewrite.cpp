#include "gt2/rewrite.hpp"

#include <deque>
#include <utility>

namespace gt2 {

RewriteSystem::RewriteSystem(int num_generators, std::vector<RewriteRule> rules,
                             std::size_t free_rule_count, bool confluent)
    : num_generators_(num_generators),
      rules_(std::move(rules)),
      free_rule_count_(free_rule_count),
      confluent_(confluent) {
  for (const auto& r : rules_)
    if (!shortlex_less(r.rhs, r.lhs))
      throw ContractViolation("rewrite rule does not decrease shortlex order");
  index_rules();
}

void RewriteSystem::index_rules() {
  by_last_.assign(256, {});
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const auto& l = rules_[i].lhs;
    by_last_[static_cast<unsigned char>(l.back())].push_back(i);
  }
}

std::string RewriteSystem::reduce_symbols(std::string s) const {
  std::string out;
  out.reserve(s.size());
  // Pending symbols, top of stack at the back.
  std::string todo(s.rbegin(), s.rend());
  while (!todo.empty()) {
    out.push_back(todo.back());
    todo.pop_back();
    // out was irreducible before the append, so any redex is a suffix
    // ending at the new symbol.
    for (std::size_t idx : by_last_[static_cast<unsigned char>(out.back())]) {
      const auto& rule = rules_[idx];
      if (out.size() >= rule.lhs.size() &&
          out.compare(out.size() - rule.lhs.size(), rule.lhs.size(), rule.lhs) == 0) {
        out.resize(out.size() - rule.lhs.size());
        todo.append(rule.rhs.rbegin(), rule.rhs.rend());
        break;
      }
    }
  }
  return out;
}

Word RewriteSystem::reduce(const Word& w) const {
  if (w.max_generator() >= num_generators_)
    throw InputError("word references a generator outside the rewriting system");
  return from_symbols(reduce_symbols(to_symbols(w)));
}

std::string RewriteSystem::normal_form_symbols(const std::string& s) const {
  if (!confluent_)
    throw ContractViolation("normal_form requires a confluent rewriting system");
  return reduce_symbols(s);
}

Word RewriteSystem::normal_form(const Word& w) const {
  if (!confluent_)
    throw ContractViolation("normal_form requires a confluent rewriting system");
  return reduce(w);
}

bool RewriteSystem::proves_trivial(const Word& w) const {
  return reduce(w).is_identity();
}

namespace {

struct Completion {
  std::vector<RewriteRule> rules;
  std::vector<bool> active;
  std::vector<std::vector<std::size_t>> by_last;
  std::deque<std::pair<std::string, std::string>> equations;
  std::size_t active_count = 0;

  void add_rule(std::string lhs, std::string rhs) {
    std::size_t id = rules.size();
    rules.push_back(RewriteRule{std::move(lhs), std::move(rhs)});
    active.push_back(true);
    ++active_count;
    by_last[static_cast<unsigned char>(rules[id].lhs.back())].push_back(id);
  }

  void deactivate(std::size_t id) {
    active[id] = false;
    --active_count;
    auto& bucket = by_last[static_cast<unsigned char>(rules[id].lhs.back())];
    std::erase(bucket, id);
  }

  std::string reduce(std::string s) const {
    std::string out;
    out.reserve(s.size());
    std::string todo(s.rbegin(), s.rend());
    while (!todo.empty()) {
      out.push_back(todo.back());
      todo.pop_back();
      for (std::size_t idx : by_last[static_cast<unsigned char>(out.back())]) {
        const auto& rule = rules[idx];
        if (out.size() >= rule.lhs.size() &&
            out.compare(out.size() - rule.lhs.size(), rule.lhs.size(), rule.lhs) == 0) {
          out.resize(out.size() - rule.lhs.size());
          todo.append(rule.rhs.rbegin(), rule.rhs.rend());
          break;
        }
      }
    }
    return out;
  }

  // Queue the critical pairs arising from overlaps of lhs(i) with lhs(j):
  // containments of lhs(j) in lhs(i) and proper suffix/prefix overlaps.
  void queue_overlaps(std::size_t i, std::size_t j) {
    const std::string& l1 = rules[i].lhs;
    const std::string& r1 = rules[i].rhs;
    const std::string& l2 = rules[j].lhs;
    const std::string& r2 = rules[j].rhs;

    // lhs(j) occurs inside lhs(i); skip the identical full overlap of a
    // rule with itself, whose pair is trivially (r1, r1).
    if (l2.size() <= l1.size()) {
      for (std::size_t pos = l1.find(l2); pos != std::string::npos;
           pos = l1.find(l2, pos + 1)) {
        if (i == j && pos == 0 && l1.size() == l2.size()) continue;
        std::string other = l1.substr(0, pos) + r2 + l1.substr(pos + l2.size());
        equations.emplace_back(r1, std::move(other));
      }
    }

    // A proper suffix of lhs(i) equals a proper prefix of lhs(j):
    // superposed word l1 + l2[t:] rewrites two ways.
    std::size_t max_t = std::min(l1.size(), l2.size()) - 1;
    for (std::size_t t = 1; t <= max_t; ++t) {
      if (l1.compare(l1.size() - t, t, l2, 0, t) == 0) {
        std::string a = r1 + l2.substr(t);
        std::string b = l1.substr(0, l1.size() - t) + r2;
        equations.emplace_back(std::move(a), std::move(b));
      }
    }
  }
};

}  // namespace

RewriteSystem knuth_bendix(const Presentation& p, const KBLimits& limits) {
  if (limits.max_rules == 0 || limits.max_rule_len == 0 || limits.max_iterations == 0)
    throw InputError("knuth_bendix limits must be positive");

  const int n = p.num_generators();
  Completion c;
  c.by_last.assign(256, {});

  // Free cancellation: g g^-1 -> 1 and g^-1 g -> 1 for every generator.
  for (int g = 0; g < n; ++g) {
    std::string gi(1, static_cast<char>(make_sym(g, false)));
    std::string gv(1, static_cast<char>(make_sym(g, true)));
    c.add_rule(gi + gv, "");
    c.add_rule(gv + gi, "");
  }
  const std::size_t free_rules = c.rules.size();

  for (const auto& r : p.relators())
    c.equations.emplace_back(to_symbols(r), std::string());

  // Free rules only overlap each other trivially, so their pairs are
  // skipped; every later rule queues pairs against all active rules.
  bool complete = true;
  std::uint64_t iterations = 0;
  while (!c.equations.empty()) {
    if (++iterations > limits.max_iterations) {
      complete = false;
      break;
    }
    auto [u, v] = std::move(c.equations.front());
    c.equations.pop_front();
    std::string un = c.reduce(std::move(u));
    std::string vn = c.reduce(std::move(v));
    if (un == vn) continue;
    if (shortlex_less(un, vn)) std::swap(un, vn);

    if (un.size() > limits.max_rule_len) {
      complete = false;
      break;
    }

    std::size_t id = c.rules.size();
    c.add_rule(std::move(un), std::move(vn));
    if (c.active_count > limits.max_rules) {
      complete = false;
      break;
    }

    // Interreduce: requeue rules whose lhs the new rule can rewrite, and
    // simplify right-hand sides in place (rhs only ever moves down).
    const std::string& new_lhs = c.rules[id].lhs;
    for (std::size_t k = 0; k < id; ++k) {
      if (!c.active[k]) continue;
      if (c.rules[k].lhs.find(new_lhs) != std::string::npos) {
        c.deactivate(k);
        c.equations.emplace_back(c.rules[k].lhs, c.rules[k].rhs);
      } else if (c.rules[k].rhs.find(new_lhs) != std::string::npos) {
        c.rules[k].rhs = c.reduce(c.rules[k].rhs);
      }
    }

    for (std::size_t k = 0; k < c.rules.size(); ++k) {
      if (!c.active[k]) continue;
      c.queue_overlaps(id, k);
      if (k != id) c.queue_overlaps(k, id);
    }
  }

  std::vector<RewriteRule> final_rules;
  std::size_t final_free = 0;
  for (std::size_t k = 0; k < c.rules.size(); ++k) {
    if (!c.active[k]) continue;
    if (k < free_rules) ++final_free;
    final_rules.push_back(c.rules[k]);
  }
  return RewriteSystem(n, std::move(final_rules), final_free, complete);
}

}  // namespace gt2
