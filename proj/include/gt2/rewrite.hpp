#ifndef GT2_REWRITE_HPP
#define GT2_REWRITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gt2/presentation.hpp"
#include "gt2/word.hpp"

namespace gt2 {

struct RewriteRule {
  std::string lhs;  // symbol string, shortlex-greater than rhs
  std::string rhs;

  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

struct KBLimits {
  std::size_t max_rules = 4096;
  std::size_t max_rule_len = 64;
  std::uint64_t max_iterations = 1'000'000;
};

// A shortlex string rewriting system over a generator-and-inverse alphabet.
// Rules always rewrite downward in shortlex order, so every reduction
// terminates. When the system is confluent each group element has a unique
// irreducible representative; a non-confluent (partial) system may still be
// used to prove that a word is trivial, never that it is non-trivial.
class RewriteSystem {
public:
  RewriteSystem(int num_generators, std::vector<RewriteRule> rules,
                std::size_t free_rule_count, bool confluent);

  int num_generators() const { return num_generators_; }
  bool confluent() const { return confluent_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  std::size_t free_rule_count() const { return free_rule_count_; }
  std::size_t non_free_rule_count() const { return rules_.size() - free_rule_count_; }

  std::string reduce_symbols(std::string s) const;
  Word reduce(const Word& w) const;

  // Unique normal form; only meaningful on a confluent system.
  // Throws ContractViolation when the system is not confluent.
  std::string normal_form_symbols(const std::string& s) const;
  Word normal_form(const Word& w) const;

  // Sound for any system: a word reducing to the empty string is trivial.
  bool proves_trivial(const Word& w) const;

private:
  void index_rules();

  int num_generators_;
  std::vector<RewriteRule> rules_;
  std::size_t free_rule_count_;
  bool confluent_;
  std::vector<std::vector<std::size_t>> by_last_;  // rule ids keyed by last lhs symbol
};

// Bounded Knuth-Bendix completion of a group presentation over the fixed
// alphabet order g0 < g0^-1 < g1 < g1^-1 < ...  Free cancellation rules are
// installed first; each relator enters as an equation relator = 1. Exhausting
// a limit is not an error: the partial system comes back marked non-confluent.
RewriteSystem knuth_bendix(const Presentation& p, const KBLimits& limits = {});

}  // namespace gt2

#endif
