#ifndef GT2_PRESENTATION_HPP
#define GT2_PRESENTATION_HPP

#include <string>
#include <vector>

#include "gt2/word.hpp"

namespace gt2 {

struct Generator {
  int id = 0;
  std::string name;

  friend bool operator==(const Generator&, const Generator&) = default;
};

// A finite group presentation: a generator table plus freely reduced relators.
class Presentation {
public:
  Presentation() = default;
  explicit Presentation(std::vector<std::string> generator_names);

  int add_generator(const std::string& name);
  void add_relator(Word w);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  int num_generators() const { return static_cast<int>(generators_.size()); }

  int generator_id(const std::string& name) const;  // -1 when absent
  const std::string& generator_name(int id) const;

  // Throws InputError if w references a generator outside the table.
  void check_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  std::vector<Generator> generators_;
  std::vector<Word> relators_;
};

// Word text format: terms `name` or `name^int` joined by `*`; the identity
// prints as `1`. Example: a^-1*b^2*a.
std::string print_word(const Presentation& p, const Word& w);
Word parse_word(const Presentation& p, const std::string& text);

// Presentation file format:
//   gens: a b c
//   rel: a^-1*b^2*a
// One relator per `rel:` line; blank lines are ignored.
std::string print_presentation(const Presentation& p);
Presentation parse_presentation(const std::string& text);

}  // namespace gt2

#endif
