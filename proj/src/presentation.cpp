#include "gt2/presentation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace gt2 {

namespace {

bool valid_generator_name(const std::string& s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::islower(static_cast<unsigned char>(c)) && !std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names) {
  for (auto& n : generator_names) add_generator(n);
}

int Presentation::add_generator(const std::string& name) {
  if (!valid_generator_name(name))
    throw InputError("invalid generator name '" + name + "'");
  if (generator_id(name) >= 0)
    throw InputError("duplicate generator name '" + name + "'");
  int id = static_cast<int>(generators_.size());
  generators_.push_back(Generator{id, name});
  return id;
}

void Presentation::add_relator(Word w) {
  check_word(w);
  relators_.push_back(std::move(w));
}

int Presentation::generator_id(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return g.id;
  return -1;
}

const std::string& Presentation::generator_name(int id) const {
  if (id < 0 || id >= num_generators())
    throw InputError("generator id out of range");
  return generators_[static_cast<std::size_t>(id)].name;
}

void Presentation::check_word(const Word& w) const {
  if (w.max_generator() >= num_generators())
    throw InputError("word references a generator outside the presentation");
}

std::string print_word(const Presentation& p, const Word& w) {
  if (w.is_identity()) return "1";
  std::string out;
  bool first = true;
  for (const auto& l : w.letters()) {
    if (!first) out += '*';
    first = false;
    out += p.generator_name(l.gen);
    if (l.exp != 1) out += '^' + std::to_string(l.exp);
  }
  return out;
}

Word parse_word(const Presentation& p, const std::string& text) {
  if (text.empty()) throw InputError("empty word text");
  if (text == "1") return Word();
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != '*' && text[pos] != '^') ++pos;
    std::string name = text.substr(start, pos - start);
    int id = p.generator_id(name);
    if (id < 0) throw InputError("unknown generator '" + name + "' in word");
    std::int64_t exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t estart = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      auto sv = text.substr(estart, pos - estart);
      auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), exp);
      if (ec != std::errc() || ptr != sv.data() + sv.size() || exp == 0)
        throw InputError("bad exponent in word '" + text + "'");
    }
    letters.push_back(Letter{id, exp});
    if (pos < text.size()) {
      if (text[pos] != '*') throw InputError("expected '*' in word '" + text + "'");
      ++pos;
      if (pos == text.size()) throw InputError("trailing '*' in word '" + text + "'");
    }
  }
  return free_reduce(letters);
}

std::string print_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators()) out += ' ' + g.name;
  out += '\n';
  for (const auto& r : p.relators()) out += "rel: " + print_word(p, r) + '\n';
  return out;
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  bool saw_gens = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (!saw_gens) {
      if (line.rfind("gens:", 0) != 0)
        throw InputError("line " + std::to_string(lineno) + ": expected 'gens:' header");
      std::istringstream fields(line.substr(5));
      std::string name;
      while (fields >> name) p.add_generator(name);
      saw_gens = true;
    } else {
      if (line.rfind("rel: ", 0) != 0)
        throw InputError("line " + std::to_string(lineno) + ": expected 'rel: <word>'");
      p.add_relator(parse_word(p, line.substr(5)));
    }
  }
  if (!saw_gens) throw InputError("presentation text has no 'gens:' line");
  return p;
}

}  // namespace gt2
