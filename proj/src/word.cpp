#include "ramond/word.hpp"

#include <sstream>

namespace ramond {

long word_degree(const Word& w) {
  long d = 0;
  for (const auto& g : w.letters) d += degree(g);
  return d;
}

int word_parity(const Word& w) {
  int p = 0;
  for (const auto& g : w.letters) p ^= parity(g);
  return p;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << " ";
    out << format_generator(w.letters[i]);
  }
  return out.str();
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) w.letters.push_back(parse_generator(tok));
  return w;
}

}  // namespace ramond
