#pragma once

#include <string>
#include <vector>

#include "ramond/generator.hpp"

namespace ramond {

// A word in U(R): a finite sequence of letters, leftmost applied last.
struct Word {
  std::vector<Generator> letters;

  bool operator==(const Word&) const = default;
};

long word_degree(const Word& w);
int word_parity(const Word& w);

// Grammar: whitespace-separated letters, e.g. "L(-2) G(0) L(-1)".
std::string format_word(const Word& w);
Word parse_word(const std::string& text);

}  // namespace ramond
