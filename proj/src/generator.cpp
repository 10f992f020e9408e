#include "ramond/generator.hpp"

#include <stdexcept>
#include <string>

namespace ramond {

std::string format_generator(const Generator& g) {
  return std::string(g.family == Family::L ? "L(" : "G(") + std::to_string(g.index) + ")";
}

Generator parse_generator(const std::string& text) {
  if (text.size() < 4 || (text[0] != 'L' && text[0] != 'G') || text[1] != '(' ||
      text.back() != ')')
    throw std::invalid_argument("bad generator literal: " + text);
  std::size_t pos = 0;
  long index;
  std::string inner = text.substr(2, text.size() - 3);
  try {
    index = std::stol(inner, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad generator index: " + text);
  }
  if (pos != inner.size()) throw std::invalid_argument("bad generator index: " + text);
  return Generator{text[0] == 'L' ? Family::L : Family::G, index};
}

}  // namespace ramond
