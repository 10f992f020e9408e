#pragma once

#include <compare>
#include <string>

namespace ramond {

enum class Family { L, G };

// Basis symbol L(m) or G(m). For the Neveu-Schwarz algebra the half-integer
// G-index p is stored doubled (index = 2p); that encoding is private to
// AlgebraSpec and never leaks into the PBW engine or modules, which are
// Ramond-only.
struct Generator {
  Family family;
  long index;

  auto operator<=>(const Generator&) const = default;
};

inline Generator Lgen(long m) { return Generator{Family::L, m}; }
inline Generator Ggen(long m) { return Generator{Family::G, m}; }

inline int parity(const Generator& g) { return g.family == Family::G ? 1 : 0; }
inline long degree(const Generator& g) { return g.index; }

// Membership in B = R_+ (+) C L_0 (+) C C, as a word letter (C is absorbed
// into ScalarPoly and never appears as a letter).
inline bool in_B(const Generator& g) {
  return g.family == Family::L ? g.index >= 0 : g.index >= 1;
}

std::string format_generator(const Generator& g);
Generator parse_generator(const std::string& text);

}  // namespace ramond
