#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ramond/scalar_poly.hpp"
#include "ramond/svector.hpp"
#include "ramond/word.hpp"

namespace ramond {

// Key of a PBW-straightened term: lowering monomial g_i followed by raising
// letters in B sorted ascending by (index, L before G).
struct NormalKey {
  SVector lowering;
  std::vector<Generator> raising;

  bool operator==(const NormalKey&) const = default;
  bool operator<(const NormalKey& other) const {
    if (lowering != other.lowering) return lowering < other.lowering;
    return raising < other.raising;
  }
};

class NormalElement {
 public:
  void add(const NormalKey& key, const ScalarPoly& coeff);
  NormalElement& operator+=(const NormalElement& other);
  NormalElement operator*(const ScalarPoly& s) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<NormalKey, ScalarPoly>& terms() const { return terms_; }
  bool operator==(const NormalElement& other) const { return terms_ == other.terms_; }

 private:
  std::map<NormalKey, ScalarPoly> terms_;
};

// Straightens coeff * w into the unique PBW normal form of the Ramond
// enveloping algebra. Central terms produced by brackets fold into the
// coefficient as multiples of c; squares of odd letters reduce via
// G_a^2 = (1/2)[G_a, G_a].
NormalElement normal_order(const Word& w, const ScalarPoly& coeff = ScalarPoly::one());

std::vector<std::pair<Word, ScalarPoly>> flatten(const NormalElement& e);

// Generic straightening of a word against a letter rank. Swaps adjacent
// letters with rank(x) > rank(y); equal-rank odd letters reduce via the
// half-bracket. Used with the Ramond PBW rank here and the U(B) rank in the
// high-order module.
std::map<std::vector<Generator>, ScalarPoly> straighten_by_rank(
    const std::vector<Generator>& letters, const ScalarPoly& coeff,
    const std::function<long(const Generator&)>& rank);

std::string format_normal_element(const NormalElement& e);

}  // namespace ramond
