#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramond/generator.hpp"

namespace ramond {

struct Word;

// Finitely supported index vector i = (..., i_2, i_1) from the set S.
// Position 2k-1 holds the exponent of L(-k) (any nonnegative integer);
// position 2k holds the exponent of G(-k+1) (0 or 1).
class SVector {
 public:
  SVector() = default;

  static SVector unit(int pos);  // epsilon_pos

  int value(int pos) const;
  // Throws std::invalid_argument on inadmissible entries.
  void set(int pos, int value);

  bool is_zero() const { return entries_.empty(); }
  int max_pos() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
  int min_nonzero_pos() const;  // 0 for the zero vector

  long weight_W() const;
  long depth_D() const;
  int parity() const;        // sum of even-position entries mod 2
  long z_degree() const { return -weight_W(); }

  // Entry-wise difference when all entries stay admissible; nullopt otherwise.
  std::optional<SVector> subtract(const SVector& other) const;

  const std::map<int, int>& entries() const { return entries_; }

  bool operator==(const SVector& other) const { return entries_ == other.entries_; }
  bool operator!=(const SVector& other) const { return !(*this == other); }
  // Arbitrary container order (for map keys); NOT a paper order.
  bool operator<(const SVector& other) const { return entries_ < other.entries_; }

 private:
  std::map<int, int> entries_;  // position >= 1 -> nonzero value
};

// Definition 2.3: 0 is minimum; otherwise decided by the smallest position
// where the vectors differ.
std::strong_ordering cmp_revlex(const SVector& i, const SVector& j);
// Definition 2.4: W, then D, then reverse lexicographic.
std::strong_ordering cmp_principal(const SVector& i, const SVector& j);

// The monomial g_i of Eq. (2.2), read left to right.
Word monomial_of(const SVector& i);

// All SVectors with W <= weight_cap, in a deterministic order.
std::vector<SVector> enumerate_svectors(long weight_cap);

// Literal `[i1,i2,...]`; zero vector formats as "[0]".
std::string format_svector(const SVector& i);
SVector parse_svector(const std::string& text);

}  // namespace ramond
