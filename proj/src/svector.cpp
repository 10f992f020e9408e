#include "ramond/svector.hpp"

#include <sstream>
#include <stdexcept>

#include "ramond/word.hpp"

namespace ramond {

SVector SVector::unit(int pos) {
  SVector v;
  v.set(pos, 1);
  return v;
}

int SVector::value(int pos) const {
  auto it = entries_.find(pos);
  return it == entries_.end() ? 0 : it->second;
}

void SVector::set(int pos, int value) {
  if (pos < 1) throw std::invalid_argument("svector position must be >= 1");
  if (value < 0) throw std::invalid_argument("negative svector entry");
  if (pos % 2 == 0 && value > 1)
    throw std::invalid_argument("even-position entry must be 0 or 1");
  if (value == 0)
    entries_.erase(pos);
  else
    entries_[pos] = value;
}

int SVector::min_nonzero_pos() const {
  return entries_.empty() ? 0 : entries_.begin()->first;
}

long SVector::weight_W() const {
  long w = 0;
  for (const auto& [pos, v] : entries_) {
    if (pos % 2 == 1)
      w += static_cast<long>((pos + 1) / 2) * v;  // position 2k-1: weight k each
    else
      w += static_cast<long>(pos / 2 - 1) * v;    // position 2k: weight k-1 each
  }
  return w;
}

long SVector::depth_D() const {
  long d = 0;
  for (const auto& [pos, v] : entries_) d += v;
  return d;
}

int SVector::parity() const {
  int p = 0;
  for (const auto& [pos, v] : entries_)
    if (pos % 2 == 0) p ^= (v & 1);
  return p;
}

std::optional<SVector> SVector::subtract(const SVector& other) const {
  SVector out = *this;
  for (const auto& [pos, v] : other.entries_) {
    int next = out.value(pos) - v;
    if (next < 0) return std::nullopt;
    if (next == 0)
      out.entries_.erase(pos);
    else
      out.entries_[pos] = next;
  }
  return out;
}

std::strong_ordering cmp_revlex(const SVector& i, const SVector& j) {
  // Scan positions ascending; the first difference decides.
  auto it = i.entries().begin(), jt = j.entries().begin();
  while (it != i.entries().end() && jt != j.entries().end()) {
    if (it->first != jt->first) {
      // The vector with an entry at the smaller position is larger there.
      return it->first < jt->first ? std::strong_ordering::greater
                                   : std::strong_ordering::less;
    }
    if (it->second != jt->second)
      return it->second > jt->second ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    ++it;
    ++jt;
  }
  if (it != i.entries().end()) return std::strong_ordering::greater;
  if (jt != j.entries().end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_principal(const SVector& i, const SVector& j) {
  if (auto c = i.weight_W() <=> j.weight_W(); c != 0) return c;
  if (auto c = i.depth_D() <=> j.depth_D(); c != 0) return c;
  return cmp_revlex(i, j);
}

Word monomial_of(const SVector& i) {
  Word w;
  // Left to right: highest position first (Eq. 2.2 reads ... G_{-k+1} L_{-k} ...).
  for (auto it = i.entries().rbegin(); it != i.entries().rend(); ++it) {
    const auto [pos, count] = *it;
    Generator g = pos % 2 == 1 ? Lgen(-(pos + 1) / 2) : Ggen(-(pos / 2 - 1));
    for (int n = 0; n < count; ++n) w.letters.push_back(g);
  }
  return w;
}

namespace {

void enumerate_rec(const std::vector<std::pair<int, long>>& positions, std::size_t idx,
                   long budget, SVector& current, std::vector<SVector>& out) {
  if (idx == positions.size()) {
    out.push_back(current);
    return;
  }
  const auto [pos, unit_weight] = positions[idx];
  const int max_count = pos % 2 == 0 ? 1 : (unit_weight == 0 ? 0 : static_cast<int>(budget / unit_weight));
  for (int count = 0; count <= max_count; ++count) {
    long cost = unit_weight * count;
    if (cost > budget) break;
    if (count > 0) current.set(pos, count);
    enumerate_rec(positions, idx + 1, budget - cost, current, out);
    if (count > 0) current.set(pos, 0);
  }
}

}  // namespace

std::vector<SVector> enumerate_svectors(long weight_cap) {
  // Positions with unit weight <= cap: odd 2k-1 (weight k), even 2k (weight k-1).
  std::vector<std::pair<int, long>> positions;
  for (long k = 1; k <= weight_cap; ++k) positions.emplace_back(static_cast<int>(2 * k - 1), k);
  for (long k = 1; k - 1 <= weight_cap; ++k) positions.emplace_back(static_cast<int>(2 * k), k - 1);
  std::vector<SVector> out;
  SVector current;
  enumerate_rec(positions, 0, weight_cap, current, out);
  return out;
}

std::string format_svector(const SVector& i) {
  if (i.is_zero()) return "[0]";
  std::ostringstream out;
  out << "[";
  const int top = i.max_pos();
  for (int pos = 1; pos <= top; ++pos) {
    if (pos > 1) out << ",";
    out << i.value(pos);
  }
  out << "]";
  return out.str();
}

SVector parse_svector(const std::string& text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string::npos || text[b] != '[' || text[e] != ']')
    throw std::invalid_argument("bad svector literal: " + text);
  std::string inner = text.substr(b + 1, e - b - 1);
  SVector v;
  if (inner.find_first_not_of(" \t") == std::string::npos) return v;
  std::istringstream in(inner);
  std::string tok;
  int pos = 1;
  while (std::getline(in, tok, ',')) {
    int value;
    try {
      value = std::stoi(tok);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad svector entry: " + tok);
    }
    v.set(pos++, value);  // set() enforces admissibility
  }
  return v;
}

}  // namespace ramond
