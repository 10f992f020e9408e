#include "ramond/normal_form.hpp"

#include <sstream>
#include <stack>
#include <stdexcept>

#include "ramond/algebra.hpp"

namespace ramond {

void NormalElement::add(const NormalKey& key, const ScalarPoly& coeff) {
  if (coeff.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalElement& NormalElement::operator+=(const NormalElement& other) {
  for (const auto& [k, v] : other.terms_) add(k, v);
  return *this;
}

NormalElement NormalElement::operator*(const ScalarPoly& s) const {
  NormalElement out;
  for (const auto& [k, v] : terms_) out.add(k, v * s);
  return out;
}

namespace {

// Position of a lowering letter in the set-S indexing.
int lowering_pos(const Generator& g) {
  if (g.family == Family::L) return static_cast<int>(-2 * g.index - 1);  // L_{-k} -> 2k-1
  return static_cast<int>(2 - 2 * g.index);                              // G_{-k+1} -> 2k
}

// PBW rank over the full Ramond algebra: lowering letters in Eq. (2.2)
// order (highest position leftmost), then raising letters ascending by
// (index, L before G).
long pbw_rank(const Generator& g) {
  if (in_B(g)) return 2 * g.index + (g.family == Family::G ? 1 : 0);
  return -lowering_pos(g);
}

}  // namespace

std::map<std::vector<Generator>, ScalarPoly> straighten_by_rank(
    const std::vector<Generator>& letters, const ScalarPoly& coeff,
    const std::function<long(const Generator&)>& rank) {
  const AlgebraSpec alg = AlgebraSpec::ramond();
  std::map<std::vector<Generator>, ScalarPoly> done;
  std::stack<std::pair<std::vector<Generator>, ScalarPoly>> work;
  work.emplace(letters, coeff);
  while (!work.empty()) {
    auto [w, co] = std::move(work.top());
    work.pop();
    if (co.is_zero()) continue;
    // Find the first violation: out-of-order adjacent pair, or an adjacent
    // square of an odd letter.
    std::size_t i = 0;
    bool reduced = false;
    for (; i + 1 < w.size(); ++i) {
      const Generator &x = w[i], &y = w[i + 1];
      if (x == y && parity(x) == 1) {
        // G_a^2 = (1/2)[G_a, G_a]
        LinearCombo br = alg.bracket(x, x);
        for (const auto& [g, s] : br.terms) {
          std::vector<Generator> next(w.begin(), w.begin() + i);
          next.push_back(g);
          next.insert(next.end(), w.begin() + i + 2, w.end());
          work.emplace(std::move(next), co * s * Rational(1, 2));
        }
        if (!br.central.is_zero()) {
          std::vector<Generator> next(w.begin(), w.begin() + i);
          next.insert(next.end(), w.begin() + i + 2, w.end());
          work.emplace(std::move(next), co * (br.central * ScalarPoly::c()) * Rational(1, 2));
        }
        reduced = true;
        break;
      }
      if (rank(x) > rank(y)) {
        // x y = (-1)^{|x||y|} y x + [x,y]
        std::vector<Generator> swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        ScalarPoly sign_co = (parity(x) & parity(y)) ? -co : co;
        work.emplace(std::move(swapped), sign_co);
        LinearCombo br = alg.bracket(x, y);
        for (const auto& [g, s] : br.terms) {
          std::vector<Generator> next(w.begin(), w.begin() + i);
          next.push_back(g);
          next.insert(next.end(), w.begin() + i + 2, w.end());
          work.emplace(std::move(next), co * s);
        }
        if (!br.central.is_zero()) {
          std::vector<Generator> next(w.begin(), w.begin() + i);
          next.insert(next.end(), w.begin() + i + 2, w.end());
          work.emplace(std::move(next), co * (br.central * ScalarPoly::c()));
        }
        reduced = true;
        break;
      }
    }
    if (reduced) continue;
    auto it = done.find(w);
    if (it == done.end()) {
      done.emplace(std::move(w), co);
    } else {
      it->second += co;
      if (it->second.is_zero()) done.erase(it);
    }
  }
  return done;
}

NormalElement normal_order(const Word& w, const ScalarPoly& coeff) {
  NormalElement out;
  for (auto& [letters, co] : straighten_by_rank(w.letters, coeff, pbw_rank)) {
    NormalKey key;
    for (const auto& g : letters) {
      if (in_B(g)) {
        key.raising.push_back(g);
      } else {
        int pos = lowering_pos(g);
        key.lowering.set(pos, key.lowering.value(pos) + 1);
      }
    }
    out.add(key, co);
  }
  return out;
}

std::vector<std::pair<Word, ScalarPoly>> flatten(const NormalElement& e) {
  std::vector<std::pair<Word, ScalarPoly>> out;
  for (const auto& [key, co] : e.terms()) {
    Word w = monomial_of(key.lowering);
    w.letters.insert(w.letters.end(), key.raising.begin(), key.raising.end());
    out.emplace_back(std::move(w), co);
  }
  return out;
}

std::string format_normal_element(const NormalElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Nonconstant terms first (largest key last in map order reversed) so a
  // pure-central remainder prints at the end.
  for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
    const auto& [key, co] = *it;
    if (!first) out << " + ";
    Word w = monomial_of(key.lowering);
    w.letters.insert(w.letters.end(), key.raising.begin(), key.raising.end());
    if (w.letters.empty()) {
      out << format_scalar_poly(co);
    } else if (co.is_constant() || co.coeffs().size() == 1) {
      out << format_scalar_poly(co) << "*" << format_word(w);
    } else {
      out << "(" << format_scalar_poly(co) << ")*" << format_word(w);
    }
    first = false;
  }
  return out.str();
}

}  // namespace ramond
