#include "ramond/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace ramond {

LinearCombo& LinearCombo::add(const Generator& g, const ScalarPoly& coeff) {
  auto it = terms.find(g);
  ScalarPoly next = (it == terms.end() ? coeff : it->second + coeff);
  if (next.is_zero())
    terms.erase(g);
  else
    terms[g] = next;
  return *this;
}

LinearCombo& LinearCombo::operator+=(const LinearCombo& other) {
  for (const auto& [g, s] : other.terms) add(g, s);
  central += other.central;
  return *this;
}

LinearCombo LinearCombo::operator*(const ScalarPoly& s) const {
  LinearCombo out;
  if (s.is_zero()) return out;
  for (const auto& [g, v] : terms) out.add(g, v * s);
  out.central = central * s;
  return out;
}

std::string AlgebraSpec::name() const {
  return kind_ == AlgebraKind::Ramond ? "ramond" : "neveu-schwarz";
}

bool AlgebraSpec::in_domain(const Generator& g) const {
  if (kind_ == AlgebraKind::Ramond) return true;
  // NS G-indices are doubled half-integers, hence odd.
  return g.family == Family::L || (g.index % 2 != 0);
}

long AlgebraSpec::grading_degree(const Generator& g) const {
  if (kind_ == AlgebraKind::Ramond) return g.index;
  return g.family == Family::L ? 2 * g.index : g.index;
}

LinearCombo AlgebraSpec::bracket(const Generator& a, const Generator& b) const {
  if (!in_domain(a)) throw std::domain_error("index out of domain: " + format_generator(a));
  if (!in_domain(b)) throw std::domain_error("index out of domain: " + format_generator(b));
  LinearCombo out;
  const Rational cocycle_sign(negate_cocycle_ ? -1 : 1);
  if (a.family == Family::L && b.family == Family::L) {
    const long m = a.index, n = b.index;
    if (n != m) out.add(Lgen(m + n), ScalarPoly(Rational(n - m)));
    if (m + n == 0) {
      // (m^3 - m)/12: the sign that makes the printed GG cocycle
      // (4m^2 - 1)/12 satisfy the super-Jacobi identity on L,G,G triples.
      Rational num = Rational(m) * m * m - m;
      out.central = ScalarPoly(num / 12);
    }
  } else if (a.family == Family::G && b.family == Family::G) {
    if (kind_ == AlgebraKind::Ramond) {
      const long m = a.index, n = b.index;
      out.add(Lgen(m + n), ScalarPoly(Rational(-2)));
      if (m + n == 0) out.central = ScalarPoly(cocycle_sign * Rational(4 * m * m - 1) / 12);
    } else {
      const long k1 = a.index, k2 = b.index;  // doubled half-integers
      out.add(Lgen((k1 + k2) / 2), ScalarPoly(Rational(-2)));
      // 4p^2 - 1 = k1^2 - 1 for p = k1/2
      if (k1 + k2 == 0) out.central = ScalarPoly(cocycle_sign * Rational(k1 * k1 - 1) / 12);
    }
  } else {
    // One L, one G: [L_m, G_n] = (n - m/2) G_{m+n}; the flipped case picks
    // up a minus sign (even-odd pair).
    const bool flipped = a.family == Family::G;
    const Generator& lg = flipped ? b : a;
    const Generator& gg = flipped ? a : b;
    const long m = lg.index;
    Rational coeff;
    Generator result{Family::G, 0};
    if (kind_ == AlgebraKind::Ramond) {
      coeff = Rational(gg.index) - Rational(m) / 2;
      result = Ggen(m + gg.index);
    } else {
      coeff = Rational(gg.index - m) / 2;  // p - m/2 with p = key/2
      result = Ggen(gg.index + 2 * m);
    }
    if (flipped) coeff = -coeff;
    if (coeff != 0) out.add(result, ScalarPoly(coeff));
  }
  return out;
}

LinearCombo AlgebraSpec::bracket(const LinearCombo& a, const Generator& b) const {
  LinearCombo out;
  for (const auto& [g, s] : a.terms) out += bracket(g, b) * s;
  // [C, anything] = 0
  return out;
}

std::vector<Generator> AlgebraSpec::generators_within(long bound) const {
  std::vector<Generator> gens;
  for (long m = -bound; m <= bound; ++m) gens.push_back(Lgen(m));
  if (kind_ == AlgebraKind::Ramond) {
    for (long m = -bound; m <= bound; ++m) gens.push_back(Ggen(m));
  } else {
    for (long k = -(2 * bound - 1); k <= 2 * bound - 1; k += 2) gens.push_back(Ggen(k));
  }
  return gens;
}

JacobiReport check_super_jacobi(const AlgebraSpec& alg, long index_bound) {
  JacobiReport report;
  const auto gens = alg.generators_within(index_bound);
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      const LinearCombo ab = alg.bracket(a, b);
      for (const auto& c : gens) {
        ++report.cases_checked;
        LinearCombo total = alg.bracket(ab, c);
        if ((parity(a) & parity(c)) != 0) total = total * ScalarPoly(Rational(-1));
        LinearCombo bc_a = alg.bracket(alg.bracket(b, c), a);
        if ((parity(b) & parity(a)) != 0) bc_a = bc_a * ScalarPoly(Rational(-1));
        LinearCombo ca_b = alg.bracket(alg.bracket(c, a), b);
        if ((parity(c) & parity(b)) != 0) ca_b = ca_b * ScalarPoly(Rational(-1));
        total += bc_a;
        total += ca_b;
        if (!total.is_zero())
          report.failures.push_back({a, b, c, format_linear_combo(total)});
      }
    }
  }
  return report;
}

std::string format_linear_combo(const LinearCombo& lc) {
  if (lc.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, s] : lc.terms) {
    if (!first) out << " + ";
    if (s.is_constant() && s.coeff(0) == 1)
      out << format_generator(g);
    else if (s.is_constant())
      out << format_rational(s.coeff(0)) << "*" << format_generator(g);
    else
      out << "(" << format_scalar_poly(s) << ")*" << format_generator(g);
    first = false;
  }
  if (!lc.central.is_zero()) {
    if (!first) out << " + ";
    if (lc.central.is_constant())
      out << format_rational(lc.central.coeff(0)) << "*C";
    else
      out << "(" << format_scalar_poly(lc.central) << ")*C";
  }
  return out.str();
}

}  // namespace ramond
