#include "ramond/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace ramond {

LaurentFraction LaurentFraction::monomial(int exponent, const Rational& coeff) {
  LaurentFraction f;
  f.add(exponent, coeff);
  return f;
}

Rational LaurentFraction::coeff(int exponent) const {
  auto it = numerator_.find(exponent);
  return it == numerator_.end() ? Rational(0) : it->second;
}

LaurentFraction& LaurentFraction::add(int exponent, const Rational& coeff) {
  if (coeff == 0) return *this;
  auto it = numerator_.find(exponent);
  if (it == numerator_.end()) {
    numerator_.emplace(exponent, coeff);
    return *this;
  }
  it->second += coeff;
  if (it->second == 0) numerator_.erase(it);
  return *this;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& other) const {
  LaurentFraction out = *this;
  for (const auto& [e, v] : other.numerator_) out.add(e, v);
  return out;
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& other) const {
  LaurentFraction out = *this;
  for (const auto& [e, v] : other.numerator_) out.add(e, -v);
  return out;
}

LaurentFraction LaurentFraction::operator*(const Rational& s) const {
  LaurentFraction out;
  if (s == 0) return out;
  for (const auto& [e, v] : numerator_) out.numerator_.emplace(e, v * s);
  return out;
}

LaurentFraction LaurentFraction::shifted(int k, const Rational& coeff) const {
  LaurentFraction out;
  if (coeff == 0) return out;
  for (const auto& [e, v] : numerator_) out.numerator_.emplace(e + k, v * coeff);
  return out;
}

LaurentFraction LaurentFraction::euler_derivative() const {
  LaurentFraction out;
  for (const auto& [e, v] : numerator_) out.add(e, v * Rational(e));
  return out;
}

LaurentFraction solvable_xy(SolvableGen which, const LaurentFraction& f) {
  if (which == SolvableGen::Y) return f.shifted(1);
  // x: q -> d q' - (1 + d^{-1} + d^{-2}) q
  LaurentFraction out = f.euler_derivative();
  out = out - f - f.shifted(-1) - f.shifted(-2);
  return out;
}

LaurentFraction solvable_x_fraction_oracle(const LaurentFraction& f) {
  // x.(q/(d-1)) = d (q/(d-1))' + q/(d^2(d-1)^2), then put back over (d-1):
  // numerator = d q' - d q/(d-1) + q/(d^2(d-1))
  //           = d q' - q (d^3 - 1)/(d^2(d-1)) = d q' - q (1 + d^{-1} + d^{-2}).
  // Here we compute q (d^3 - 1)/(d - 1) by exact Laurent division and shift.
  LaurentFraction times = f.shifted(3) - f;  // q (d^3 - 1)
  // Divide times by (d - 1), exactly (d^3 - 1 is divisible).
  LaurentFraction quotient;
  while (!times.is_zero()) {
    auto it = times.numerator().rbegin();
    const int e = it->first;
    const Rational v = it->second;
    quotient.add(e - 1, v);
    times.add(e, -v);
    times.add(e - 1, v);
  }
  return f.euler_derivative() - quotient.shifted(-2);
}

std::string format_laurent(const LaurentFraction& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, v] : f.numerator()) {
    if (!first) out << " + ";
    if (e == 0) {
      out << format_rational(v);
    } else {
      if (v != 1) out << format_rational(v) << "*";
      out << "d^" << e;
    }
    first = false;
  }
  out << " / (d-1)";
  return out.str();
}

}  // namespace ramond
