#pragma once

#include <map>
#include <string>

#include "ramond/rational.hpp"

namespace ramond {

// Element q(d)/(d-1) of the torsion-free simple module (d-1)^{-1} C[d^{±1}],
// with d the formal variable and the denominator fixed. Only the Laurent
// numerator q is stored.
class LaurentFraction {
 public:
  LaurentFraction() = default;
  static LaurentFraction monomial(int exponent, const Rational& coeff = Rational(1));

  bool is_zero() const { return numerator_.empty(); }
  const std::map<int, Rational>& numerator() const { return numerator_; }
  Rational coeff(int exponent) const;

  LaurentFraction& add(int exponent, const Rational& coeff);
  LaurentFraction operator+(const LaurentFraction& other) const;
  LaurentFraction operator-(const LaurentFraction& other) const;
  LaurentFraction operator*(const Rational& s) const;
  // Multiply the numerator by a Laurent monomial coeff*d^k.
  LaurentFraction shifted(int k, const Rational& coeff = Rational(1)) const;
  // d * d/dd on the numerator.
  LaurentFraction euler_derivative() const;

  bool operator==(const LaurentFraction& other) const { return numerator_ == other.numerator_; }

 private:
  std::map<int, Rational> numerator_;  // exponent -> nonzero coefficient
};

enum class SolvableGen { X, Y };

// x.f = d f' + f/(d^2(d-1)); y.f = d f. On numerators: y: q -> d q;
// x: q -> d q' - (1 + d^{-1} + d^{-2}) q.
LaurentFraction solvable_xy(SolvableGen which, const LaurentFraction& f);

// The paper's x-action computed the long way (clear denominators of
// d f' + f/(d^2(d-1)) over (d-1)); oracle for the closed form above.
LaurentFraction solvable_x_fraction_oracle(const LaurentFraction& f);

std::string format_laurent(const LaurentFraction& f);

}  // namespace ramond
