#pragma once

#include <map>
#include <string>
#include <utility>

#include "ramond/rational.hpp"

namespace ramond {

// Polynomial in the formal central-charge symbol c with rational
// coefficients. This is the coefficient ring for everything: the central
// element C is folded into it as multiplication by c.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(const Rational& constant);
  ScalarPoly(int exponent, const Rational& coeff);

  static ScalarPoly zero() { return ScalarPoly(); }
  static ScalarPoly one() { return ScalarPoly(Rational(1)); }
  static ScalarPoly c(int exponent = 1) { return ScalarPoly(exponent, Rational(1)); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;
  // Degree in c; -1 for the zero polynomial.
  int degree() const;
  Rational coeff(int exponent) const;
  Rational leading_coeff() const;
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  ScalarPoly& operator+=(const ScalarPoly& other);
  ScalarPoly& operator-=(const ScalarPoly& other);
  ScalarPoly operator+(const ScalarPoly& other) const;
  ScalarPoly operator-(const ScalarPoly& other) const;
  ScalarPoly operator-() const;
  ScalarPoly operator*(const ScalarPoly& other) const;
  ScalarPoly operator*(const Rational& s) const;
  bool operator==(const ScalarPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const ScalarPoly& other) const { return !(*this == other); }
  bool operator<(const ScalarPoly& other) const { return coeffs_ < other.coeffs_; }

  Rational eval(const Rational& c_value) const;

 private:
  void set(int exponent, const Rational& value);
  std::map<int, Rational> coeffs_;  // exponent -> nonzero coefficient
};

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<ScalarPoly, ScalarPoly> poly_divmod(const ScalarPoly& a, const ScalarPoly& b);
// Monic gcd; gcd(0,0) = 0.
ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b);

// Grammar: sums of `p/q` and `p/q*c^k` terms, e.g. "-4 - 1/2*c", "c^2 - 1".
std::string format_scalar_poly(const ScalarPoly& p);
ScalarPoly parse_scalar_poly(const std::string& text);

}  // namespace ramond
