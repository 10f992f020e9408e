#include "ramond/scalar_poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ramond {

ScalarPoly::ScalarPoly(const Rational& constant) { set(0, constant); }

ScalarPoly::ScalarPoly(int exponent, const Rational& coeff) {
  if (exponent < 0) throw std::invalid_argument("negative c-exponent");
  set(exponent, coeff);
}

bool ScalarPoly::is_constant() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0);
}

int ScalarPoly::degree() const {
  return coeffs_.empty() ? -1 : coeffs_.rbegin()->first;
}

Rational ScalarPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational ScalarPoly::leading_coeff() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.rbegin()->second;
}

void ScalarPoly::set(int exponent, const Rational& value) {
  if (value == 0)
    coeffs_.erase(exponent);
  else
    coeffs_[exponent] = value;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& other) {
  for (const auto& [k, v] : other.coeffs_) set(k, coeff(k) + v);
  return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& other) {
  for (const auto& [k, v] : other.coeffs_) set(k, coeff(k) - v);
  return *this;
}

ScalarPoly ScalarPoly::operator+(const ScalarPoly& other) const {
  ScalarPoly out = *this;
  out += other;
  return out;
}

ScalarPoly ScalarPoly::operator-(const ScalarPoly& other) const {
  ScalarPoly out = *this;
  out -= other;
  return out;
}

ScalarPoly ScalarPoly::operator-() const {
  ScalarPoly out;
  for (const auto& [k, v] : coeffs_) out.coeffs_[k] = -v;
  return out;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& other) const {
  ScalarPoly out;
  for (const auto& [ka, va] : coeffs_)
    for (const auto& [kb, vb] : other.coeffs_) out.set(ka + kb, out.coeff(ka + kb) + va * vb);
  return out;
}

ScalarPoly ScalarPoly::operator*(const Rational& s) const {
  ScalarPoly out;
  if (s == 0) return out;
  for (const auto& [k, v] : coeffs_) out.coeffs_[k] = v * s;
  return out;
}

Rational ScalarPoly::eval(const Rational& c_value) const {
  Rational acc(0);
  for (const auto& [k, v] : coeffs_) {
    Rational p(1);
    for (int i = 0; i < k; ++i) p *= c_value;
    acc += v * p;
  }
  return acc;
}

std::pair<ScalarPoly, ScalarPoly> poly_divmod(const ScalarPoly& a, const ScalarPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  ScalarPoly q, r = a;
  const int db = b.degree();
  const Rational lb = b.leading_coeff();
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rational f = r.leading_coeff() / lb;
    ScalarPoly t(k, f);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

ScalarPoly poly_gcd(ScalarPoly a, ScalarPoly b) {
  while (!b.is_zero()) {
    // Keep the remainder sequence monic: a naive Euclidean sequence suffers
    // exponential coefficient growth over Q.
    if (b.leading_coeff() != 1) b = b * (Rational(1) / b.leading_coeff());
    ScalarPoly r = poly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (Rational(1) / a.leading_coeff());
}

std::string format_scalar_poly(const ScalarPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : p.coeffs()) {
    Rational a = v;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (k == 0) {
      out << format_rational(a);
    } else {
      if (a != 1) out << format_rational(a) << "*";
      out << "c";
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

namespace {

// One term of the grammar: "p/q", "p/q*c^k", "c^k", "c".
std::pair<int, Rational> parse_poly_term(const std::string& term) {
  auto cpos = term.find('c');
  if (cpos == std::string::npos) return {0, parse_rational(term)};
  int exponent = 1;
  std::string after = term.substr(cpos + 1);
  if (!after.empty()) {
    if (after[0] != '^') throw std::invalid_argument("bad poly term: " + term);
    exponent = std::stoi(after.substr(1));
    if (exponent < 0) throw std::invalid_argument("bad poly term: " + term);
  }
  std::string before = term.substr(0, cpos);
  while (!before.empty() && std::isspace(static_cast<unsigned char>(before.back())))
    before.pop_back();
  if (!before.empty() && before.back() == '*') before.pop_back();
  while (!before.empty() && std::isspace(static_cast<unsigned char>(before.back())))
    before.pop_back();
  Rational coeff(1);
  if (before == "-")
    coeff = -1;
  else if (!before.empty() && before != "+")
    coeff = parse_rational(before);
  return {exponent, coeff};
}

}  // namespace

ScalarPoly parse_scalar_poly(const std::string& text) {
  ScalarPoly out;
  std::string term;
  int sign = 1;
  bool any = false;
  auto flush = [&] {
    // trim
    std::size_t b = term.find_first_not_of(" \t");
    if (b == std::string::npos) {
      term.clear();
      return;
    }
    std::size_t e = term.find_last_not_of(" \t");
    auto [k, v] = parse_poly_term(term.substr(b, e - b + 1));
    out += ScalarPoly(k, v * sign);
    any = true;
    term.clear();
  };
  for (char ch : text) {
    bool in_term = term.find_first_not_of(" \t") != std::string::npos;
    if ((ch == '+' || ch == '-') && in_term) {
      flush();
      sign = (ch == '-') ? -1 : 1;
    } else if ((ch == '+' || ch == '-') && !in_term) {
      if (ch == '-') sign = -sign;
    } else {
      term += ch;
    }
  }
  flush();
  if (!any) throw std::invalid_argument("empty polynomial literal: " + text);
  return out;
}

}  // namespace ramond
