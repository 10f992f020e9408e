#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ramond {

using Integer = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& r);

}  // namespace ramond
