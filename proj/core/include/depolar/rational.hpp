#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace depolar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-7/4" or "0.125" into an exact rational.
// Decimal input is converted exactly (0.1 becomes 1/10, not a binary float).
Rational parse_rational(const std::string& text);

// Renders q exactly.  If the reduced denominator is of the form 2^a*5^b the
// result is a finite decimal without trailing zeros ("0.9606"), otherwise
// the reduced fraction "p/q".
std::string render_rational(const Rational& q);

}  // namespace depolar
