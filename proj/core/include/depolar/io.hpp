#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "depolar/monomial.hpp"

namespace depolar {

// An ideal together with its variable names, as read from or written to the
// text format:
//
//   vars: x y z t
//   z*t
//   y*z
//   y^2
//   x*z
//   x*y
//
// The first non-comment line declares the variables; every following
// non-empty line is one generator, written as '*'-separated powers.  Lines
// starting with '#' are ignored.  Writing always emits the minimal
// generating set in canonical (ascending lexicographic) order, so files
// round-trip byte for byte.
struct NamedIdeal {
  std::vector<std::string> names;
  MonomialIdeal ideal;
};

NamedIdeal read_ideal(std::istream& in);
NamedIdeal read_ideal_file(const std::string& path);
void write_ideal(std::ostream& out, const NamedIdeal& ideal);
std::string ideal_to_string(const NamedIdeal& ideal);

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>& names);
Monomial parse_monomial(const std::string& text,
                        const std::vector<std::string>& names, int line = 0);

// x1, x2, ..., xn.
std::vector<std::string> default_names(int num_vars);

// Validates that names are unique, non-empty, and usable in the text format
// (no whitespace, '*', '^', '#' or leading digit).
void validate_names(const std::vector<std::string>& names);

}  // namespace depolar
