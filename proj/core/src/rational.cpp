#include "depolar/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "depolar/errors.hpp"

namespace depolar {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// cpp_int's string constructor infers the base from the prefix, so "064"
// would be read as octal.  Strip redundant leading zeros to force base ten.
Int decimal_int(const std::string& s) {
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t j = i;
  while (j + 1 < s.size() && s[j] == '0') ++j;
  return Int((s[0] == '-' ? "-" : "") + s.substr(j));
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  auto first = raw.find_first_not_of(" \t");
  auto last = raw.find_last_not_of(" \t");
  std::string text =
      first == std::string::npos ? "" : raw.substr(first, last - first + 1);
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den))
      throw FormatError("bad rational literal: '" + text + "'");
    Int d = decimal_int(den);
    if (d == 0) throw FormatError("zero denominator in '" + text + "'");
    return Rational(decimal_int(num), d);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head += "0";
    if (!valid_integer(head)) throw FormatError("bad decimal literal: '" + text + "'");
    if (frac.empty()) frac = "0";
    for (char c : frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw FormatError("bad decimal literal: '" + text + "'");
    Int scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Int whole = decimal_int(head);
    Int part = decimal_int(frac);
    Int num = whole * scale + (neg ? -part : part);
    return Rational(num, scale);
  }
  if (!valid_integer(text)) throw FormatError("bad rational literal: '" + text + "'");
  return Rational(decimal_int(text));
}

std::string render_rational(const Rational& q) {
  Int num = numerator(q);
  Int den = denominator(q);
  if (den == 1) return num.str();

  // cpp_rational keeps values reduced with a positive denominator, so the
  // denominator is 2^a*5^b exactly when q has a finite decimal expansion.
  Int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();

  int k = twos > fives ? twos : fives;
  Int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Int scaled = num * (scale / den);
  bool neg = scaled < 0;
  std::string digits = (neg ? -scaled : scaled).str();
  if (static_cast<int>(digits.size()) <= k)
    digits.insert(0, k + 1 - digits.size(), '0');
  digits.insert(digits.size() - k, 1, '.');
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

}  // namespace depolar
