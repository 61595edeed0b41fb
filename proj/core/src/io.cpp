#include "depolar/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "depolar/errors.hpp"

namespace depolar {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> parts;
  std::string word;
  while (in >> word) parts.push_back(word);
  return parts;
}

}  // namespace

void validate_names(const std::vector<std::string>& names) {
  std::map<std::string, int> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const std::string& n = names[i];
    if (n.empty()) throw FormatError("empty variable name");
    if (std::isdigit(static_cast<unsigned char>(n[0])))
      throw FormatError("variable name '" + n + "' starts with a digit");
    for (char c : n)
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '^' ||
          c == '#')
        throw FormatError("variable name '" + n + "' contains '" +
                          std::string(1, c) + "'");
    if (!seen.emplace(n, i).second)
      throw FormatError("duplicate variable name '" + n + "'");
  }
}

std::vector<std::string> default_names(int num_vars) {
  std::vector<std::string> names;
  names.reserve(num_vars);
  for (int i = 1; i <= num_vars; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

Monomial parse_monomial(const std::string& text,
                        const std::vector<std::string>& names, int line) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i)
    index[names[i]] = static_cast<int>(i);

  std::vector<int> exps(names.size(), 0);
  std::string body = trimmed(text);
  if (body.empty()) throw FormatError("empty monomial", line);
  if (body == "1") return Monomial(std::move(exps));

  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t star = body.find('*', pos);
    std::string factor =
        trimmed(body.substr(pos, star == std::string::npos ? star : star - pos));
    if (factor.empty())
      throw FormatError("empty factor in monomial '" + body + "'", line);
    std::string name = factor;
    int power = 1;
    std::size_t caret = factor.find('^');
    if (caret != std::string::npos) {
      name = trimmed(factor.substr(0, caret));
      std::string exp = trimmed(factor.substr(caret + 1));
      if (exp.empty() ||
          exp.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("bad exponent in factor '" + factor + "'", line);
      power = std::stoi(exp);
      if (power < 1)
        throw FormatError("exponent must be positive in '" + factor + "'",
                          line);
    }
    auto it = index.find(name);
    if (it == index.end())
      throw FormatError("unknown variable '" + name + "'", line);
    exps[it->second] += power;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exps));
}

std::string monomial_to_string(const Monomial& m,
                               const std::vector<std::string>& names) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    out << names[i];
    if (m[i] > 1) out << "^" << m[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

NamedIdeal read_ideal(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::vector<std::string> names;
  bool have_vars = false;
  std::vector<Monomial> gens;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trimmed(line);
    if (body.empty() || body[0] == '#') continue;
    if (!have_vars) {
      if (body.rfind("vars:", 0) != 0)
        throw FormatError("expected 'vars:' header", lineno);
      names = split_ws(body.substr(5));
      if (names.empty()) throw FormatError("no variables declared", lineno);
      try {
        validate_names(names);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), lineno);
      }
      have_vars = true;
      continue;
    }
    gens.push_back(parse_monomial(body, names, lineno));
  }
  if (!have_vars) throw FormatError("missing 'vars:' header");
  return NamedIdeal{names,
                    MonomialIdeal(static_cast<int>(names.size()), std::move(gens))};
}

NamedIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  try {
    return read_ideal(in);
  } catch (FormatError& e) {
    throw FormatError(path + ":" + std::to_string(e.line()) + ": " + e.what(),
                      e.line());
  }
}

void write_ideal(std::ostream& out, const NamedIdeal& ni) {
  out << "vars:";
  for (const std::string& n : ni.names) out << " " << n;
  out << "\n";
  for (const Monomial& g : ni.ideal.generators())
    out << monomial_to_string(g, ni.names) << "\n";
}

std::string ideal_to_string(const NamedIdeal& ni) {
  std::ostringstream out;
  write_ideal(out, ni);
  return out.str();
}

}  // namespace depolar
