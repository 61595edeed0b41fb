#include "depolar/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace depolar {

MultigradedPolynomial MultigradedPolynomial::term(Monomial m, Int coeff) {
  MultigradedPolynomial p(m.num_vars());
  if (coeff != 0) p.terms_.emplace_back(std::move(m), std::move(coeff));
  return p;
}

MultigradedPolynomial MultigradedPolynomial::from_terms(int num_vars,
                                                        std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  MultigradedPolynomial p(num_vars);
  p.terms_.reserve(terms.size());
  for (Term& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else if (t.second != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Int MultigradedPolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

void MultigradedPolynomial::add_term(Monomial m, Int coeff) {
  if (coeff == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, Term(std::move(m), std::move(coeff)));
  }
}

namespace {

// Merge two term lists sorted by multidegree, scaling the second by sign.
std::vector<MultigradedPolynomial::Term> merge(
    const std::vector<MultigradedPolynomial::Term>& a,
    const std::vector<MultigradedPolynomial::Term>& b, int sign) {
  std::vector<MultigradedPolynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else if (b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      Int c = a[i].second + sign * b[j].second;
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.emplace_back(b[j].first, sign * b[j].second);
  return out;
}

}  // namespace

MultigradedPolynomial& MultigradedPolynomial::operator+=(
    const MultigradedPolynomial& other) {
  assert(num_vars_ == other.num_vars_ || is_zero() || other.is_zero());
  if (num_vars_ == 0) num_vars_ = other.num_vars_;
  terms_ = merge(terms_, other.terms_, 1);
  return *this;
}

MultigradedPolynomial& MultigradedPolynomial::operator-=(
    const MultigradedPolynomial& other) {
  assert(num_vars_ == other.num_vars_ || is_zero() || other.is_zero());
  if (num_vars_ == 0) num_vars_ = other.num_vars_;
  terms_ = merge(terms_, other.terms_, -1);
  return *this;
}

MultigradedPolynomial operator*(const MultigradedPolynomial& a,
                                const MultigradedPolynomial& b) {
  assert(a.num_vars_ == b.num_vars_ || a.is_zero() || b.is_zero());
  if (a.is_zero() || b.is_zero())
    return MultigradedPolynomial(std::max(a.num_vars_, b.num_vars_));
  std::vector<MultigradedPolynomial::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) terms.emplace_back(ma * mb, ca * cb);
  return MultigradedPolynomial::from_terms(a.num_vars_, std::move(terms));
}

MultigradedPolynomial MultigradedPolynomial::shifted(const Monomial& m) const {
  // Adding a fixed exponent vector preserves lexicographic order, so the
  // term list stays sorted.
  MultigradedPolynomial out(num_vars_);
  out.terms_.reserve(terms_.size());
  for (const Term& t : terms_) out.terms_.emplace_back(t.first * m, t.second);
  return out;
}

std::vector<Int> MultigradedPolynomial::graded() const {
  std::vector<Int> coeffs;
  for (const Term& t : terms_) {
    std::size_t d = static_cast<std::size_t>(t.first.total_degree());
    if (coeffs.size() <= d) coeffs.resize(d + 1, Int(0));
    coeffs[d] += t.second;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m,
                     const std::vector<std::string>& names, bool with_coeff,
                     const Int& abs_coeff) {
  bool printed = false;
  if (with_coeff) {
    out << abs_coeff.str();
    printed = true;
  }
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (printed) out << "*";
    out << names[i];
    if (m[i] > 1) out << "^" << m[i];
    printed = true;
  }
  if (!printed) out << "1";
}

}  // namespace

std::string MultigradedPolynomial::to_string(
    const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<Term> ordered(terms_);
  std::sort(ordered.begin(), ordered.end(), [](const Term& a, const Term& b) {
    int da = a.first.total_degree(), db = b.first.total_degree();
    if (da != db) return da < db;
    return b.first < a.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const Term& t : ordered) {
    bool neg = t.second < 0;
    Int mag = neg ? Int(-t.second) : t.second;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    append_monomial(out, t.first, names, mag != 1 || t.first.is_unit(), mag);
  }
  return out.str();
}

std::string graded_to_string(const std::vector<Int>& coeffs,
                             const std::string& var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    bool neg = coeffs[d] < 0;
    Int mag = neg ? Int(-coeffs[d]) : coeffs[d];
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mag != 1 || d == 0) out << mag.str();
    if (d > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (d > 1) out << "^" << d;
    }
  }
  if (first) out << "0";
  return out.str();
}

Rational graded_evaluate(const std::vector<Int>& coeffs, const Rational& t) {
  Rational value = 0;
  for (std::size_t d = coeffs.size(); d-- > 0;) value = value * t + coeffs[d];
  return value;
}

}  // namespace depolar
