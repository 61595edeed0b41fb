#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depolar/monomial.hpp"
#include "depolar/rational.hpp"

namespace depolar {

// A polynomial with integer coefficients and multidegree terms, e.g. the
// numerator of a multigraded Hilbert series.  Terms are kept sorted by
// ascending lexicographic multidegree with no zero coefficients, so equal
// polynomials compare equal with operator==.
class MultigradedPolynomial {
public:
  using Term = std::pair<Monomial, Int>;

  explicit MultigradedPolynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static MultigradedPolynomial term(Monomial m, Int coeff = 1);
  // Builds from an arbitrary term list: sorts, merges duplicates, drops zeros.
  static MultigradedPolynomial from_terms(int num_vars, std::vector<Term> terms);

  int num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Int coefficient(const Monomial& m) const;
  void add_term(Monomial m, Int coeff);

  MultigradedPolynomial& operator+=(const MultigradedPolynomial& other);
  MultigradedPolynomial& operator-=(const MultigradedPolynomial& other);
  friend MultigradedPolynomial operator+(MultigradedPolynomial a,
                                         const MultigradedPolynomial& b) {
    a += b;
    return a;
  }
  friend MultigradedPolynomial operator-(MultigradedPolynomial a,
                                         const MultigradedPolynomial& b) {
    a -= b;
    return a;
  }
  friend MultigradedPolynomial operator*(const MultigradedPolynomial& a,
                                         const MultigradedPolynomial& b);
  bool operator==(const MultigradedPolynomial&) const = default;

  // The product m * this.
  MultigradedPolynomial shifted(const Monomial& m) const;

  // Specialize every variable to t: coefficient of t^d at index d.
  std::vector<Int> graded() const;

  // Canonical human-readable form: terms ordered by total degree, ties by
  // descending lexicographic multidegree.
  std::string to_string(const std::vector<std::string>& names) const;

private:
  int num_vars_;
  std::vector<Term> terms_;
};

std::string graded_to_string(const std::vector<Int>& coeffs,
                             const std::string& var = "t");

// Exact value of a coefficient vector (index = degree) at a point.
Rational graded_evaluate(const std::vector<Int>& coeffs, const Rational& t);

}  // namespace depolar
