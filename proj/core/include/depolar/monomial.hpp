#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace depolar {

// A monomial in a fixed polynomial ring, stored as its exponent vector.
// The defaulted comparison is the plain lexicographic order on exponent
// vectors; "larger" means lexicographically larger (x > y > ...).
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

  int num_vars() const { return static_cast<int>(exponents.size()); }
  int operator[](int i) const { return exponents[i]; }

  int total_degree() const;
  bool is_unit() const;
  bool is_squarefree() const;
  std::vector<int> support() const;  // indices of variables with exponent > 0

  auto operator<=>(const Monomial&) const = default;
};

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
// Componentwise max(a - b, 0): the generator of <a> : <b>.
Monomial quotient(const Monomial& a, const Monomial& b);

// A monomial ideal, represented by its unique minimal generating set.
// Construction minimalizes: generators divisible by another generator are
// dropped, duplicates collapse, and the survivors are sorted in ascending
// lexicographic order.  The zero ideal has no generators; the improper
// ideal <1> is represented by the single unit generator.
class MonomialIdeal {
public:
  MonomialIdeal() = default;
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_improper() const { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const { return !is_zero() && !is_improper(); }
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;  // some generator divides m

  std::vector<int> support() const;        // variables used by some generator
  std::vector<int> max_exponents() const;  // per-variable max over generators

  bool operator==(const MonomialIdeal&) const = default;

  // Trusted constructor for callers that already hold a minimal generating
  // set in ascending lexicographic order (verified in debug builds only).
  static MonomialIdeal from_minimal(int num_vars, std::vector<Monomial> gens);

private:
  int num_vars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(int num_vars, std::vector<Monomial> generators);

// The colon ideal I : m.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

// Intersection of two monomial ideals (pairwise lcms, minimalized).
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

// Saturation I : x_v^inf, i.e. set the exponent of x_v to zero in every
// generator and minimalize.
MonomialIdeal saturate_variable(const MonomialIdeal& ideal, int v);

// Height of a proper nonzero monomial ideal: the least size of a set of
// variables meeting the support of every generator (exact branch & bound).
int height(const MonomialIdeal& ideal);

}  // namespace depolar
