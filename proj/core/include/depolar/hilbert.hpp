#pragma once

#include <cstddef>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "depolar/monomial.hpp"
#include "depolar/polynomial.hpp"

namespace depolar {

// Memo table shared between hilbert_numerator calls.  Keys are canonical
// forms of subideals (restricted to their support with variables reordered
// by a deterministic signature sort), so structurally equal subproblems in
// different variable sets hit the same entry.  Thread-safe.
class HilbertCache {
public:
  std::size_t size() const;
  std::size_t hits() const { return hits_; }
  void clear();

private:
  friend class HilbertEngine;
  friend class GradedHilbertEngine;
  mutable std::mutex mutex_;
  std::unordered_map<std::string, MultigradedPolynomial> table_;
  std::unordered_map<std::string, std::vector<Int>> graded_table_;
  std::size_t hits_ = 0;
};

// Numerator N(I) of the multigraded Hilbert series of the ideal I over the
// denominator prod (1 - x_i), i.e. the alternating sum of the multidegrees
// of any free resolution of I.  Computed by divide and conquer on the
// quotient side,
//
//   num(S/I) = num(S/(I + v^e)) + v^e * num(S/(I : v^e)),
//
// with variable/exponent pivots, tensor factorization over support
// components, and closed forms for pure-power base cases; N(I) is
// 1 - num(S/I).  The zero ideal yields 0 and <1> yields 1.
MultigradedPolynomial hilbert_numerator(const MonomialIdeal& ideal);
MultigradedPolynomial hilbert_numerator(const MonomialIdeal& ideal,
                                        HilbertCache& cache);

// N(I) specialized to a single grading x_i -> t: coefficient of t^d at
// index d.  Computed directly by the same recursion over dense univariate
// polynomials, which stays small even when the multigraded numerator would
// be far too large to hold in memory.
std::vector<Int> hilbert_numerator_graded(const MonomialIdeal& ideal);
std::vector<Int> hilbert_numerator_graded(const MonomialIdeal& ideal,
                                          HilbertCache& cache);

}  // namespace depolar
