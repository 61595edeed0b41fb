#pragma once

#include <map>
#include <utility>
#include <vector>

#include "depolar/monomial.hpp"

namespace depolar {

// Multigraded Betti numbers of a monomial ideal (ideal convention: beta_0
// counts minimal generators).
struct BettiTable {
  int num_vars = 0;
  std::map<std::pair<int, Monomial>, long> entries;  // (i, mu) -> beta_{i,mu}

  std::map<std::pair<int, int>, long> graded() const;  // (i, |mu|) -> sum
  std::vector<long> totals() const;                    // index i -> sum
  int proj_dim() const;     // max i with a nonzero entry
  int regularity() const;   // max |mu| - i over nonzero entries
};

// Exact Betti numbers over the rationals, computed from the lcm lattice:
// beta_{i,mu} is the reduced homology in degree i-1 of the complex of
// subsets of {generators dividing mu} whose lcm is strictly below mu.
// Exponential in the number of generators; refuses ideals with more than
// generator_limit generators (LimitExceededError) so callers can fall back
// to Mayer-Vietoris bounds.
BettiTable betti_numbers(const MonomialIdeal& ideal, int generator_limit = 20);

int proj_dim(const MonomialIdeal& ideal, int generator_limit = 20);
int regularity(const MonomialIdeal& ideal, int generator_limit = 20);

}  // namespace depolar
