#pragma once

#include <string>
#include <utility>
#include <vector>

#include "depolar/monomial.hpp"

namespace depolar {

// Describes how the variables of a squarefree "slot" ring correspond to
// base variables: slot l (1-based) of base variable b lives at ring index
// slot_targets[b][l-1].  Polarization produces one with consecutive slot
// blocks; depolarization produces one whose blocks are the path blocks of
// the partition, mapping slots back to the source ring.
struct VariableMap {
  std::vector<std::vector<int>> slot_targets;
  int target_num_vars = 0;

  int num_bases() const { return static_cast<int>(slot_targets.size()); }
  int slots(int base) const {
    return static_cast<int>(slot_targets[base].size());
  }
  int target(int base, int slot) const {  // slot is 1-based
    return slot_targets[base][slot - 1];
  }
  // Inverse lookup: (base, slot) for a target ring index, slot 1-based.
  std::pair<int, int> base_of(int target_var) const;
};

// Rewrites x_b^e as the product of slots (b,1)...(b,e).  caps[b] is the
// number of slots available for base variable b; e > caps[b] raises
// CapExceededError.  The layout places the slots of variable 0 first, then
// variable 1, and so on.
Monomial polarize_monomial(const Monomial& m, const std::vector<int>& caps);

VariableMap slot_layout(const std::vector<int>& caps);

// The polarization of a proper nonzero ideal, with caps taken as the
// per-variable maximum exponent over the generators (at least 1, so the
// ring never loses variables and squarefree ideals polarize to themselves
// under the identity layout).
std::pair<MonomialIdeal, VariableMap> polarize_ideal(const MonomialIdeal& ideal);

// Polarization with an explicit cap vector (caps[b] >= max exponent of b).
std::pair<MonomialIdeal, VariableMap> polarize_ideal(const MonomialIdeal& ideal,
                                                     const std::vector<int>& caps);

// Slot ring names derived from base names: x with one slot stays x, x with
// three slots becomes x_1 x_2 x_3.
std::vector<std::string> slot_names(const std::vector<std::string>& base_names,
                                    const VariableMap& map);

}  // namespace depolar
