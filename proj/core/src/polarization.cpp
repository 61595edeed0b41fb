#include "depolar/polarization.hpp"

#include <algorithm>
#include <cassert>

#include "depolar/errors.hpp"

namespace depolar {

std::pair<int, int> VariableMap::base_of(int target_var) const {
  for (int b = 0; b < num_bases(); ++b)
    for (int l = 1; l <= slots(b); ++l)
      if (target(b, l) == target_var) return {b, l};
  throw Error("target variable not present in slot map");
}

VariableMap slot_layout(const std::vector<int>& caps) {
  VariableMap map;
  map.slot_targets.resize(caps.size());
  int next = 0;
  for (std::size_t b = 0; b < caps.size(); ++b) {
    for (int l = 0; l < caps[b]; ++l) map.slot_targets[b].push_back(next++);
  }
  map.target_num_vars = next;
  return map;
}

Monomial polarize_monomial(const Monomial& m, const std::vector<int>& caps) {
  assert(static_cast<std::size_t>(m.num_vars()) == caps.size());
  VariableMap layout = slot_layout(caps);
  std::vector<int> exps(layout.target_num_vars, 0);
  for (int b = 0; b < m.num_vars(); ++b) {
    if (m[b] > caps[b])
      throw CapExceededError("exponent " + std::to_string(m[b]) +
                                 " of variable " + std::to_string(b) +
                                 " exceeds its cap " + std::to_string(caps[b]),
                             b);
    for (int l = 1; l <= m[b]; ++l) exps[layout.target(b, l)] = 1;
  }
  return Monomial(std::move(exps));
}

std::pair<MonomialIdeal, VariableMap> polarize_ideal(
    const MonomialIdeal& ideal, const std::vector<int>& caps) {
  if (!ideal.is_proper())
    throw ImproperIdealError("polarization needs a proper nonzero ideal");
  VariableMap layout = slot_layout(caps);
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    gens.push_back(polarize_monomial(g, caps));
  // Polarization is injective and preserves divisibility both ways on the
  // generators of one ideal, so the polarized set is already minimal and
  // already sorted (slot layout preserves lexicographic order).
  return {MonomialIdeal::from_minimal(layout.target_num_vars, std::move(gens)),
          layout};
}

std::pair<MonomialIdeal, VariableMap> polarize_ideal(const MonomialIdeal& ideal) {
  std::vector<int> caps = ideal.max_exponents();
  for (int& c : caps) c = std::max(c, 1);
  return polarize_ideal(ideal, caps);
}

std::vector<std::string> slot_names(const std::vector<std::string>& base_names,
                                    const VariableMap& map) {
  assert(static_cast<int>(base_names.size()) == map.num_bases());
  std::vector<std::string> names(map.target_num_vars);
  for (int b = 0; b < map.num_bases(); ++b) {
    for (int l = 1; l <= map.slots(b); ++l) {
      names[map.target(b, l)] = map.slots(b) == 1
                                    ? base_names[b]
                                    : base_names[b] + "_" + std::to_string(l);
    }
  }
  return names;
}

}  // namespace depolar
