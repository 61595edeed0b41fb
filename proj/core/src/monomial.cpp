#include "depolar/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "depolar/errors.hpp"

namespace depolar {

int Monomial::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::is_unit() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < num_vars(); ++i)
    if (exponents[i] > 0) s.push_back(i);
  return s;
}

bool divides(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  for (int i = 0; i < a.num_vars(); ++i)
    if (a.exponents[i] > b.exponents[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  std::vector<int> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents[i], b.exponents[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  std::vector<int> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = a.exponents[i] + b.exponents[i];
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
  assert(a.num_vars() == b.num_vars());
  std::vector<int> e(a.exponents.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(a.exponents[i] - b.exponents[i], 0);
  return Monomial(std::move(e));
}

namespace {

std::vector<Monomial> minimal_generators(std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    if (g.is_unit()) return {Monomial(std::vector<int>(g.num_vars(), 0))};

  // Sorting by degree first means a potential divisor always precedes the
  // monomials it divides, so one forward pass suffices.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (divides(k, g)) { redundant = true; break; }
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators)
    : num_vars_(num_vars) {
  for (const Monomial& g : generators)
    if (g.num_vars() != num_vars)
      throw Error("generator arity does not match the ring");
  gens_ = minimal_generators(std::move(generators));
}

MonomialIdeal MonomialIdeal::from_minimal(int num_vars,
                                          std::vector<Monomial> gens) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < gens.size(); ++i) {
    assert(gens[i].num_vars() == num_vars);
    assert(i == 0 || gens[i - 1] < gens[i]);
    for (std::size_t j = 0; j < gens.size(); ++j)
      assert(i == j || !divides(gens[j], gens[i]));
  }
#endif
  MonomialIdeal ideal;
  ideal.num_vars_ = num_vars;
  ideal.gens_ = std::move(gens);
  return ideal;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::vector<int> MonomialIdeal::support() const {
  std::vector<int> used;
  std::vector<int> caps = max_exponents();
  for (int i = 0; i < num_vars_; ++i)
    if (caps[i] > 0) used.push_back(i);
  return used;
}

std::vector<int> MonomialIdeal::max_exponents() const {
  std::vector<int> caps(num_vars_, 0);
  for (const Monomial& g : gens_)
    for (int i = 0; i < num_vars_; ++i)
      caps[i] = std::max(caps[i], g.exponents[i]);
  return caps;
}

MonomialIdeal minimalize(int num_vars, std::vector<Monomial> generators) {
  return MonomialIdeal(num_vars, std::move(generators));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) gens.push_back(quotient(g, m));
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  assert(a.num_vars() == b.num_vars());
  std::vector<Monomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(lcm(x, y));
  return MonomialIdeal(a.num_vars(), std::move(gens));
}

MonomialIdeal saturate_variable(const MonomialIdeal& ideal, int v) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (Monomial g : ideal.generators()) {
    g.exponents[v] = 0;
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

namespace {

// Branch & bound for the minimum hitting set of the generator supports.
void cover_search(const std::vector<std::vector<int>>& supports,
                  std::vector<bool>& chosen, std::size_t next, int used,
                  int& best) {
  if (used >= best) return;
  // Find the first support not yet hit.
  const std::vector<int>* open = nullptr;
  for (std::size_t i = next; i < supports.size(); ++i) {
    bool hit = false;
    for (int v : supports[i])
      if (chosen[v]) { hit = true; break; }
    if (!hit) { open = &supports[i]; next = i; break; }
  }
  if (!open) { best = used; return; }
  for (int v : *open) {
    chosen[v] = true;
    cover_search(supports, chosen, next + 1, used + 1, best);
    chosen[v] = false;
  }
}

}  // namespace

int height(const MonomialIdeal& ideal) {
  if (!ideal.is_proper())
    throw ImproperIdealError("height needs a proper nonzero ideal");
  std::vector<std::vector<int>> supports;
  supports.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  // Smaller supports first make the branching factor shrink early.
  std::sort(supports.begin(), supports.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size(); });
  int best = static_cast<int>(ideal.support().size());
  std::vector<bool> chosen(ideal.num_vars(), false);
  cover_search(supports, chosen, 0, 0, best);
  return best;
}

}  // namespace depolar
