#pragma once

// Shared helpers for the test suites: fixture paths, an independent
// inclusion-exclusion oracle for Hilbert numerators, and deterministic
// random generators for ideals and small systems.

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "depolar/io.hpp"
#include "depolar/monomial.hpp"
#include "depolar/polynomial.hpp"
#include "depolar/rational.hpp"
#include "depolar/reliability.hpp"

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at tests/fixtures"
#endif

namespace testsupport {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline depolar::NamedIdeal load(const std::string& name) {
  return depolar::read_ideal_file(fixture(name));
}

// Inclusion-exclusion over generator subsets: the numerator of the Hilbert
// series of <g_1..g_r> equals sum over nonempty subsets S of
// (-1)^(|S|+1) lcm(S).  Exponential, but an entirely independent check for
// the divide-and-conquer engine on small inputs.
inline depolar::MultigradedPolynomial inclusion_exclusion_numerator(
    const depolar::MonomialIdeal& ideal) {
  const auto& gens = ideal.generators();
  std::size_t r = gens.size();
  if (r > 20) throw std::runtime_error("oracle limited to 20 generators");
  std::vector<depolar::MultigradedPolynomial::Term> terms;
  for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
    depolar::Monomial m(std::vector<int>(ideal.num_vars(), 0));
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask & (std::size_t{1} << i)) {
        m = depolar::lcm(m, gens[i]);
        ++bits;
      }
    terms.emplace_back(std::move(m), bits % 2 == 1 ? 1 : -1);
  }
  return depolar::MultigradedPolynomial::from_terms(ideal.num_vars(),
                                                    std::move(terms));
}

// Random proper monomial ideal: up to max_vars variables, exponents up to
// max_exp, between 1 and max_gens generators.  The distribution is biased
// towards exponent zero so supports stay interesting.
inline depolar::MonomialIdeal random_ideal(std::mt19937_64& rng,
                                           int max_vars = 6, int max_exp = 3,
                                           int max_gens = 6) {
  std::uniform_int_distribution<int> nv(2, max_vars);
  int n = nv(rng);
  std::uniform_int_distribution<int> ng(1, max_gens);
  int r = ng(rng);
  std::uniform_int_distribution<int> ex(-1, max_exp);
  std::vector<depolar::Monomial> gens;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(n, 0);
    bool nonzero = false;
    for (int j = 0; j < n; ++j) {
      e[j] = std::max(0, ex(rng));
      if (e[j] > 0) nonzero = true;
    }
    if (!nonzero) e[rng() % n] = 1;
    gens.emplace_back(std::move(e));
  }
  return depolar::MonomialIdeal(n, std::move(gens));
}

inline depolar::MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng,
                                                      int max_vars = 6,
                                                      int max_gens = 5) {
  depolar::MonomialIdeal ideal = random_ideal(rng, max_vars, 1, max_gens);
  return ideal;
}

// Probability row for a component with top state m: positive integers
// normalised to an exact distribution.
inline std::vector<depolar::Rational> random_row(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> weight(1, 9);
  std::vector<int> w(m + 1);
  int total = 0;
  for (int& v : w) {
    v = weight(rng);
    total += v;
  }
  std::vector<depolar::Rational> row;
  for (int v : w) row.emplace_back(v, total);
  return row;
}

// Coherent random system with explicit minimal paths: the level-j path set
// extends the level-(j+1) one, so level ideals are nested and every
// reliability is well defined.
inline depolar::rel::NamedSystem random_system(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nc(2, 4);
  int n = nc(rng);
  std::uniform_int_distribution<int> ms(1, 3);
  std::vector<int> states(n);
  for (int& s : states) s = ms(rng);
  std::uniform_int_distribution<int> nl(1, 3);
  int levels = nl(rng);

  depolar::rel::SystemSpec spec;
  spec.components = n;
  spec.state_counts = states;
  spec.levels = levels;
  depolar::rel::SystemSpec::ExplicitPaths paths;
  std::vector<depolar::Monomial> pool;
  for (int j = levels; j >= 1; --j) {
    std::uniform_int_distribution<int> np(1, 3);
    int extra = np(rng);
    for (int t = 0; t < extra; ++t) {
      std::vector<int> s(n, 0);
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> st(0, states[i]);
        s[i] = std::max(0, st(rng) - 1);
        if (s[i] > 0) nonzero = true;
      }
      if (!nonzero) s[rng() % n] = 1;
      pool.emplace_back(std::move(s));
    }
    paths.paths[j] = pool;  // nested: lower levels keep the higher paths
  }
  spec.structure = std::move(paths);

  depolar::rel::ProbabilityTable probs;
  for (int i = 0; i < n; ++i) probs.point.push_back(random_row(rng, states[i]));
  return {std::move(spec), std::move(probs)};
}

// Exact i.i.d. table with Pr(c_i >= s) = p^s: point masses p^s - p^(s+1)
// except at the top state.
inline depolar::rel::ProbabilityTable geometric_table(
    const std::vector<int>& state_counts, const depolar::Rational& p) {
  depolar::rel::ProbabilityTable table;
  for (int m : state_counts) {
    std::vector<depolar::Rational> row;
    depolar::Rational power = 1;
    for (int s = 0; s < m; ++s) {
      row.push_back(power * (1 - p));
      power *= p;
    }
    row.push_back(power);
    table.point.push_back(std::move(row));
  }
  return table;
}

}  // namespace testsupport
