#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "depolar/hilbert.hpp"
#include "depolar/monomial.hpp"
#include "depolar/polarization.hpp"
#include "depolar/polynomial.hpp"
#include "depolar/rational.hpp"

namespace depolar::rel {

// A coherent multi-state system: n components, component i taking states
// 0..state_counts[i], system levels 0..levels.  The structure is given
// either by explicit minimal paths per level or by a named family.
struct SystemSpec {
  struct ExplicitPaths {
    // level j (1-based) -> minimal vectors s with phi(s) >= j.
    std::map<int, std::vector<Monomial>> paths;
  };
  struct MultiStateKOutOfN {
    std::vector<int> k;  // k[j-1] components must reach level >= j
  };
  struct FlowNetwork {};     // parallel lines, capacities = state counts
  struct ConsecutiveKOutOfN {
    int k = 0;               // binary: k consecutive working components
  };
  struct BinaryKOutOfN {
    int k = 0;
  };

  int components = 0;
  std::vector<int> state_counts;  // m_i: top state of component i
  int levels = 1;                 // m: top system level
  std::variant<ExplicitPaths, MultiStateKOutOfN, FlowNetwork,
               ConsecutiveKOutOfN, BinaryKOutOfN>
      structure;
};

// Exact state probabilities: point[i][s] = Pr(component i is in state s),
// s = 0..m_i.  Rows must be nonnegative and sum to one.
struct ProbabilityTable {
  std::vector<std::vector<Rational>> point;

  void validate(const SystemSpec& spec) const;
  // Pr(component i reaches state >= s); 1 for s <= 0, 0 for s > m_i.
  Rational cumulative(int component, int state) const;
};

// The level-j reliability ideal: generated by x^s for the minimal system
// states s with phi(s) >= j.  Level 0 or an unreachable level yields the
// expected degenerate ideals (<1> and 0 respectively).
MonomialIdeal reliability_ideal(const SystemSpec& spec, int level);

// Named families, also usable directly.
MonomialIdeal multistate_k_out_of_n_ideal(const std::vector<int>& k,
                                          const std::vector<int>& state_counts,
                                          int level);
MonomialIdeal flow_network_ideal(const std::vector<int>& capacities, int level);
MonomialIdeal consecutive_k_out_of_n_ideal(int k, int n);
MonomialIdeal binary_k_out_of_n_ideal(int k, int n);

// How the variables of a polynomial's ring consume component state slots.
// slots[v] lists (component, state) pairs; a term with exponent e on v
// consumes the first e entries.  After collecting all pairs of a term, the
// states of each component must form a prefix 1..s, contributing the
// cumulative probability Pr(c_i >= s); anything else is an EvaluationError.
struct EvalMap {
  std::vector<std::vector<std::pair<int, int>>> slots;

  static EvalMap direct(const std::vector<int>& state_counts);
  // Ring of a polarization of the component ring: slot (i, l) of the
  // layout refers to state l of component i.
  static EvalMap polarized(const VariableMap& layout);
  // Ring of a depolarization of such a polarized ring: block slots map
  // through the depolarization onto the polarized layout.
  static EvalMap depolarized(const VariableMap& depolarization_map,
                             const EvalMap& polarized_map);
};

// Specialize x^mu -> prod_i Pr(c_i >= s_i(mu)) and sum with coefficients.
Rational evaluate(const MultigradedPolynomial& poly,
                  const ProbabilityTable& probs, const EvalMap& map);

Rational evaluate(const MultigradedPolynomial& poly,
                  const ProbabilityTable& probs);

// Pr(phi(state) >= level), via the Hilbert numerator of the level ideal.
Rational reliability(const SystemSpec& spec, const ProbabilityTable& probs,
                     int level);

struct LevelReport {
  int level = 0;
  Rational reliability;  // R_{S,level}
  Rational point_mass;   // r_{S,level} = R_{S,level} - R_{S,level+1}
};

// Reports for levels 1..m plus the level-0 point mass r_0 = 1 - R_1.
struct ReliabilityReport {
  std::vector<LevelReport> levels;
  Rational level0_mass;
};

ReliabilityReport full_reliability(const SystemSpec& spec,
                                   const ProbabilityTable& probs);

// Reliability as a polynomial in one parameter p under the homogeneous
// model Pr(c_i >= s) = p^s for every component: the graded Hilbert
// numerator of the level ideal, read with t = p.  Index = degree.  Stays
// cheap even when the multigraded numerator would be far too large to
// materialize (e.g. ten-state ten-component systems).
std::vector<Int> reliability_polynomial(const SystemSpec& spec, int level);
std::vector<Int> reliability_polynomial(const SystemSpec& spec, int level,
                                        HilbertCache& cache);

enum class BoundsKind { MayerVietoris, Taylor };

struct BoundStep {
  int depth = 0;      // homological dimensions included: 0..depth
  Rational value;
  bool upper = false; // even depth over-counts, odd depth under-counts
  bool exact = false; // final step: the full alternating sum
};

// Truncated inclusion-exclusion ladder for Pr(phi >= level).  Partial sums
// of the alternating contributions, grouped by homological dimension, of
// either the Mayer-Vietoris multidegrees or the full Taylor complex lcms.
std::vector<BoundStep> reliability_bounds(const SystemSpec& spec,
                                          const ProbabilityTable& probs,
                                          int level,
                                          BoundsKind kind = BoundsKind::MayerVietoris);

// Ground truth by enumerating all component states (guarded by a budget on
// the state space size).
Rational exhaustive_reliability(const SystemSpec& spec,
                                const ProbabilityTable& probs, int level,
                                long long max_states = 10000000);

struct MonteCarloResult {
  double estimate = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

// Deterministic counter-based sampling: same seed, same estimate,
// regardless of scheduling.
MonteCarloResult monte_carlo_reliability(const SystemSpec& spec,
                                         const ProbabilityTable& probs,
                                         int level, long long trials,
                                         unsigned long long seed);

// Text format for systems:
//
//   components: 4
//   levels: 3
//   states 1: 1
//   p 1: 0.2 0.8
//   family: ms_k_of_n 3 2 2
//
// or explicit "paths j:" blocks listing one state vector per line.
struct NamedSystem {
  SystemSpec spec;
  ProbabilityTable probs;
};

NamedSystem read_system(std::istream& in);
NamedSystem read_system_file(const std::string& path);
void write_system(std::ostream& out, const NamedSystem& system);

}  // namespace depolar::rel
