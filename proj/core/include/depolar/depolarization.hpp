#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "depolar/monomial.hpp"
#include "depolar/polarization.hpp"
#include "depolar/support_poset.hpp"

namespace depolar {

// The outcome of depolarizing a squarefree ideal along a path partition:
// one target variable per block, the exponent of block j in the image of a
// generator being the number of block-j elements in its support.  order is
// the within-class linearization derived from the block sequences; map
// sends (block, slot) back to the slot's source variable, so that
// polarizing ideal with the block sizes as caps recovers the source up to
// this renaming.
struct DepolarizationRecord {
  PathPartition partition;
  std::vector<int> order;  // support variables in the derived total order
  MonomialIdeal ideal;
  VariableMap map;
};

// Validates that the blocks partition the support poset of the (squarefree,
// proper) ideal into paths and performs the rewrite.  Equal-C-set classes
// take their chain order from the way block sequences traverse them; an
// inconsistent traversal, a non-contiguous block, or a gap in a chain
// raises InvalidPartitionError naming the offending block.
DepolarizationRecord depolarize(const MonomialIdeal& ideal,
                                const PathPartition& partition);

struct SearchLimits {
  long max_nodes = 1000000;
};

// A bijection of variables turning the generators of a into those of b, or
// nullopt if none exists.  Throws InconclusiveError when the backtracking
// budget runs out, which deliberately differs from a definite nullopt.
std::optional<std::vector<int>> ideal_isomorphism(const MonomialIdeal& a,
                                                  const MonomialIdeal& b,
                                                  const SearchLimits& limits = {});

// Copolarity test: do a and b have the same polarization up to renaming?
// On success returns the variable bijection between the two slot rings.
std::optional<std::vector<int>> copolar_bijection(const MonomialIdeal& a,
                                                  const MonomialIdeal& b,
                                                  const SearchLimits& limits = {});

struct EnumerationOptions {
  int max_support = 12;              // refuse larger posets
  int max_class_size = 5;            // classes above this keep input order
  std::size_t max_partitions = 200000;
  bool dedup = true;                 // collapse isomorphic results
  SearchLimits iso_limits;
};

struct DepolarizationEnumeration {
  std::vector<DepolarizationRecord> records;
  // (i, j) present when records[i].partition strictly refines records[j]'s
  // (every block of i contained in a block of j, partitions not equal).
  std::vector<std::pair<int, int>> refinements;
  // Records that no other kept record coarsens: the maximum depolarizations.
  std::vector<int> maximum_indices;
  bool class_orders_truncated = false;  // some class was too big to permute
};

// Walks every within-class linearization and every path partition of the
// refined support poset, depolarizing each.  With dedup, one record per
// isomorphism class of results is kept (the partition order refines across
// kept records only); without it, every (order, partition) pair survives.
DepolarizationEnumeration enumerate_depolarizations(
    const MonomialIdeal& ideal, const EnumerationOptions& options = {});

// JSONL rendering of an enumeration, one record object per line.
std::string enumeration_to_jsonl(const DepolarizationEnumeration& enumeration,
                                 const std::vector<std::string>& names);

// Width of the support poset of the polarization: an upper bound for the
// projective dimension of the ideal.
int pd_upper_bound(const MonomialIdeal& ideal);

// Does a family of candidate C-sets arise as the support poset of the
// ideal generated by the products prod_{k in C_i} x_k?  closure_respected
// reports i in C_i; transitive reports k in C_i, i in C_j => k in C_j.
// When both hold, ideal is the candidate ideal and poset_matches compares
// its computed C-sets against the input.
struct CoverSetReport {
  bool closure_respected = false;
  bool transitive = false;
  bool poset_matches = false;
  std::vector<int> closure_failures;                 // i with i not in C_i
  std::vector<std::array<int, 3>> transitivity_failures;  // (i, j, k)
  MonomialIdeal ideal;

  bool verified() const {
    return closure_respected && transitive && poset_matches;
  }
};

CoverSetReport ideal_from_cover_sets(int num_vars,
                                     const std::vector<std::vector<int>>& csets);

// A squarefree ideal whose support poset consists of disjoint chains of
// the given lengths (lengths sorted non-increasing, each between 1 and the
// number of chains; fails for two chains of different lengths, where no
// such ideal exists).  g1/g2/g3 expose the three generator groups of the
// construction and poset_matches confirms the support poset came out as
// requested.
struct DisjointPathsResult {
  MonomialIdeal ideal;
  std::vector<Monomial> g1, g2, g3;
  std::vector<int> g3_starts;  // variables eligible for the pair products
  bool poset_matches = false;
};

DisjointPathsResult ideal_from_disjoint_paths(const std::vector<int>& lengths);

// Nested-type test with respect to the given variable order: for every j,
// I : x_j^inf must equal I : (x_1,...,x_j)^inf.
bool is_quasi_stable(const MonomialIdeal& ideal);

}  // namespace depolar
