#pragma once

#include <string>
#include <vector>

#include "depolar/monomial.hpp"

namespace depolar {

// The support poset of a squarefree monomial ideal.  Each support variable
// v carries the set C(v): the intersection of the supports of all
// generators divisible by x_v.  Variables with equal C-sets form a class;
// the poset proper is the set of distinct C-sets ordered by inclusion.
// For a non-squarefree ideal, support_poset() builds the poset of its
// polarization, so element indices then refer to the slot ring.
class SupportPoset {
public:
  int ambient_vars = 0;
  std::vector<int> vars;                  // support variables, ascending
  std::vector<std::vector<int>> csets;    // parallel to vars, each sorted

  struct ClassNode {
    std::vector<int> cset;     // the shared C-set
    std::vector<int> members;  // variables with this C-set, ascending
  };
  std::vector<ClassNode> classes;               // sorted by cset
  std::vector<std::pair<int, int>> class_hasse; // (lower, upper) class pairs

  const std::vector<int>& cset_of(int var) const;
  int class_of(int var) const;
  bool class_leq(int a, int b) const;  // inclusion of C-sets
  // Members of class c minus all members of classes strictly below: the
  // usual node label in Hasse diagrams of support posets.
  std::vector<int> class_label(int c) const;
};

SupportPoset support_poset(const MonomialIdeal& ideal);

// The support poset refined by a total order of the variables: within a
// class, variables are arranged in a chain following the order; across
// classes, strict C-set inclusion decides.  This is the partial order that
// path partitions (and hence depolarization) are taken in.
class OrderedSupportPoset {
public:
  int ambient_vars = 0;
  std::vector<int> vars;                // support variables, ascending
  std::vector<std::vector<int>> csets;  // parallel to vars
  std::vector<int> order_rank;          // parallel to vars: tiebreak rank

  bool element(int var) const;
  const std::vector<int>& cset_of(int var) const;
  bool precedes(int u, int v) const;    // strict order u < v
  bool comparable(int u, int v) const;
  bool covers(int u, int v) const;      // v covers u
  std::vector<std::pair<int, int>> cover_pairs() const;
};

// order lists variable indices; it must contain every support variable of
// the ideal exactly once (extra non-support variables are allowed and
// ignored).  An empty order means the natural order 0,1,...,n-1.
OrderedSupportPoset ordered_support_poset(const MonomialIdeal& ideal,
                                          const std::vector<int>& order = {});

// True when the elements form a chain with no gaps: a sequence where each
// consecutive pair (as the chain is sorted by the order) is a cover pair.
// Checked literally against the definition: every pair comparable, and no
// further poset element fits strictly between two consecutive ones.
bool is_path(const OrderedSupportPoset& poset, const std::vector<int>& elements);

// Largest antichain size == least number of chains covering the poset.
int width(const SupportPoset& poset);
int width(const OrderedSupportPoset& poset);

// A partition of the ordered support poset into vertex-disjoint paths,
// each block listed in ascending poset order.
struct PathPartition {
  std::vector<std::vector<int>> blocks;

  std::size_t size() const { return blocks.size(); }
  bool operator==(const PathPartition&) const = default;
};

// A smallest partition into paths, via maximum matching on cover pairs.
PathPartition min_path_partition(const OrderedSupportPoset& poset);

// All partitions of the poset into paths.  Throws LimitExceededError if
// more than max_partitions would be produced.
std::vector<PathPartition> all_path_partitions(const OrderedSupportPoset& poset,
                                               std::size_t max_partitions);

// GraphViz rendering of the class poset; nodes carry class labels.
std::string to_dot(const SupportPoset& poset,
                   const std::vector<std::string>& names);

}  // namespace depolar
