#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "depolar/monomial.hpp"
#include "depolar/polynomial.hpp"
#include "depolar/rational.hpp"

namespace depolar {

enum class PivotStrategy { LastGenerator, FirstGenerator };

// One node of a Mayer-Vietoris tree.  The root holds the input ideal at
// position 1, dimension 0.  An inner node with ideal I and pivot p (a
// minimal generator chosen by the strategy, I~ the remaining generators)
// has as left child I~ intersected with <p> at dimension dim+1, position
// 2*pos, and as right child I~ at the same dimension, position 2*pos+1.
// A node is relevant when its position is 1 or even; the generators of
// relevant nodes, collected per dimension, bound the Betti numbers of the
// root ideal and their alternating sum is its Hilbert numerator.
struct MVNode {
  MonomialIdeal ideal;
  Int position;
  int dim = 0;
  bool relevant = false;
  std::optional<Monomial> pivot;
  std::unique_ptr<MVNode> left;   // intersection branch, dimension + 1
  std::unique_ptr<MVNode> right;  // remaining generators, same dimension
};

struct MVTree {
  std::unique_ptr<MVNode> root;
  PivotStrategy strategy = PivotStrategy::LastGenerator;

  std::size_t node_count() const;
};

MVTree mayer_vietoris_tree(const MonomialIdeal& ideal,
                           PivotStrategy strategy = PivotStrategy::LastGenerator);

// Multidegrees contributed by relevant nodes, with multiplicity, keyed by
// homological dimension: an upper bound for the multigraded Betti numbers.
std::map<int, std::map<Monomial, long>> relevant_multidegrees(const MVTree& tree);

// Total count of relevant multidegrees per dimension (index = dimension).
std::vector<long> relevant_counts(const MVTree& tree);

// Sum over dimensions i of (-1)^i * (relevant multidegrees at i).
// Equals the Hilbert numerator of the root ideal.
MultigradedPolynomial alternating_sum(const MVTree& tree);

// Applies polarization to every node, preserving tree shape, positions and
// pivot choices.  caps must dominate the root ideal's exponents; the
// resulting tree is the Mayer-Vietoris tree of the polarized ideal for the
// corresponding pivot sequence.
MVTree polarize_tree(const MVTree& tree, const std::vector<int>& caps);

}  // namespace depolar
