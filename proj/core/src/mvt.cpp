#include "depolar/mvt.hpp"

#include <cassert>

#include "depolar/errors.hpp"
#include "depolar/polarization.hpp"

namespace depolar {

namespace {

std::unique_ptr<MVNode> build(MonomialIdeal ideal, Int position, int dim,
                              PivotStrategy strategy) {
  auto node = std::make_unique<MVNode>();
  node->position = position;
  node->dim = dim;
  node->relevant = position == 1 || position % 2 == 0;
  node->ideal = std::move(ideal);

  const auto& gens = node->ideal.generators();
  if (gens.size() > 1) {
    std::size_t pidx =
        strategy == PivotStrategy::LastGenerator ? gens.size() - 1 : 0;
    node->pivot = gens[pidx];
    std::vector<Monomial> rest;
    rest.reserve(gens.size() - 1);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != pidx) rest.push_back(gens[i]);

    std::vector<Monomial> meet;
    meet.reserve(rest.size());
    for (const Monomial& g : rest) meet.push_back(lcm(g, *node->pivot));

    node->left = build(MonomialIdeal(node->ideal.num_vars(), std::move(meet)),
                       position * 2, dim + 1, strategy);
    node->right = build(MonomialIdeal::from_minimal(node->ideal.num_vars(),
                                                    std::move(rest)),
                        position * 2 + 1, dim, strategy);
  }
  return node;
}

}  // namespace

std::size_t MVTree::node_count() const {
  std::size_t n = 0;
  auto walk = [&](auto&& self, const MVNode* node) -> void {
    if (!node) return;
    ++n;
    self(self, node->left.get());
    self(self, node->right.get());
  };
  walk(walk, root.get());
  return n;
}

MVTree mayer_vietoris_tree(const MonomialIdeal& ideal, PivotStrategy strategy) {
  if (!ideal.is_proper())
    throw ImproperIdealError("Mayer-Vietoris tree needs a proper nonzero ideal");
  MVTree tree;
  tree.strategy = strategy;
  tree.root = build(ideal, 1, 0, strategy);
  return tree;
}

std::map<int, std::map<Monomial, long>> relevant_multidegrees(
    const MVTree& tree) {
  std::map<int, std::map<Monomial, long>> out;
  auto walk = [&](auto&& self, const MVNode* node) -> void {
    if (!node) return;
    if (node->relevant) {
      auto& bucket = out[node->dim];
      for (const Monomial& g : node->ideal.generators()) ++bucket[g];
    }
    self(self, node->left.get());
    self(self, node->right.get());
  };
  walk(walk, tree.root.get());
  return out;
}

std::vector<long> relevant_counts(const MVTree& tree) {
  auto degrees = relevant_multidegrees(tree);
  std::vector<long> counts;
  for (const auto& [dim, bucket] : degrees) {
    if (static_cast<int>(counts.size()) <= dim) counts.resize(dim + 1, 0);
    for (const auto& [mono, mult] : bucket) counts[dim] += mult;
  }
  return counts;
}

MultigradedPolynomial alternating_sum(const MVTree& tree) {
  int n = tree.root->ideal.num_vars();
  MultigradedPolynomial sum(n);
  for (const auto& [dim, bucket] : relevant_multidegrees(tree)) {
    std::vector<MultigradedPolynomial::Term> terms;
    terms.reserve(bucket.size());
    for (const auto& [mono, mult] : bucket)
      terms.emplace_back(mono, dim % 2 == 0 ? Int(mult) : Int(-mult));
    sum += MultigradedPolynomial::from_terms(n, std::move(terms));
  }
  return sum;
}

namespace {

std::unique_ptr<MVNode> polarize_node(const MVNode* node,
                                      const std::vector<int>& caps,
                                      int target_vars) {
  if (!node) return nullptr;
  auto out = std::make_unique<MVNode>();
  out->position = node->position;
  out->dim = node->dim;
  out->relevant = node->relevant;
  std::vector<Monomial> gens;
  gens.reserve(node->ideal.generators().size());
  for (const Monomial& g : node->ideal.generators())
    gens.push_back(polarize_monomial(g, caps));
  out->ideal = MonomialIdeal(target_vars, std::move(gens));
  if (node->pivot) out->pivot = polarize_monomial(*node->pivot, caps);
  out->left = polarize_node(node->left.get(), caps, target_vars);
  out->right = polarize_node(node->right.get(), caps, target_vars);
  return out;
}

}  // namespace

MVTree polarize_tree(const MVTree& tree, const std::vector<int>& caps) {
  MVTree out;
  out.strategy = tree.strategy;
  out.root = polarize_node(tree.root.get(), caps, slot_layout(caps).target_num_vars);
  return out;
}

}  // namespace depolar
