#include "depolar/support_poset.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "depolar/errors.hpp"
#include "depolar/polarization.hpp"

namespace depolar {

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int index_of(const std::vector<int>& vars, int var) {
  auto it = std::lower_bound(vars.begin(), vars.end(), var);
  if (it == vars.end() || *it != var)
    throw Error("variable " + std::to_string(var) +
                " is not an element of the support poset");
  return static_cast<int>(it - vars.begin());
}

// Kuhn's augmenting-path matching.  adj[u] lists right endpoints of u.
int max_bipartite_matching(int n, const std::vector<std::vector<int>>& adj,
                           std::vector<int>& right_match) {
  right_match.assign(n, -1);
  std::vector<int> left_match(n, -1);
  std::vector<bool> visited(n);
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      if (visited[v]) continue;
      visited[v] = true;
      if (right_match[v] < 0 || self(self, right_match[v])) {
        right_match[v] = u;
        left_match[u] = v;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int u = 0; u < n; ++u) {
    visited.assign(n, false);
    if (augment(augment, u)) ++size;
  }
  return size;
}

}  // namespace

const std::vector<int>& SupportPoset::cset_of(int var) const {
  return csets[index_of(vars, var)];
}

int SupportPoset::class_of(int var) const {
  const std::vector<int>& c = cset_of(var);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].cset == c) return static_cast<int>(i);
  throw Error("no class for variable " + std::to_string(var));
}

bool SupportPoset::class_leq(int a, int b) const {
  return subset(classes[a].cset, classes[b].cset);
}

std::vector<int> SupportPoset::class_label(int c) const {
  std::vector<int> label = classes[c].members;
  for (std::size_t below = 0; below < classes.size(); ++below) {
    if (static_cast<int>(below) == c) continue;
    if (!(class_leq(static_cast<int>(below), c))) continue;
    for (int v : classes[below].members)
      label.erase(std::remove(label.begin(), label.end(), v), label.end());
  }
  return label;
}

namespace {

// C-sets of the support variables: C(v) intersects the supports of all
// generators divisible by x_v.
std::pair<std::vector<int>, std::vector<std::vector<int>>> compute_csets(
    const MonomialIdeal& ideal) {
  std::vector<int> vars = ideal.support();
  std::vector<std::vector<int>> csets;
  csets.reserve(vars.size());
  for (int v : vars) {
    std::vector<int> cset;
    bool first = true;
    for (const Monomial& g : ideal.generators()) {
      if (g[v] == 0) continue;
      std::vector<int> supp = g.support();
      cset = first ? supp : intersect_sorted(cset, supp);
      first = false;
    }
    csets.push_back(std::move(cset));
  }
  return {std::move(vars), std::move(csets)};
}

MonomialIdeal squarefree_model(const MonomialIdeal& ideal) {
  if (!ideal.is_proper())
    throw ImproperIdealError("support poset needs a proper nonzero ideal");
  if (ideal.is_squarefree()) return ideal;
  return polarize_ideal(ideal).first;
}

}  // namespace

SupportPoset support_poset(const MonomialIdeal& ideal) {
  MonomialIdeal sf = squarefree_model(ideal);
  SupportPoset poset;
  poset.ambient_vars = sf.num_vars();
  std::tie(poset.vars, poset.csets) = compute_csets(sf);

  std::map<std::vector<int>, std::vector<int>> grouped;
  for (std::size_t i = 0; i < poset.vars.size(); ++i)
    grouped[poset.csets[i]].push_back(poset.vars[i]);
  for (auto& [cset, members] : grouped)
    poset.classes.push_back({cset, members});

  int nc = static_cast<int>(poset.classes.size());
  for (int a = 0; a < nc; ++a) {
    for (int b = 0; b < nc; ++b) {
      if (a == b || !poset.class_leq(a, b) || poset.class_leq(b, a)) continue;
      bool cover = true;
      for (int w = 0; w < nc && cover; ++w) {
        if (w == a || w == b) continue;
        if (poset.class_leq(a, w) && !poset.class_leq(w, a) &&
            poset.class_leq(w, b) && !poset.class_leq(b, w))
          cover = false;
      }
      if (cover) poset.class_hasse.emplace_back(a, b);
    }
  }
  return poset;
}

bool OrderedSupportPoset::element(int var) const {
  return std::binary_search(vars.begin(), vars.end(), var);
}

const std::vector<int>& OrderedSupportPoset::cset_of(int var) const {
  return csets[index_of(vars, var)];
}

bool OrderedSupportPoset::precedes(int u, int v) const {
  int iu = index_of(vars, u), iv = index_of(vars, v);
  if (csets[iu] == csets[iv]) return order_rank[iu] < order_rank[iv];
  return subset(csets[iu], csets[iv]);
}

bool OrderedSupportPoset::comparable(int u, int v) const {
  return precedes(u, v) || precedes(v, u);
}

bool OrderedSupportPoset::covers(int u, int v) const {
  if (!precedes(u, v)) return false;
  for (int w : vars)
    if (w != u && w != v && precedes(u, w) && precedes(w, v)) return false;
  return true;
}

std::vector<std::pair<int, int>> OrderedSupportPoset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u : vars)
    for (int v : vars)
      if (u != v && covers(u, v)) out.emplace_back(u, v);
  return out;
}

OrderedSupportPoset ordered_support_poset(const MonomialIdeal& ideal,
                                          const std::vector<int>& order) {
  MonomialIdeal sf = squarefree_model(ideal);
  OrderedSupportPoset poset;
  poset.ambient_vars = sf.num_vars();
  std::tie(poset.vars, poset.csets) = compute_csets(sf);

  poset.order_rank.assign(poset.vars.size(), 0);
  if (order.empty()) {
    for (std::size_t i = 0; i < poset.vars.size(); ++i)
      poset.order_rank[i] = poset.vars[i];
  } else {
    std::vector<int> rank(poset.ambient_vars, -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      int v = order[pos];
      if (v < 0 || v >= poset.ambient_vars)
        throw Error("order mentions variable " + std::to_string(v) +
                    " outside the ring");
      if (rank[v] >= 0)
        throw Error("order lists variable " + std::to_string(v) + " twice");
      rank[v] = static_cast<int>(pos);
    }
    for (std::size_t i = 0; i < poset.vars.size(); ++i) {
      if (rank[poset.vars[i]] < 0)
        throw Error("order is missing support variable " +
                    std::to_string(poset.vars[i]));
      poset.order_rank[i] = rank[poset.vars[i]];
    }
  }
  return poset;
}

bool is_path(const OrderedSupportPoset& poset, const std::vector<int>& elements) {
  if (elements.empty()) return false;
  std::vector<int> chain = elements;
  std::sort(chain.begin(), chain.end());
  if (std::adjacent_find(chain.begin(), chain.end()) != chain.end())
    throw Error("path elements must be distinct");
  for (int v : chain)
    if (!poset.element(v)) return false;

  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!poset.comparable(chain[i], chain[j])) return false;

  // All pairs are comparable at this point, so precedes is total here.
  std::sort(chain.begin(), chain.end(), [&](int a, int b) {
    return poset.precedes(a, b);
  });
  // No poset element may fit strictly between consecutive chain members.
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    for (int w : poset.vars)
      if (w != chain[i] && w != chain[i + 1] && poset.precedes(chain[i], w) &&
          poset.precedes(w, chain[i + 1]))
        return false;
  return true;
}

namespace {

int chain_cover_width(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> right_match;
  return n - max_bipartite_matching(n, adj, right_match);
}

}  // namespace

int width(const SupportPoset& poset) {
  // Dilworth on the variables: variables sharing a C-set are mutually
  // comparable (they chain under any refinement), so an antichain holds at
  // most one member per class and the value agrees with the class poset.
  int n = static_cast<int>(poset.vars.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool ij = subset(poset.csets[i], poset.csets[j]);
      bool ji = subset(poset.csets[j], poset.csets[i]);
      if ((ij && !ji) || (ij && ji && i < j)) adj[i].push_back(j);
    }
  return chain_cover_width(n, adj);
}

int width(const OrderedSupportPoset& poset) {
  int n = static_cast<int>(poset.vars.size());
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && poset.precedes(poset.vars[i], poset.vars[j]))
        adj[i].push_back(j);
  return chain_cover_width(n, adj);
}

PathPartition min_path_partition(const OrderedSupportPoset& poset) {
  int n = static_cast<int>(poset.vars.size());
  std::vector<std::vector<int>> adj(n);
  auto covers = poset.cover_pairs();
  for (const auto& [u, v] : covers)
    adj[index_of(poset.vars, u)].push_back(index_of(poset.vars, v));

  std::vector<int> right_match;
  max_bipartite_matching(n, adj, right_match);
  std::vector<int> next(n, -1);
  std::vector<bool> has_pred(n, false);
  for (int v = 0; v < n; ++v)
    if (right_match[v] >= 0) {
      next[right_match[v]] = v;
      has_pred[v] = true;
    }

  PathPartition partition;
  for (int i = 0; i < n; ++i) {
    if (has_pred[i]) continue;
    std::vector<int> block;
    for (int j = i; j >= 0; j = next[j]) block.push_back(poset.vars[j]);
    partition.blocks.push_back(std::move(block));
  }
  std::sort(partition.blocks.begin(), partition.blocks.end());
  return partition;
}

std::vector<PathPartition> all_path_partitions(const OrderedSupportPoset& poset,
                                               std::size_t max_partitions) {
  int n = static_cast<int>(poset.vars.size());
  // A linear extension of the poset: u < v implies |C(u)| < |C(v)| or
  // equal C-sets with a smaller order rank, so this tuple key respects it.
  std::vector<int> topo = poset.vars;
  std::sort(topo.begin(), topo.end(), [&](int a, int b) {
    int ia = index_of(poset.vars, a), ib = index_of(poset.vars, b);
    auto ka = std::make_tuple(poset.csets[ia].size(), poset.order_rank[ia], a);
    auto kb = std::make_tuple(poset.csets[ib].size(), poset.order_rank[ib], b);
    return ka < kb;
  });

  std::vector<PathPartition> out;
  std::vector<std::vector<int>> blocks;
  auto recurse = [&](auto&& self, int idx) -> void {
    if (idx == n) {
      PathPartition p;
      p.blocks = blocks;
      std::sort(p.blocks.begin(), p.blocks.end());
      out.push_back(std::move(p));
      if (out.size() > max_partitions)
        throw LimitExceededError("more than " +
                                 std::to_string(max_partitions) +
                                 " path partitions");
      return;
    }
    int v = topo[idx];
    // Index loop: deeper frames grow and shrink `blocks` past this size.
    std::size_t frame_blocks = blocks.size();
    for (std::size_t bi = 0; bi < frame_blocks; ++bi) {
      if (poset.covers(blocks[bi].back(), v)) {
        blocks[bi].push_back(v);
        self(self, idx + 1);
        blocks[bi].pop_back();
      }
    }
    blocks.emplace_back(1, v);
    self(self, idx + 1);
    blocks.pop_back();
  };
  recurse(recurse, 0);
  return out;
}

std::string to_dot(const SupportPoset& poset,
                   const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph support_poset {\n  rankdir=BT;\n";
  for (std::size_t c = 0; c < poset.classes.size(); ++c) {
    out << "  n" << c << " [label=\"";
    std::vector<int> label = poset.class_label(static_cast<int>(c));
    for (std::size_t i = 0; i < label.size(); ++i) {
      if (i) out << " ";
      out << names[label[i]];
    }
    out << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.class_hasse)
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace depolar
