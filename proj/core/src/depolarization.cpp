#include "depolar/depolarization.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "depolar/errors.hpp"

namespace depolar {

namespace {

std::string block_text(const std::vector<int>& block) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out << ",";
    out << block[i];
  }
  out << "}";
  return out.str();
}

}  // namespace

DepolarizationRecord depolarize(const MonomialIdeal& ideal,
                                const PathPartition& partition) {
  if (!ideal.is_proper())
    throw ImproperIdealError("depolarization needs a proper nonzero ideal");
  if (!ideal.is_squarefree())
    throw Error("depolarization is defined on squarefree ideals; polarize first");

  std::vector<int> support = ideal.support();
  std::vector<int> owner(ideal.num_vars(), -1);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (partition.blocks[b].empty())
      throw InvalidPartitionError("block " + std::to_string(b) + " is empty",
                                  static_cast<int>(b));
    for (int v : partition.blocks[b]) {
      if (v < 0 || v >= ideal.num_vars() ||
          !std::binary_search(support.begin(), support.end(), v))
        throw InvalidPartitionError(
            "block " + block_text(partition.blocks[b]) +
                " mentions variable " + std::to_string(v) +
                " outside the ideal support",
            static_cast<int>(b));
      if (owner[v] != -1)
        throw InvalidPartitionError(
            "variable " + std::to_string(v) + " appears in two blocks",
            static_cast<int>(b));
      owner[v] = static_cast<int>(b);
    }
  }
  for (int v : support)
    if (owner[v] == -1)
      throw InvalidPartitionError(
          "support variable " + std::to_string(v) + " is not covered");

  // Reconstruct, per class of equal C-sets, the chain order implied by the
  // block sequences.  A block visits a class in at most one contiguous run;
  // the run continuing from below the class must come first and the run
  // continuing above it must come last.
  SupportPoset base = support_poset(ideal);
  std::vector<int> order;
  for (const auto& cls : base.classes) {
    struct Run {
      int block;
      std::vector<int> elements;
      bool has_pred = false, has_succ = false;
    };
    std::vector<Run> runs;
    std::set<int> members(cls.members.begin(), cls.members.end());
    for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
      const auto& blk = partition.blocks[b];
      Run run;
      run.block = static_cast<int>(b);
      for (std::size_t i = 0; i < blk.size(); ++i) {
        if (!members.count(blk[i])) continue;
        if (!run.elements.empty() && !members.count(blk[i - 1]))
          throw InvalidPartitionError(
              "block " + block_text(blk) +
                  " visits a class of equal C-sets twice",
              static_cast<int>(b));
        if (run.elements.empty()) run.has_pred = i > 0;
        run.elements.push_back(blk[i]);
        run.has_succ = i + 1 < blk.size() && !members.count(blk[i + 1]);
      }
      if (!run.elements.empty()) runs.push_back(std::move(run));
    }

    int preds = 0, succs = 0;
    for (const Run& r : runs) {
      preds += r.has_pred;
      succs += r.has_succ;
    }
    if (preds > 1 || succs > 1 ||
        (runs.size() > 1 &&
         std::any_of(runs.begin(), runs.end(),
                     [](const Run& r) { return r.has_pred && r.has_succ; })))
      throw InvalidPartitionError(
          "blocks traverse the class " + block_text(cls.members) +
          " inconsistently: it admits one entry from below and one exit above");

    std::stable_sort(runs.begin(), runs.end(), [](const Run& a, const Run& b) {
      int ka = a.has_pred ? 0 : (a.has_succ ? 2 : 1);
      int kb = b.has_pred ? 0 : (b.has_succ ? 2 : 1);
      if (ka != kb) return ka < kb;
      return a.block < b.block;
    });
    for (const Run& r : runs)
      order.insert(order.end(), r.elements.begin(), r.elements.end());
  }

  OrderedSupportPoset poset = ordered_support_poset(ideal, order);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    const auto& blk = partition.blocks[b];
    for (std::size_t i = 0; i + 1 < blk.size(); ++i)
      if (!poset.covers(blk[i], blk[i + 1]))
        throw InvalidPartitionError(
            "block " + block_text(blk) + " is not a path: " +
                std::to_string(blk[i + 1]) + " does not cover " +
                std::to_string(blk[i]),
            static_cast<int>(b));
  }

  // Rewrite the generators.  Support meets each block in a prefix of the
  // chain, so the exponent is just the intersection size.
  int nblocks = static_cast<int>(partition.blocks.size());
#ifndef NDEBUG
  std::vector<int> slot_of(ideal.num_vars(), -1);
  for (int b = 0; b < nblocks; ++b)
    for (std::size_t l = 0; l < partition.blocks[b].size(); ++l)
      slot_of[partition.blocks[b][l]] = static_cast<int>(l);
#endif

  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<int> e(nblocks, 0);
    for (int v : g.support()) ++e[owner[v]];
#ifndef NDEBUG
    // The support meets every block in a prefix of its chain.
    for (int v : g.support())
      for (int l = 0; l < slot_of[v]; ++l)
        assert(g[partition.blocks[owner[v]][l]] > 0);
#endif
    gens.emplace_back(std::move(e));
  }

  DepolarizationRecord record;
  record.partition = partition;
  record.order = order;
  record.ideal = MonomialIdeal(nblocks, std::move(gens));
  if (record.ideal.generators().size() != ideal.generators().size())
    throw Error("internal: depolarization changed the number of generators");
  record.map.slot_targets = partition.blocks;
  record.map.target_num_vars = ideal.num_vars();
  return record;
}

namespace {

// Per-variable fingerprint: the sorted multiset of (generator degree,
// exponent) pairs.  Invariant under variable bijections.
std::vector<std::pair<int, int>> signature(const MonomialIdeal& ideal, int v) {
  std::vector<std::pair<int, int>> sig;
  sig.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    sig.emplace_back(g.total_degree(), g[v]);
  std::sort(sig.begin(), sig.end());
  return sig;
}

struct IsoSearch {
  const MonomialIdeal& a;
  const MonomialIdeal& b;
  long budget;
  std::vector<int> image;      // a-var -> b-var or -1
  std::vector<bool> used;      // b-var taken
  std::vector<int> order;      // assignment order of a-vars
  std::vector<std::vector<int>> candidates;  // per a-var

  bool consistent(int depth) const {
    // Compare the multisets of generator fingerprints restricted to the
    // assigned variables; mismatch prunes the branch.
    std::vector<std::vector<int>> fa, fb;
    for (const Monomial& g : a.generators()) {
      std::vector<int> f{g.total_degree()};
      for (int d = 0; d <= depth; ++d) f.push_back(g[order[d]]);
      fa.push_back(std::move(f));
    }
    for (const Monomial& g : b.generators()) {
      std::vector<int> f{g.total_degree()};
      for (int d = 0; d <= depth; ++d) f.push_back(g[image[order[d]]]);
      fb.push_back(std::move(f));
    }
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    return fa == fb;
  }

  bool run(int depth) {
    if (--budget < 0)
      throw InconclusiveError(
          "isomorphism search budget exhausted; result unknown");
    if (depth == static_cast<int>(order.size())) return verify();
    int v = order[depth];
    for (int w : candidates[v]) {
      if (used[w]) continue;
      image[v] = w;
      used[w] = true;
      if (consistent(depth) && run(depth + 1)) return true;
      used[w] = false;
      image[v] = -1;
    }
    return false;
  }

  bool verify() const {
    std::vector<Monomial> mapped;
    mapped.reserve(a.generators().size());
    for (const Monomial& g : a.generators()) {
      std::vector<int> e(b.num_vars(), 0);
      for (int v = 0; v < a.num_vars(); ++v) e[image[v]] = g[v];
      mapped.emplace_back(std::move(e));
    }
    std::sort(mapped.begin(), mapped.end());
    return mapped == b.generators();
  }
};

}  // namespace

std::optional<std::vector<int>> ideal_isomorphism(const MonomialIdeal& a,
                                                  const MonomialIdeal& b,
                                                  const SearchLimits& limits) {
  if (a.num_vars() != b.num_vars()) return std::nullopt;
  if (a.generators().size() != b.generators().size()) return std::nullopt;
  int n = a.num_vars();

  std::vector<int> degs_a, degs_b;
  for (const Monomial& g : a.generators()) degs_a.push_back(g.total_degree());
  for (const Monomial& g : b.generators()) degs_b.push_back(g.total_degree());
  std::sort(degs_a.begin(), degs_a.end());
  std::sort(degs_b.begin(), degs_b.end());
  if (degs_a != degs_b) return std::nullopt;

  std::map<std::vector<std::pair<int, int>>, std::vector<int>> groups_b;
  for (int w = 0; w < n; ++w) groups_b[signature(b, w)].push_back(w);

  IsoSearch search{a, b, limits.max_nodes, std::vector<int>(n, -1),
                   std::vector<bool>(n, false), {}, {}};
  search.candidates.resize(n);
  for (int v = 0; v < n; ++v) {
    auto it = groups_b.find(signature(a, v));
    if (it == groups_b.end()) return std::nullopt;
    search.candidates[v] = it->second;
  }

  search.order.resize(n);
  std::iota(search.order.begin(), search.order.end(), 0);
  std::sort(search.order.begin(), search.order.end(), [&](int x, int y) {
    if (search.candidates[x].size() != search.candidates[y].size())
      return search.candidates[x].size() < search.candidates[y].size();
    return x < y;
  });

  if (search.run(0)) return search.image;
  return std::nullopt;
}

std::optional<std::vector<int>> copolar_bijection(const MonomialIdeal& a,
                                                  const MonomialIdeal& b,
                                                  const SearchLimits& limits) {
  if (!a.is_proper() || !b.is_proper())
    throw ImproperIdealError("copolarity test needs proper nonzero ideals");
  return ideal_isomorphism(polarize_ideal(a).first, polarize_ideal(b).first,
                           limits);
}

int pd_upper_bound(const MonomialIdeal& ideal) {
  return width(support_poset(ideal));
}

namespace {

std::vector<std::vector<int>> class_linearizations(const std::vector<int>& members,
                                                   int max_class_size,
                                                   bool& truncated) {
  if (static_cast<int>(members.size()) > max_class_size) {
    truncated = true;
    return {members};
  }
  std::vector<int> perm = members;
  std::vector<std::vector<int>> out;
  std::sort(perm.begin(), perm.end());
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> blocks_as_sets(const PathPartition& p) {
  std::vector<std::vector<int>> sets = p.blocks;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  return sets;
}

bool refines(const std::vector<std::vector<int>>& fine,
             const std::vector<std::vector<int>>& coarse) {
  for (const auto& f : fine) {
    bool inside = false;
    for (const auto& c : coarse)
      if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

DepolarizationEnumeration enumerate_depolarizations(
    const MonomialIdeal& ideal, const EnumerationOptions& options) {
  if (!ideal.is_proper())
    throw ImproperIdealError("enumeration needs a proper nonzero ideal");
  if (!ideal.is_squarefree())
    throw Error("depolarizations are enumerated on squarefree ideals; polarize first");

  SupportPoset base = support_poset(ideal);
  if (static_cast<int>(base.vars.size()) > options.max_support)
    throw LimitExceededError(
        "support has " + std::to_string(base.vars.size()) +
        " variables, over the enumeration limit of " +
        std::to_string(options.max_support));

  DepolarizationEnumeration result;

  std::vector<std::vector<std::vector<int>>> per_class;
  for (const auto& cls : base.classes)
    per_class.push_back(class_linearizations(cls.members, options.max_class_size,
                                             result.class_orders_truncated));

  std::vector<std::size_t> pick(per_class.size(), 0);
  std::vector<std::vector<std::vector<int>>> kept_sets;  // parallel to records

  for (;;) {
    std::vector<int> order;
    for (std::size_t c = 0; c < per_class.size(); ++c)
      order.insert(order.end(), per_class[c][pick[c]].begin(),
                   per_class[c][pick[c]].end());

    OrderedSupportPoset poset = ordered_support_poset(ideal, order);
    for (PathPartition& partition :
         all_path_partitions(poset, options.max_partitions)) {
      DepolarizationRecord record = depolarize(ideal, partition);
      bool duplicate = false;
      if (options.dedup) {
        auto sets = blocks_as_sets(record.partition);
        for (std::size_t i = 0; i < result.records.size() && !duplicate; ++i) {
          if (kept_sets[i] == sets) {
            duplicate = true;
          } else if (result.records[i].ideal.num_vars() ==
                     record.ideal.num_vars()) {
            duplicate = ideal_isomorphism(result.records[i].ideal, record.ideal,
                                          options.iso_limits)
                            .has_value();
          }
        }
        if (!duplicate) kept_sets.push_back(std::move(sets));
      } else {
        // Raw mode still collapses records that are literally the same
        // (identical block sequences arise under several class orders).
        for (const DepolarizationRecord& r : result.records)
          if (r.partition == record.partition && r.order == record.order) {
            duplicate = true;
            break;
          }
      }
      if (!duplicate) result.records.push_back(std::move(record));
    }

    std::size_t c = 0;
    while (c < pick.size() && ++pick[c] == per_class[c].size()) pick[c++] = 0;
    if (c == pick.size()) break;
  }

  for (std::size_t i = 0; i < result.records.size(); ++i) {
    auto fine = blocks_as_sets(result.records[i].partition);
    for (std::size_t j = 0; j < result.records.size(); ++j) {
      if (i == j) continue;
      auto coarse = blocks_as_sets(result.records[j].partition);
      if (fine != coarse && refines(fine, coarse))
        result.refinements.emplace_back(static_cast<int>(i),
                                        static_cast<int>(j));
    }
  }
  std::vector<bool> has_coarser(result.records.size(), false);
  for (const auto& [i, j] : result.refinements) has_coarser[i] = true;
  for (std::size_t i = 0; i < result.records.size(); ++i)
    if (!has_coarser[i]) result.maximum_indices.push_back(static_cast<int>(i));
  return result;
}

std::string enumeration_to_jsonl(const DepolarizationEnumeration& enumeration,
                                 const std::vector<std::string>& names) {
  std::ostringstream out;
  std::set<int> maximums(enumeration.maximum_indices.begin(),
                         enumeration.maximum_indices.end());
  for (std::size_t i = 0; i < enumeration.records.size(); ++i) {
    const DepolarizationRecord& r = enumeration.records[i];
    nlohmann::json j;
    j["id"] = i;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& block : r.partition.blocks) {
      nlohmann::json b = nlohmann::json::array();
      for (int v : block) b.push_back(names[v]);
      blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    nlohmann::json ord = nlohmann::json::array();
    for (int v : r.order) ord.push_back(names[v]);
    j["order"] = std::move(ord);
    j["num_vars"] = r.ideal.num_vars();
    std::vector<std::string> target_names;
    for (std::size_t b = 0; b < r.partition.blocks.size(); ++b)
      target_names.push_back("y" + std::to_string(b + 1));
    nlohmann::json gens = nlohmann::json::array();
    for (const Monomial& g : r.ideal.generators()) {
      std::ostringstream m;
      bool first = true;
      for (int v = 0; v < g.num_vars(); ++v) {
        if (g[v] == 0) continue;
        if (!first) m << "*";
        m << target_names[v];
        if (g[v] > 1) m << "^" << g[v];
        first = false;
      }
      gens.push_back(m.str());
    }
    j["generators"] = std::move(gens);
    nlohmann::json refs = nlohmann::json::array();
    for (const auto& [x, y] : enumeration.refinements)
      if (x == static_cast<int>(i)) refs.push_back(y);
    j["refines"] = std::move(refs);
    j["maximum"] = maximums.count(static_cast<int>(i)) > 0;
    out << j.dump() << "\n";
  }
  return out.str();
}

CoverSetReport ideal_from_cover_sets(int num_vars,
                                     const std::vector<std::vector<int>>& csets) {
  if (static_cast<int>(csets.size()) != num_vars)
    throw Error("need one candidate C-set per variable");
  std::vector<std::set<int>> c(num_vars);
  for (int i = 0; i < num_vars; ++i) {
    for (int k : csets[i]) {
      if (k < 0 || k >= num_vars)
        throw Error("C-set of variable " + std::to_string(i) +
                    " mentions variable " + std::to_string(k) +
                    " outside the ring");
      c[i].insert(k);
    }
  }

  CoverSetReport report;
  report.closure_respected = true;
  report.transitive = true;
  for (int i = 0; i < num_vars; ++i)
    if (!c[i].count(i)) {
      report.closure_respected = false;
      report.closure_failures.push_back(i);
    }
  for (int j = 0; j < num_vars; ++j)
    for (int i : c[j])
      for (int k : c[i])
        if (!c[j].count(k)) {
          report.transitive = false;
          report.transitivity_failures.push_back({i, j, k});
        }

  std::vector<Monomial> gens;
  for (int i = 0; i < num_vars; ++i) {
    std::vector<int> e(num_vars, 0);
    for (int k : c[i]) e[k] = 1;
    gens.emplace_back(std::move(e));
  }
  report.ideal = MonomialIdeal(num_vars, std::move(gens));

  if (report.closure_respected && report.transitive &&
      report.ideal.is_proper()) {
    SupportPoset poset = support_poset(report.ideal);
    report.poset_matches = true;
    if (poset.vars != report.ideal.support()) report.poset_matches = false;
    for (int v : poset.vars) {
      std::vector<int> expected(c[v].begin(), c[v].end());
      if (poset.cset_of(v) != expected) {
        report.poset_matches = false;
        break;
      }
    }
    // Variables outside the ideal support have no poset element; if any
    // candidate set was nonempty there, the input cannot match.
    std::vector<int> support = report.ideal.support();
    for (int v = 0; v < num_vars; ++v)
      if (!std::binary_search(support.begin(), support.end(), v) &&
          !c[v].empty())
        report.poset_matches = false;
  }
  return report;
}

DisjointPathsResult ideal_from_disjoint_paths(const std::vector<int>& lengths) {
  int n = static_cast<int>(lengths.size());
  if (n < 2) throw Error("need at least two paths");
  for (int i = 0; i + 1 < n; ++i)
    if (lengths[i] < lengths[i + 1])
      throw Error("path lengths must be non-increasing");
  for (int m : lengths)
    if (m < 1 || m > n)
      throw Error("path lengths must lie between 1 and the number of paths");
  if (!(n > 2 || lengths[0] == lengths[1]))
    throw Error(
        "two paths of different lengths have no squarefree ideal with that "
        "support poset");

  int m = std::accumulate(lengths.begin(), lengths.end(), 0);
  // start[i] is the ring index of a_{i,1}; path i occupies start[i] ..
  // start[i] + lengths[i] - 1.
  std::vector<int> start(n, 0);
  for (int i = 1; i < n; ++i) start[i] = start[i - 1] + lengths[i - 1];

  auto path_prefix = [&](int i, int j) {  // a_{i,1} ... a_{i,j}
    std::vector<int> e(m, 0);
    for (int l = 0; l < j; ++l) e[start[i] + l] = 1;
    return Monomial(std::move(e));
  };

  DisjointPathsResult result;
  for (int i = 0; i < n; ++i)
    if (lengths[i] > 1) result.g1.push_back(path_prefix(i, lengths[i]));
  // Two single-vertex paths: a pair product would merge the two C-sets,
  // but the bare variables realize the antichain directly.  With more
  // paths the pair products separate the C-sets on their own, and bare
  // variables would instead absorb the longer generators.
  if (n == 2 && lengths[0] == 1)
    for (int i = 0; i < n; ++i) result.g1.push_back(path_prefix(i, 1));

  // b counts how often each start variable appears as the extra factor.
  std::vector<int> b_uses(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 2; j < lengths[i]; ++j) {
      int bi = (i + j - 1) % n;  // 0-based form of (i + j - 1) mod n
      Monomial mu = path_prefix(i, j);
      mu.exponents[start[bi]] = 1;
      ++b_uses[bi];
      result.g2.push_back(std::move(mu));
    }
  }

  for (int i = 0; i < n; ++i) {
    bool eligible = lengths[i] == 1 ? b_uses[i] <= 1 : b_uses[i] == 0;
    if (eligible) result.g3_starts.push_back(start[i]);
  }
  for (std::size_t x = 0; x < result.g3_starts.size(); ++x) {
    for (std::size_t y = x + 1; y < result.g3_starts.size(); ++y) {
      std::vector<int> e(m, 0);
      e[result.g3_starts[x]] = e[result.g3_starts[y]] = 1;
      Monomial pair(std::move(e));
      bool redundant = false;
      for (const Monomial& g : result.g1)
        if (divides(pair, g) || divides(g, pair)) { redundant = true; break; }
      for (const Monomial& g : result.g2)
        if (!redundant && divides(pair, g)) redundant = true;
      if (!redundant) result.g3.push_back(std::move(pair));
    }
  }

  std::vector<Monomial> gens;
  gens.insert(gens.end(), result.g1.begin(), result.g1.end());
  gens.insert(gens.end(), result.g2.begin(), result.g2.end());
  gens.insert(gens.end(), result.g3.begin(), result.g3.end());
  result.ideal = MonomialIdeal(m, std::move(gens));

  SupportPoset poset = support_poset(result.ideal);
  result.poset_matches =
      static_cast<int>(poset.vars.size()) == m;
  if (result.poset_matches) {
    for (int i = 0; i < n && result.poset_matches; ++i)
      for (int j = 1; j <= lengths[i] && result.poset_matches; ++j) {
        std::vector<int> expected;
        for (int l = 0; l < j; ++l) expected.push_back(start[i] + l);
        if (poset.cset_of(start[i] + j - 1) != expected)
          result.poset_matches = false;
      }
  }
  return result;
}

bool is_quasi_stable(const MonomialIdeal& ideal) {
  if (!ideal.is_proper())
    throw ImproperIdealError("nested-type test needs a proper nonzero ideal");
  int n = ideal.num_vars();
  // I : (x_1..x_j)^inf equals the intersection of the single-variable
  // saturations I : x_l^inf over l <= j.
  MonomialIdeal running;
  for (int j = 0; j < n; ++j) {
    MonomialIdeal sat = saturate_variable(ideal, j);
    running = j == 0 ? sat : intersect(running, sat);
    if (sat != running) return false;
  }
  return true;
}

}  // namespace depolar
