#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "depolar/betti.hpp"
#include "depolar/depolarization.hpp"
#include "depolar/errors.hpp"
#include "depolar/hilbert.hpp"
#include "depolar/io.hpp"
#include "depolar/polarization.hpp"
#include "depolar/support_poset.hpp"

#include "support.hpp"

using namespace depolar;
using testsupport::load;
using testsupport::random_ideal;
using testsupport::random_squarefree_ideal;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal parse(const std::string& text) {
  std::istringstream in(text);
  return read_ideal(in).ideal;
}

// Renames variables of a squarefree ideal: exponent of variable i moves to
// perm[i].
MonomialIdeal rename(const MonomialIdeal& ideal, const std::vector<int>& perm) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(ideal.num_vars(), 0);
    for (int i = 0; i < ideal.num_vars(); ++i) e[perm[i]] = g[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.num_vars(), std::move(gens));
}

// Polarizes a depolarization result and renames the slots through its map:
// must reproduce the source ideal exactly.
MonomialIdeal polarize_back(const DepolarizationRecord& record,
                            int source_vars) {
  std::vector<int> caps;
  for (int b = 0; b < record.map.num_bases(); ++b)
    caps.push_back(record.map.slots(b));
  auto [pol, layout] = polarize_ideal(record.ideal, caps);
  std::vector<Monomial> gens;
  for (const auto& g : pol.generators()) {
    std::vector<int> e(source_vars, 0);
    for (int b = 0; b < layout.num_bases(); ++b)
      for (int l = 1; l <= layout.slots(b); ++l)
        e[record.map.target(b, l)] = g[layout.target(b, l)];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(source_vars, std::move(gens));
}

}  // namespace

TEST_CASE("polarization of monomials and layout bookkeeping") {
  CHECK(polarize_monomial(mono({3, 0, 1}), {3, 2, 1}) ==
        mono({1, 1, 1, 0, 0, 1}));
  CHECK(polarize_monomial(mono({0, 0}), {1, 1}) == mono({0, 0}));
  CHECK_THROWS_AS(polarize_monomial(mono({3}), {2}), CapExceededError);
  try {
    polarize_monomial(mono({0, 3}), {1, 2});
  } catch (const CapExceededError& e) {
    CHECK(e.variable() == 1);
  }

  VariableMap layout = slot_layout({2, 3});
  CHECK(layout.target_num_vars == 5);
  CHECK(layout.num_bases() == 2);
  CHECK(layout.slots(0) == 2);
  CHECK(layout.target(0, 1) == 0);
  CHECK(layout.target(1, 3) == 4);
  CHECK(layout.base_of(0) == std::pair<int, int>{0, 1});
  CHECK(layout.base_of(1) == std::pair<int, int>{0, 2});
  CHECK(layout.base_of(4) == std::pair<int, int>{1, 3});

  CHECK(slot_names({"x", "y"}, layout) ==
        std::vector<std::string>{"x_1", "x_2", "y_1", "y_2", "y_3"});
  VariableMap single = slot_layout({1, 2});
  CHECK(slot_names({"x", "y"}, single) ==
        std::vector<std::string>{"x", "y_1", "y_2"});
}

TEST_CASE("polarizing a squarefree ideal is the identity") {
  MonomialIdeal ideal = load("two_depolarizations.ideal").ideal;
  auto [pol, map] = polarize_ideal(ideal);
  CHECK(pol == ideal);
  CHECK(map.target_num_vars == ideal.num_vars());
  for (int b = 0; b < map.num_bases(); ++b) {
    CHECK(map.slots(b) == 1);
    CHECK(map.target(b, 1) == b);
  }
}

TEST_CASE("polarization golden: mixed two-variable system") {
  NamedIdeal is = load("is.ideal");
  auto [pol, map] = polarize_ideal(is.ideal);
  CHECK(pol.num_vars() == 5);
  CHECK(slot_names(is.names, map) ==
        std::vector<std::string>{"x", "y_1", "y_2", "z", "t"});
  CHECK(pol == parse("vars: x y1 y2 z t\n"
                     "z*t\ny1*z\ny1*y2\nx*z\nx*y1\n"));
}

TEST_CASE("polarization goldens: both depolarizations of the same ideal") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;

  MonomialIdeal a = load("two_depolarizations_a.ideal").ideal;
  auto [pa, ma] = polarize_ideal(a);
  CHECK(pa.num_vars() == 5);
  // slots a_1 a_2 b_1 b_2 c; renaming a1->y a2->x b1->t b2->u c->z gives
  // back the source in its own ring x y z t u.
  CHECK(rename(pa, {1, 0, 3, 4, 2}) == source);

  MonomialIdeal b = load("two_depolarizations_b.ideal").ideal;
  auto [pb, mb] = polarize_ideal(b);
  CHECK(pb.num_vars() == 5);
  // slots a_1 b_1 b_2 b_3 c; renaming a->x b1->y b2->t b3->u c->z.
  CHECK(rename(pb, {0, 1, 3, 4, 2}) == source);
}

TEST_CASE("copolarity certificates") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;
  MonomialIdeal a = load("two_depolarizations_a.ideal").ideal;
  MonomialIdeal b = load("two_depolarizations_b.ideal").ideal;

  auto cert_ab = copolar_bijection(a, b);
  REQUIRE(cert_ab.has_value());
  auto cert_as = copolar_bijection(a, source);
  REQUIRE(cert_as.has_value());
  auto cert_bs = copolar_bijection(b, source);
  REQUIRE(cert_bs.has_value());

  // Each certificate really transports one polarization onto the other.
  auto [pa, ma] = polarize_ideal(a);
  auto [pb, mb] = polarize_ideal(b);
  CHECK(rename(pa, *cert_ab) == pb);
  CHECK(rename(pa, *cert_as) == source);
  CHECK(rename(pb, *cert_bs) == source);

  CHECK(copolar_bijection(a, a).has_value());
}

TEST_CASE("identified-variable relatives are not copolar") {
  MonomialIdeal m3 = load("identified_not_copolar_m3.ideal").ideal;
  MonomialIdeal m7 = load("identified_not_copolar_m7.ideal").ideal;
  MonomialIdeal o5 = load("identified_not_copolar_o5.ideal").ideal;

  // The 3-variable ideal polarizes into a 7-variable ring, so the test
  // against the 7-variable squarefree ideal is a genuine isomorphism search.
  auto [pol, map] = polarize_ideal(m3);
  CHECK(pol.num_vars() == 7);

  CHECK(!copolar_bijection(m3, m7).has_value());
  CHECK(!copolar_bijection(o5, m7).has_value());
  CHECK(!copolar_bijection(m3, o5).has_value());
}

TEST_CASE("ideal isomorphism basics") {
  MonomialIdeal a = load("two_depolarizations_a.ideal").ideal;
  CHECK(ideal_isomorphism(a, a) == std::vector<int>{0, 1, 2});

  // Swap two variables and recover the swap.
  MonomialIdeal swapped = rename(a, {0, 2, 1});
  auto iso = ideal_isomorphism(a, swapped);
  REQUIRE(iso.has_value());
  CHECK(rename(a, *iso) == swapped);

  CHECK(!ideal_isomorphism(a, load("two_depolarizations_b.ideal").ideal)
             .has_value());
  CHECK(!ideal_isomorphism(a, MonomialIdeal(3, {mono({1, 0, 0})})).has_value());
}

TEST_CASE("support poset of the ten-variable example") {
  NamedIdeal named = load("ten_var_partition.ideal");
  SupportPoset poset = support_poset(named.ideal);

  CHECK(poset.ambient_vars == 10);
  CHECK(poset.vars == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(poset.cset_of(0) == std::vector<int>{0, 1, 3});
  CHECK(poset.cset_of(1) == std::vector<int>{0, 1, 3});
  CHECK(poset.cset_of(2) == std::vector<int>{0, 1, 2, 3});
  CHECK(poset.cset_of(3) == std::vector<int>{3});
  CHECK(poset.cset_of(4) == std::vector<int>{0, 1, 3, 4, 5});
  CHECK(poset.cset_of(5) == std::vector<int>{3, 5});
  CHECK(poset.cset_of(6) == std::vector<int>{6});
  CHECK(poset.cset_of(7) == std::vector<int>{6, 7});
  CHECK(poset.cset_of(8) == std::vector<int>{6, 7, 8});
  CHECK(poset.cset_of(9) == std::vector<int>{6, 7, 9});

  // Variables 1 and 2 share a C-set, everything else is alone.
  CHECK(poset.classes.size() == 9);
  CHECK(poset.class_of(0) == poset.class_of(1));
  CHECK(poset.classes[poset.class_of(0)].members == std::vector<int>{0, 1});
  CHECK(poset.class_leq(poset.class_of(3), poset.class_of(0)));
  CHECK(!poset.class_leq(poset.class_of(0), poset.class_of(3)));
  CHECK(poset.class_label(poset.class_of(2)) == std::vector<int>{2});

  CHECK(width(poset) == 4);

  OrderedSupportPoset ordered = ordered_support_poset(named.ideal);
  CHECK(width(ordered) == 4);
  CHECK(min_path_partition(ordered).size() == 4);

  // Natural order splits the shared class as x1 < x2.
  CHECK(ordered.covers(3, 0));
  CHECK(ordered.covers(0, 1));
  CHECK(ordered.covers(1, 2));
  CHECK(ordered.covers(1, 4));
  CHECK(ordered.covers(3, 5));
  CHECK(ordered.covers(5, 4));
  CHECK(!ordered.covers(3, 1));
  CHECK(!ordered.covers(3, 4));
  CHECK(ordered.precedes(3, 2));
  CHECK(!ordered.comparable(2, 4));

  // The reverse order inside the class flips the chain.
  OrderedSupportPoset flipped =
      ordered_support_poset(named.ideal, {3, 1, 0, 2, 5, 4, 6, 7, 8, 9});
  CHECK(flipped.covers(3, 1));
  CHECK(flipped.covers(1, 0));
  CHECK(flipped.covers(0, 2));
  CHECK(is_path(flipped, {3, 1, 0, 2}));
  // is_path sorts internally, so the listing order never matters...
  CHECK(is_path(ordered, {3, 1, 0, 2}));
  CHECK(is_path(ordered, {3, 0, 1, 2}));
  // ...but a gap does: 0 sits strictly between 3 and 1.
  CHECK(!is_path(ordered, {3, 1, 2}));
}

TEST_CASE("three ideals share one support poset") {
  SupportPoset first = support_poset(load("shared_poset_sigma1.ideal").ideal);
  SupportPoset second = support_poset(load("shared_poset_sigma2.ideal").ideal);
  SupportPoset third = support_poset(load("shared_poset_sigma3.ideal").ideal);

  CHECK(first.vars == second.vars);
  CHECK(first.csets == second.csets);
  CHECK(first.vars == third.vars);
  CHECK(first.csets == third.csets);

  CHECK(first.cset_of(0) == std::vector<int>{0, 1});
  CHECK(first.cset_of(1) == std::vector<int>{1});
  CHECK(first.cset_of(2) == std::vector<int>{2});
  CHECK(first.cset_of(3) == std::vector<int>{3});
  CHECK(first.cset_of(4) == std::vector<int>{3, 4});
}

TEST_CASE("support poset of a non-squarefree ideal is its polarization's") {
  NamedIdeal is = load("is.ideal");
  SupportPoset poset = support_poset(is.ideal);
  auto [pol, map] = polarize_ideal(is.ideal);
  SupportPoset direct = support_poset(pol);
  CHECK(poset.ambient_vars == 5);
  CHECK(poset.vars == direct.vars);
  CHECK(poset.csets == direct.csets);

  // Slot ring x y_1 y_2 z t: x free, y_1 < y_2, z < t.
  CHECK(poset.cset_of(0) == std::vector<int>{0});
  CHECK(poset.cset_of(1) == std::vector<int>{1});
  CHECK(poset.cset_of(2) == std::vector<int>{1, 2});
  CHECK(poset.cset_of(3) == std::vector<int>{3});
  CHECK(poset.cset_of(4) == std::vector<int>{3, 4});
  CHECK(width(poset) == 3);

  OrderedSupportPoset ordered = ordered_support_poset(pol);
  PathPartition smallest = min_path_partition(ordered);
  CHECK(smallest.size() == 3);
  CHECK(smallest.blocks ==
        std::vector<std::vector<int>>{{0}, {1, 2}, {3, 4}});
  CHECK(all_path_partitions(ordered, 100).size() == 4);
  CHECK_THROWS_AS(all_path_partitions(ordered, 2), LimitExceededError);

  std::string dot = to_dot(poset, slot_names(is.names, map));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("y_1") != std::string::npos);
}

TEST_CASE("depolarization along the worked ten-variable partition") {
  MonomialIdeal ideal = load("ten_var_partition.ideal").ideal;
  PathPartition partition{{{3, 1, 0, 2}, {5, 4}, {6, 7, 8}, {9}}};
  DepolarizationRecord record = depolarize(ideal, partition);

  CHECK(record.ideal == load("ten_var_partition_expected.ideal").ideal);
  CHECK(record.map.slot_targets ==
        std::vector<std::vector<int>>{{3, 1, 0, 2}, {5, 4}, {6, 7, 8}, {9}});
  CHECK(polarize_back(record, 10) == ideal);
}

TEST_CASE("depolarization reproduces both worked three-variable ideals") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;
  // Ring x y z t u; poset y < x, y < z, y < t < u.
  DepolarizationRecord a = depolarize(source, {{{1, 0}, {3, 4}, {2}}});
  CHECK(a.ideal == load("two_depolarizations_a.ideal").ideal);
  CHECK(polarize_back(a, 5) == source);

  DepolarizationRecord b = depolarize(source, {{{0}, {1, 3, 4}, {2}}});
  CHECK(b.ideal == load("two_depolarizations_b.ideal").ideal);
  CHECK(polarize_back(b, 5) == source);

  // Singleton blocks reproduce the ideal itself.
  DepolarizationRecord self =
      depolarize(source, {{{0}, {1}, {2}, {3}, {4}}});
  CHECK(self.ideal == source);
}

TEST_CASE("depolarization of the series-parallel slot ring") {
  auto [pol, map] = polarize_ideal(load("is.ideal").ideal);
  DepolarizationRecord record = depolarize(pol, {{{0}, {1, 2}, {3, 4}}});
  CHECK(record.ideal == parse("vars: a b c\nc^2\nb*c\nb^2\na*c\na*b\n"));
}

TEST_CASE("invalid partitions are rejected with the offending block") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;

  // Missing variable.
  CHECK_THROWS_AS(depolarize(source, {{{1, 0}, {3, 4}}}),
                  InvalidPartitionError);
  // Incomparable pair inside a block.
  CHECK_THROWS_AS(depolarize(source, {{{0, 2}, {1, 3, 4}}}),
                  InvalidPartitionError);
  // Duplicated variable.
  CHECK_THROWS_AS(depolarize(source, {{{1, 1}, {0, 3, 4}, {2}}}),
                  InvalidPartitionError);
  // Variable outside the ring.
  CHECK_THROWS_AS(depolarize(source, {{{1, 0}, {3, 4}, {2}, {7}}}),
                  InvalidPartitionError);
  // Comparable but not consecutive: y < u skips t.
  try {
    depolarize(source, {{{1, 4}, {0}, {2}, {3}}});
    FAIL("expected InvalidPartitionError");
  } catch (const InvalidPartitionError& e) {
    CHECK(e.block() == 0);
  }

  // Non-squarefree input is refused outright.
  CHECK_THROWS_AS(depolarize(load("is.ideal").ideal, {{{0}, {1}, {2}, {3}}}),
                  Error);

  // Gap through a two-element class: x4 then x3 skips the class {x1, x2}.
  MonomialIdeal ten = load("ten_var_partition.ideal").ideal;
  CHECK_THROWS_AS(depolarize(ten, {{{3, 2}, {0, 1}, {5, 4}, {6, 7, 8}, {9}}}),
                  InvalidPartitionError);
}

TEST_CASE("enumeration finds every depolarization of the worked example") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;
  DepolarizationEnumeration enumeration = enumerate_depolarizations(source);
  REQUIRE(!enumeration.records.empty());
  CHECK(!enumeration.class_orders_truncated);

  MonomialIdeal a = load("two_depolarizations_a.ideal").ideal;
  MonomialIdeal b = load("two_depolarizations_b.ideal").ideal;
  bool found_a = false, found_b = false, found_self = false;
  for (const DepolarizationRecord& record : enumeration.records) {
    // Every record is certified copolar to the source.
    auto cert = copolar_bijection(record.ideal, source);
    REQUIRE(cert.has_value());
    CHECK(polarize_back(record, source.num_vars()) == source);
    if (record.ideal.num_vars() == 3) {
      if (ideal_isomorphism(record.ideal, a).has_value()) found_a = true;
      if (ideal_isomorphism(record.ideal, b).has_value()) found_b = true;
    }
    if (record.ideal == source) found_self = true;
  }
  CHECK(found_a);
  CHECK(found_b);
  CHECK(found_self);

  // Refinements relate strictly finer to strictly coarser partitions.
  for (auto [i, j] : enumeration.refinements) {
    CHECK(enumeration.records[i].partition.size() >
          enumeration.records[j].partition.size());
  }
  // The two three-variable results are exactly the maxima.
  for (int index : enumeration.maximum_indices)
    CHECK(enumeration.records[index].ideal.num_vars() == 3);

  // JSONL rendering parses and has one object per record.
  std::string jsonl = enumeration_to_jsonl(
      enumeration, {"x", "y", "z", "t", "u"});
  std::istringstream lines(jsonl);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    if (!line.empty()) ++count;
  }
  CHECK(count == enumeration.records.size());
}

TEST_CASE("enumeration without dedup keeps raw order-partition pairs") {
  MonomialIdeal source = load("two_depolarizations.ideal").ideal;
  EnumerationOptions raw;
  raw.dedup = false;
  DepolarizationEnumeration all = enumerate_depolarizations(source, raw);
  DepolarizationEnumeration deduped = enumerate_depolarizations(source);
  CHECK(all.records.size() >= deduped.records.size());

  EnumerationOptions tight;
  tight.max_support = 3;
  CHECK_THROWS_AS(enumerate_depolarizations(source, tight),
                  LimitExceededError);
}

TEST_CASE("nine-variable pipeline: enumeration reaches the compact form") {
  MonomialIdeal ideal = load("nine_var_pipeline.ideal").ideal;
  MonomialIdeal target = load("nine_var_pipeline_target.ideal").ideal;

  CHECK(!is_quasi_stable(ideal));
  CHECK(is_quasi_stable(target));

  DepolarizationEnumeration enumeration = enumerate_depolarizations(ideal);
  bool found = false;
  for (int index : enumeration.maximum_indices) {
    const DepolarizationRecord& record = enumeration.records[index];
    if (record.ideal.num_vars() != 3) continue;
    if (ideal_isomorphism(record.ideal, target).has_value()) {
      CHECK(copolar_bijection(record.ideal, ideal).has_value());
      found = true;
    }
  }
  CHECK(found);

  // Minimal path partition gives the three chains directly.
  OrderedSupportPoset poset = ordered_support_poset(ideal);
  PathPartition partition = min_path_partition(poset);
  REQUIRE(partition.size() == 3);
  CHECK(depolarize(ideal, partition).ideal == target);

  // Projective dimension and regularity agree across the pair.
  BettiTable big = betti_numbers(ideal);
  BettiTable small = betti_numbers(target);
  CHECK(big.proj_dim() == 2);
  CHECK(small.proj_dim() == 2);
  CHECK(big.regularity() == 5);
  CHECK(small.regularity() == 5);
  CHECK(big.graded() == small.graded());
}

TEST_CASE("quasi-stability against saturation structure") {
  CHECK(is_quasi_stable(parse("vars: x y\nx\n")));
  CHECK(!is_quasi_stable(parse("vars: x y\ny\n")));
  CHECK(is_quasi_stable(parse("vars: x y\nx^2\nx*y\n")));
  CHECK(!is_quasi_stable(parse("vars: x y\ny^2\nx*y\n")));
  CHECK(is_quasi_stable(parse("vars: x y z\nx^3\ny^2\nz^4\n")));
  CHECK(is_quasi_stable(parse("vars: x y\nx\ny\n")));
}

TEST_CASE("cover-set families: verified and rejected") {
  // An antichain family is realized by its product ideal.
  CoverSetReport good = ideal_from_cover_sets(3, {{0, 1}, {0, 1}, {2}});
  CHECK(good.verified());
  CHECK(good.ideal == parse("vars: x y z\nz\nx*y\n"));

  // Chain family: conditions hold but the product ideal collapses.
  CoverSetReport chain = ideal_from_cover_sets(3, {{0}, {0, 1}, {0, 1, 2}});
  CHECK(chain.closure_respected);
  CHECK(chain.transitive);
  CHECK(!chain.poset_matches);
  CHECK(!chain.verified());

  CoverSetReport closure = ideal_from_cover_sets(2, {{1}, {0, 1}});
  CHECK(!closure.closure_respected);
  CHECK(closure.closure_failures == std::vector<int>{0});

  CoverSetReport transitivity =
      ideal_from_cover_sets(3, {{0, 2}, {0, 1}, {2}});
  CHECK(!transitivity.transitive);
  REQUIRE(!transitivity.transitivity_failures.empty());
  CHECK(transitivity.transitivity_failures.front() ==
        std::array<int, 3>{0, 1, 2});

  CHECK_THROWS_AS(ideal_from_cover_sets(2, {{0}}), Error);
  CHECK_THROWS_AS(ideal_from_cover_sets(2, {{0}, {5}}), Error);
}

TEST_CASE("disjoint path posets from prescribed lengths") {
  DisjointPathsResult result = ideal_from_disjoint_paths({6, 4, 1, 1, 1, 1});
  CHECK(result.poset_matches);
  CHECK(result.ideal.num_vars() == 14);

  auto sf = [](std::vector<int> vars) {
    std::vector<int> e(14, 0);
    for (int v : vars) e[v] = 1;
    return Monomial(std::move(e));
  };
  CHECK(result.g1 == std::vector<Monomial>{sf({0, 1, 2, 3, 4, 5}),
                                           sf({6, 7, 8, 9})});
  CHECK(result.g2 == std::vector<Monomial>{sf({0, 1, 6}), sf({0, 1, 2, 10}),
                                           sf({0, 1, 2, 3, 11}),
                                           sf({0, 1, 2, 3, 4, 12}),
                                           sf({6, 7, 10}), sf({6, 7, 8, 11})});
  CHECK(result.g3 == std::vector<Monomial>{sf({0, 13}), sf({12, 13})});
  CHECK(result.g3_starts == std::vector<int>{0, 12, 13});

  // The support poset really is six disjoint chains with those lengths.
  SupportPoset poset = support_poset(result.ideal);
  CHECK(poset.vars.size() == 14);
  OrderedSupportPoset ordered = ordered_support_poset(result.ideal);
  PathPartition chains = min_path_partition(ordered);
  REQUIRE(chains.size() == 6);
  std::vector<std::size_t> sizes;
  for (const auto& block : chains.blocks) sizes.push_back(block.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  CHECK(sizes == std::vector<std::size_t>{6, 4, 1, 1, 1, 1});

  // Within a chain the cover structure is sequential.
  CHECK(is_path(ordered, {0, 1, 2, 3, 4, 5}));
  CHECK(is_path(ordered, {6, 7, 8, 9}));
  CHECK(!ordered.comparable(0, 6));
  CHECK(!ordered.comparable(5, 13));
}

TEST_CASE("disjoint path constructor rejects impossible shapes") {
  CHECK_THROWS_WITH_AS(ideal_from_disjoint_paths({2, 1}),
                       "two paths of different lengths have no squarefree "
                       "ideal with that support poset",
                       Error);
  CHECK_THROWS_AS(ideal_from_disjoint_paths({3}), Error);
  CHECK_THROWS_AS(ideal_from_disjoint_paths({}), Error);
  CHECK_THROWS_AS(ideal_from_disjoint_paths({1, 2}), Error);
  CHECK_THROWS_AS(ideal_from_disjoint_paths({3, 1}), Error);

  // Equal lengths are always fine, including the two-path case.
  CHECK(ideal_from_disjoint_paths({2, 2}).poset_matches);
  CHECK(ideal_from_disjoint_paths({1, 1}).poset_matches);

  DisjointPathsResult full = ideal_from_disjoint_paths({3, 3, 3});
  CHECK(full.poset_matches);
  // All paths of full length: depolarizing along the chains gives a
  // zero-dimensional ideal.
  OrderedSupportPoset poset = ordered_support_poset(full.ideal);
  DepolarizationRecord record =
      depolarize(full.ideal, min_path_partition(poset));
  CHECK(record.ideal.num_vars() == 3);
  CHECK(height(record.ideal) == 3);
}

TEST_CASE("width never exceeds the least path partition") {
  std::mt19937_64 rng(97531);
  for (int trial = 0; trial < 60; ++trial) {
    MonomialIdeal ideal = random_squarefree_ideal(rng);
    if (!ideal.is_proper()) continue;
    OrderedSupportPoset poset = ordered_support_poset(ideal);
    PathPartition partition = min_path_partition(poset);
    CHECK(width(poset) <= static_cast<int>(partition.size()));
    for (const auto& block : partition.blocks) CHECK(is_path(poset, block));

    // Depolarizing along a least path partition always succeeds and uses
    // one variable per block.
    DepolarizationRecord record = depolarize(ideal, partition);
    CHECK(record.ideal.num_vars() == static_cast<int>(partition.size()));

    // The depolarized ring drops variables outside the support, while
    // polarization keeps every ambient variable, so certify against the
    // source restricted to its support.
    std::vector<int> support = ideal.support();
    std::vector<int> position(ideal.num_vars(), -1);
    for (std::size_t s = 0; s < support.size(); ++s)
      position[support[s]] = static_cast<int>(s);
    std::vector<Monomial> restricted_gens;
    for (const Monomial& g : ideal.generators()) {
      std::vector<int> e(support.size(), 0);
      for (int v = 0; v < ideal.num_vars(); ++v)
        if (g[v] > 0) e[position[v]] = g[v];
      restricted_gens.emplace_back(std::move(e));
    }
    MonomialIdeal restricted(static_cast<int>(support.size()),
                             std::move(restricted_gens));
    CHECK(copolar_bijection(record.ideal, restricted).has_value());
  }
}

TEST_CASE("projective dimension never exceeds the least path partition") {
  std::mt19937_64 rng(86420);
  int tested = 0;
  for (int trial = 0; trial < 60 && tested < 20; ++trial) {
    MonomialIdeal ideal = random_squarefree_ideal(rng, 6, 5);
    if (!ideal.is_proper()) continue;
    ++tested;
    OrderedSupportPoset poset = ordered_support_poset(ideal);
    int blocks = static_cast<int>(min_path_partition(poset).size());
    CHECK(proj_dim(ideal) <= blocks);
    CHECK(pd_upper_bound(ideal) >= 0);
  }
  CHECK(tested >= 15);
}

TEST_CASE("hilbert data is invariant under depolarization") {
  std::mt19937_64 rng(1123);
  for (int trial = 0; trial < 25; ++trial) {
    MonomialIdeal ideal = random_squarefree_ideal(rng);
    if (!ideal.is_proper()) continue;
    OrderedSupportPoset poset = ordered_support_poset(ideal);
    DepolarizationRecord record = depolarize(ideal, min_path_partition(poset));
    CHECK(hilbert_numerator_graded(record.ideal) ==
          hilbert_numerator_graded(ideal));
    BettiTable before = betti_numbers(ideal);
    BettiTable after = betti_numbers(record.ideal);
    CHECK(before.graded() == after.graded());
    CHECK(height(record.ideal) == height(ideal));
  }
}
