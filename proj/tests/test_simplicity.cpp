#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "hyper/constructions.hpp"
#include "hyper/morphism.hpp"
#include "hyper/simplicity.hpp"
#include "support.hpp"

using namespace hyper;

namespace {

Hypergroup utumi_z8() {
  auto base = cyclic_group(8).as_multistructure();
  return Hypergroup::certify(utumi({base, parse_partition("{0}|{1,4,7}|{2,3,5,6}", 8), 0}));
}

Hypergroup group_hg(const GroupTable& g) { return Hypergroup::certify(g.as_multistructure()); }

oracle::Grp as_oracle(const GroupTable& g) {
  return {static_cast<int>(g.order()), [&g](int a, int b) { return static_cast<int>(g.multiply(a, b)); }};
}

std::vector<std::pair<std::string, GroupTable>> small_groups() {
  std::vector<std::pair<std::string, GroupTable>> out;
  for (std::size_t n = 1; n <= 12; ++n) out.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  out.emplace_back("Klein", corpus::klein());
  out.emplace_back("Sym3", symmetric_group(3));
  for (std::size_t m : {4, 5, 6}) out.emplace_back("D" + std::to_string(2 * m), dihedral_group(m));
  out.emplace_back("Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4)));
  out.emplace_back("Z2xZ2xZ2", direct_product(corpus::klein(), cyclic_group(2)));
  out.emplace_back("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3)));
  out.emplace_back("Z2xZ6", direct_product(cyclic_group(2), cyclic_group(6)));
  auto s4 = symmetric_group(4);
  out.emplace_back("A4", subgroup_as_group(s4, alternating_subgroup(s4)));
  return out;
}

}  // namespace

TEST_CASE("reflector congruence identities") {
  auto u = utumi_z8();
  CHECK(is_reflector_congruence(u, EquivalenceRelation::identity(8)));
  CHECK(is_reflector_congruence(u, EquivalenceRelation::total(8)));
  auto merged = EquivalenceRelation::from_classes(8, {{0, 1}, {2}, {3}, {4}, {5}, {6}, {7}});
  CHECK_FALSE(is_reflector_congruence(u, merged));
  // the class of 0 would have to contain 0.1 = {1,4,7}
  CHECK(u.product(0, 1) == ElementSet{1, 4, 7});
  CHECK_THROWS_AS(ReflectorCongruence::certify(u, merged), InvalidInput);
}

TEST_CASE("iterated class sums in Z/8") {
  auto z8 = cyclic_group(8).as_multistructure();
  const ElementSet a{1, 4, 7}, b{2, 3, 5, 6};
  auto a2 = product_of_sets(z8, a, a);
  auto a3 = product_of_sets(z8, a2, a);
  CHECK(a2 == ElementSet{0, 2, 3, 5, 6});
  // every element of A is 1 mod 3, so no three of them sum to 0 or 24
  CHECK(a3 == z8.carrier() - ElementSet{0});
  CHECK((a | a2 | a3) == z8.carrier());
  CHECK(product_of_sets(z8, b, b) == z8.carrier());
}

TEST_CASE("quotients by congruences") {
  auto z4 = group_hg(cyclic_group(4));
  auto id = ReflectorCongruence::certify(z4, EquivalenceRelation::identity(4));
  CHECK(quotient_by(z4, id).structure().same_table(z4));
  auto tot = ReflectorCongruence::certify(z4, EquivalenceRelation::total(4));
  CHECK(quotient_by(z4, tot).size() == 1);
  auto half = ReflectorCongruence::certify(z4, EquivalenceRelation::from_classes(4, {{0, 2}, {1, 3}}));
  auto q = quotient_by(z4, half);
  CHECK(q.structure().same_table(cyclic_group(2).as_multistructure()));
  CHECK(q.structure().names() == std::vector<std::string>{"0", "1"});
}

TEST_CASE("congruence enumeration against every partition") {
  CHECK(reflector_congruences(trivial_hypergroup()).size() == 1);
  CHECK(reflector_congruences(group_hg(cyclic_group(8))).size() == 4);
  CHECK(reflector_congruences(stabilizer_hypergroup(4)).size() == 2);

  for (const auto& [name, h] : corpus::small()) {
    CAPTURE(name);
    auto t = oracle::table_of(h);
    std::set<std::vector<int>> expect;
    for (const auto& lab : oracle::all_partitions(static_cast<int>(h.size())))
      if (oracle::reflector_partition(t, lab)) expect.insert(lab);
    std::set<std::vector<int>> got;
    auto search = search_reflector_congruences(h, {}, {true, false, 0});
    for (const auto& eq : search.congruences) got.insert(std::vector<int>(eq.labels().begin(), eq.labels().end()));
    CHECK(got == expect);
    CHECK(search.stats.partitions_covered == bell_number(h.size()));
    auto naive = search_reflector_congruences(h, {}, {false, false, 0});
    CHECK(naive.congruences == search.congruences);
    CHECK(naive.stats.leaves_checked == bell_number(h.size()));
    auto shortcut = search_reflector_congruences(h);
    CHECK(shortcut.congruences == search.congruences);
  }
  CHECK_THROWS_AS(reflector_congruences(stabilizer_hypergroup(13)), CapExceeded);

  // larger structures, with and without a scalar identity
  std::vector<Hypergroup> larger{stabilizer_hypergroup(7), group_hg(cyclic_group(8)),
                                 group_hg(dihedral_group(4)), utumi_z8()};
  auto s4 = symmetric_group(4);
  for (const auto& sub : subgroups(s4))
    if (sub.order() == 2 || sub.order() == 3) larger.push_back(right_coset_hypergroup(s4, sub));
  auto d12 = dihedral_group(6);
  for (const auto& sub : subgroups(d12)) larger.push_back(right_coset_hypergroup(d12, sub));
  for (const auto& h : larger) {
    auto a = search_reflector_congruences(h);
    auto b = search_reflector_congruences(h, {}, {true, false, 0});
    CHECK(a.congruences == b.congruences);
    CHECK(b.stats.partitions_covered == bell_number(h.size()));
  }
}

TEST_CASE("reflets") {
  auto r3 = reflets(stabilizer_hypergroup(3));
  REQUIRE(r3.size() == 2);
  CHECK(r3[0].size() == 1);
  CHECK(r3[1].structure().same_table(stabilizer_hypergroup(3)));

  auto r4 = reflets(group_hg(cyclic_group(4)));
  REQUIRE(r4.size() == 3);
  CHECK(are_isomorphic(r4[1], cyclic_group(2).as_multistructure()));
  CHECK(are_isomorphic(r4[2], cyclic_group(4).as_multistructure()));

  CHECK(reflets(trivial_hypergroup()).size() == 1);
}

TEST_CASE("simplicity verdicts") {
  CHECK(is_simple(utumi_z8()));
  auto v = decide_simplicity(utumi_z8(), {}, {true, false, 0});
  CHECK(v.simple);
  CHECK(v.congruences == 2);
  CHECK(v.stats.partitions_covered == 4140);
  CHECK_FALSE(is_simple(trivial_hypergroup()));
  CHECK_FALSE(is_simple(group_hg(cyclic_group(6))));
  CHECK(is_simple(group_hg(cyclic_group(7))));

  for (const auto& [name, g] : small_groups()) {
    CAPTURE(name);
    CHECK(is_simple(group_hg(g)) == oracle::simple_group(as_oracle(g)));
  }
}

TEST_CASE("invariant subgroups and the coset decider") {
  auto s3 = symmetric_group(3);
  auto stab = stabilizer_subgroup(s3, 0);
  auto ks = invariant_modulo_subgroups(s3, stab);
  REQUIRE(ks.size() == 2);
  CHECK(ks[0] == stab);
  CHECK(ks[1] == Subgroup::whole(s3));
  CHECK(invariant_modulo_subgroups(s3, Subgroup::whole(s3)).size() == 1);
  auto normals = invariant_modulo_subgroups(s3, Subgroup::trivial(s3));
  CHECK(normals.size() == 3);
  for (const auto& k : normals) CHECK(is_normal(s3, k));

  auto s4 = symmetric_group(4);
  CHECK(is_simple_coset(s4, stabilizer_subgroup(s4, 0)));
  auto z4 = cyclic_group(4);
  CHECK_FALSE(is_simple_coset(z4, Subgroup::trivial(z4)));
  CHECK(is_simple_coset(s3, alternating_subgroup(s3)));
  CHECK_FALSE(is_simple_coset(s3, Subgroup::whole(s3)));
}

TEST_CASE("coset decider, reflets and duality on the coset cases") {
  for (const auto& c : corpus::coset_cases()) {
    CAPTURE(c.name);
    if (c.g.order() / c.h.order() > 12) continue;
    auto right = right_coset_hypergroup(c.g, c.h);
    auto left = left_coset_hypergroup(c.g, c.h);
    const bool simple = is_simple(right);
    CHECK(is_simple_coset(c.g, c.h) == simple);
    CHECK(is_simple(left) == simple);

    auto found = reflets(right);
    std::vector<Hypergroup> expected;
    for (const auto& k : invariant_modulo_subgroups(c.g, c.h)) {
      auto gk = right_coset_hypergroup(c.g, k);
      bool dup = false;
      for (const auto& e : expected) dup |= are_isomorphic(e, gk);
      if (!dup) expected.push_back(gk);
    }
    REQUIRE(found.size() == expected.size());
    for (const auto& r : found) {
      int matches = 0;
      for (const auto& e : expected) matches += are_isomorphic(r, e);
      CHECK(matches == 1);
    }
    if (is_maximal(c.g, c.h) && !is_normal(c.g, c.h)) {
      CHECK(simple);
      CHECK_FALSE(is_group(right));
      CHECK_FALSE(is_group(left));
      CHECK_FALSE(are_isomorphic(right, left));
      CHECK(are_isomorphic(opposite(right.structure()), left));
    }
  }
}

TEST_CASE("Utumi criterion implies simplicity") {
  std::mt19937_64 rng(test_seed() + 30);
  int criterion_true = 0, instances = 0;
  for (int trial = 0; trial < 3000 && instances < 250; ++trial) {
    const std::size_t n = 2 + trial % 11;
    std::vector<std::size_t> labels(n, 0);
    const std::size_t blocks = 1 + rng() % (n - 1);
    for (std::size_t x = 1; x < n; ++x) labels[x] = 1 + rng() % blocks;
    UtumiInput in{cyclic_group(n).as_multistructure(), EquivalenceRelation::from_labels(labels), 0};
    if (!utumi_is_associative(in)) continue;
    ++instances;
    auto h = Hypergroup::certify(utumi(in));
    if (utumi_simplicity_criterion(in)) {
      ++criterion_true;
      CHECK(is_simple(h));
    }
  }
  CHECK(instances >= 200);
  CHECK(criterion_true > 0);
}
