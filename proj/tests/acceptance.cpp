// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "corpus.hpp"
#include "hyper/cli.hpp"
#include "hyper/constructions.hpp"
#include "hyper/io.hpp"
#include "hyper/morphism.hpp"
#include "hyper/simplicity.hpp"
#include "support.hpp"

using namespace hyper;

namespace {

std::uint64_t g_seed = 0;

}  // namespace

std::uint64_t test_seed() { return g_seed; }

namespace {

/// Collects failed checks of one criterion.
struct Check {
  std::vector<std::string> failures;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

oracle::Grp as_oracle(const GroupTable& g) {
  return {static_cast<int>(g.order()), [&g](int a, int b) { return static_cast<int>(g.multiply(a, b)); }};
}

std::string braces(ElementSet s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

/// Distinct members up to isomorphism.
std::vector<Multistructure> dedupe(const std::vector<Multistructure>& in) {
  std::vector<Multistructure> out;
  for (const auto& m : in) {
    bool seen = false;
    for (const auto& k : out) seen |= are_isomorphic(k, m);
    if (!seen) out.push_back(m);
  }
  return out;
}

void utumi_simplicity(Check& check) {
  int code = 0;
  auto start = std::chrono::steady_clock::now();
  auto text = run_cli({"gen", "utumi", "cyc:8", "{0}|{1,4,7}|{2,3,5,6}", "0"}, code);
  check(code == 0, "gen utumi exit code");
  auto u = parse_multistructure(text);
  check(verify_axioms(u).is_hypergroup(), "Utumi structure is a hypergroup");
  check(oracle::hypergroup(oracle::table_of(u)), "Utumi structure is a hypergroup (set oracle)");

  // feed the generated JSON back through the CLI
  auto path = (std::filesystem::temp_directory_path() / ("utumi-" + std::to_string(::getpid()) + ".json")).string();
  {
    std::ofstream(path) << text;
  }
  auto verdict = Json::parse(run_cli({"simple", "--method", "brute", path}, code));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::remove(path.c_str());
  check(code == 0 && verdict["simple"] == true, "simple --method brute returns true");
  check(verdict["partitions_covered"] == 4140, "all 4140 partitions of 8 elements covered");
  check(seconds < 5.0, "runtime under 5 s");
  check(oracle::simple(oracle::table_of(u)), "simple by the set oracle over every labelling");

  auto z8 = cyclic_group(8).as_multistructure();
  const ElementSet a{1, 4, 7}, b{2, 3, 5, 6};
  auto a3 = product_of_sets(z8, product_of_sets(z8, a, a), a);
  auto b2 = product_of_sets(z8, b, b);
  // 1,4,7 are 1 mod 3, so a sum of three lies in {3,6,...,21} and never hits 0 mod 8
  check(a3 == z8.carrier(), "A+A+A = H (computed: " + braces(a3) + ")");
  check((a | product_of_sets(z8, a, a) | a3) == z8.carrier(), "A u (A+A) u (A+A+A) = H");
  check(b2 == z8.carrier(), "B+B = H");
  oracle::Set sums;
  for (int x : {1, 4, 7})
    for (int y : {1, 4, 7})
      for (int z : {1, 4, 7}) sums.insert((x + y + z) % 8);
  check(sums == oracle::all(8), "A+A+A = H by modular arithmetic");
}

void stabilizer_family(Check& check) {
  for (std::size_t alpha = 3; alpha <= 8; ++alpha) {
    const std::string tag = "alpha=" + std::to_string(alpha) + ": ";
    auto s = stabilizer_hypergroup(alpha);
    if (alpha <= 5) {
      auto g = symmetric_group(alpha);
      auto gh = right_coset_hypergroup(g, stabilizer_subgroup(g, 0));
      check(gh.structure().same_table(s), tag + "equals Sym/Stab table");
    }
    const auto k = s.structure().carrier();
    for (std::size_t x = 0; x < alpha; ++x) {
      check(s.product(x, 0) == ElementSet{x}, tag + "x.e = x");
      for (std::size_t y = 1; y < alpha; ++y) check(s.product(x, y) == k - ElementSet{x}, tag + "x.y = K\\{x}");
      if (x == 0) continue;
      check(power(s, x, 2) == k - ElementSet{x}, tag + "x^2 = K\\{x}");
      check(power(s, x, 3) == k, tag + "x^3 = K");
    }
    check(is_simple(s), tag + "simple");
    check(!is_group(s), tag + "not a group");
    if (alpha <= 6) check(oracle::simple(oracle::table_of(s)), tag + "simple by the set oracle");
  }
}

void reflet_correspondence(Check& check) {
  std::vector<corpus::CosetCase> cases;
  auto s3 = symmetric_group(3);
  auto s4 = symmetric_group(4);
  cases.push_back({"Sym3/Stab", s3, stabilizer_subgroup(s3, 0)});
  cases.push_back({"Sym4/Stab", s4, stabilizer_subgroup(s4, 0)});
  cases.push_back({"Sym4/A4", s4, alternating_subgroup(s4)});
  auto z8 = cyclic_group(8);
  for (const auto& h : subgroups(z8)) cases.push_back({"Z8", z8, h});
  auto d8 = dihedral_group(4);
  for (const auto& h : subgroups(d8)) cases.push_back({"D8", d8, h});
  for (const auto& c : cases) {
    auto found = reflets(right_coset_hypergroup(c.g, c.h));
    std::vector<Multistructure> predicted;
    for (const auto& k : invariant_modulo_subgroups(c.g, c.h)) predicted.push_back(right_coset_hypergroup(c.g, k));
    predicted = dedupe(predicted);
    bool same = found.size() == predicted.size();
    for (const auto& r : found) {
      int hits = 0;
      for (const auto& p : predicted) hits += are_isomorphic(r, p);
      same &= hits == 1;
    }
    check(same, c.name + " |H|=" + std::to_string(c.h.order()) + ": reflets match G/K list");
  }
}

void opposite_left_right(Check& check) {
  for (const auto& c : corpus::coset_cases()) {
    auto right = right_coset_hypergroup(c.g, c.h);
    auto left = left_coset_hypergroup(c.g, c.h);
    check(are_isomorphic(opposite(right.structure()), left), c.name + ": (G/H)^op iso H\\G");
    check(are_isomorphic(right, left) == is_normal(c.g, c.h), c.name + ": G/H iso H\\G iff normal");
    if (right.size() <= 12) check(is_simple(right) == is_simple(left), c.name + ": simplicity agrees");
  }
}

void pairs(Check& check) {
  for (std::size_t m : {3, 4}) {
    auto g = symmetric_group(m);
    auto h = stabilizer_subgroup(g, 0);
    auto right = right_coset_hypergroup(g, h);
    auto left = left_coset_hypergroup(g, h);
    const std::string tag = "Sym" + std::to_string(m) + ": ";
    check(is_simple(right) && is_simple(left), tag + "both simple");
    check(!is_group(right) && !is_group(left), tag + "neither a group");
    check(!are_isomorphic(right, left), tag + "not isomorphic");
    check(!oracle::isomorphic(oracle::table_of(right), oracle::table_of(left)), tag + "not isomorphic (oracle)");
  }
}

void s_family_classes(Check& check) {
  std::function<void(std::size_t, std::vector<std::size_t>&)> each;
  std::size_t tuples = 0;
  each = [&](std::size_t budget, std::vector<std::size_t>& cur) {
    if (!cur.empty()) {
      ++tuples;
      SFamilySizes sizes(cur);
      auto t = oracle::table_of(s_family(sizes));
      SFamilyClass truth;
      if (!oracle::nonempty(t)) truth = SFamilyClass::EmptyProduct;
      else if (!oracle::associative(t)) truth = SFamilyClass::NotAssociative;
      else {
        // hypergroup: D-hypergroups have |x.y| independent of x
        bool equal = true;
        for (std::size_t y = 0; y < t.size(); ++y)
          for (std::size_t x = 0; x < t.size(); ++x) equal &= t[x][y].size() == t[0][y].size();
        truth = equal ? SFamilyClass::DHypergroup : SFamilyClass::HypergroupNotD;
      }
      std::string name = "(";
      for (auto p : cur) name += std::to_string(p) + ",";
      name.back() = ')';
      check(s_family_class(sizes) == truth, name + " classified " + to_string(s_family_class(sizes)) +
                                                ", axioms say " + to_string(truth));
    }
    if (cur.size() == 3) return;
    for (std::size_t p = 1; p <= budget; ++p) {
      cur.push_back(p);
      each(budget - p, cur);
      cur.pop_back();
    }
  };
  std::vector<std::size_t> cur;
  each(10, cur);
  // compositions of 1..10 into at most three parts
  check(tuples == 175, "all 175 tuples enumerated");

  for (auto t : std::vector<std::vector<std::size_t>>{{3}, {4}, {5}, {3, 3}, {2, 2}}) {
    auto [g, h] = s_family_group_realization(SFamilySizes(t));
    check(are_isomorphic(right_coset_hypergroup(g, h), s_family(SFamilySizes(t))),
          "realization isomorphic for size " + std::to_string(t.size()) + " tuple");
  }

  auto m12 = s_family(SFamilySizes({1, 2}));
  const std::size_t a = 1;
  check(product_of_sets(m12, ElementSet{a}, m12.product(a, a)) != product_of_sets(m12, m12.product(a, a), ElementSet{a}),
        "(1,2): a.(a.a) != (a.a).a");
  auto m23 = s_family(SFamilySizes({2, 3}));
  const std::size_t y = 1, a2 = 2;
  check(product_of_sets(m23, ElementSet{a2}, m23.product(y, y)) != product_of_sets(m23, m23.product(a2, y), ElementSet{y}),
        "(2,3): a.(y.y) != (a.y).y");
  auto m32 = s_family(SFamilySizes({3, 2}));
  const std::size_t a3 = 3, b3 = 4;
  check(product_of_sets(m32, ElementSet{a3}, m32.product(y, y)) == ElementSet{a3, b3}, "(3,2): a.(y.y) = A_k");
  check(m32.product(a3, y) == ElementSet{b3}, "(3,2): a.y = b");
  check(m32.product(b3, y) == ElementSet{a3}, "(3,2): (a.y).y = b.y = a");
  auto ce = s_family_counterexample(SFamilySizes({3, 2}));
  check(ce && ce->right_grouped == ElementSet{a3, b3} && ce->left_grouped == ElementSet{a3},
        "(3,2): reported witness");
}

void adequacy(Check& check) {
  std::mt19937_64 rng(g_seed + 7);
  int trames = 0, adequate = 0;
  auto compare = [&](const Presentation& p, const std::string& name) {
    auto a = check_adequacy(p);
    auto v = verify_axioms(quotient(p));
    check(a.reproductive == v.reproductive && a.associative == v.associative &&
              a.adequate() == v.is_hypergroup(),
          name + ": adequacy flags differ from the quotient axioms");
    adequate += a.adequate();
  };
  for (; trames < 1000; ++trames) {
    const std::size_t n = 1 + trames % 8;
    std::vector<Composition> comps;
    const unsigned density = 20 + static_cast<unsigned>(trames % 80);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (rng() % 100 < density) comps.push_back({u, v, static_cast<std::size_t>(rng() % n)});
    std::vector<std::size_t> labels(n);
    const std::size_t k = 1 + rng() % n;
    for (auto& l : labels) l = rng() % k;
    compare(Presentation(Trame(n, comps), EquivalenceRelation::from_labels(labels)),
            "random trame " + std::to_string(trames));
  }
  check(adequate > 0 && adequate < trames, "random trames include both outcomes");
  for (const auto& c : corpus::coset_cases()) {
    compare(coset_presentation(c.g, c.h, CosetSide::Right), c.name + " right");
    compare(coset_presentation(c.g, c.h, CosetSide::Left), c.name + " left");
    check(is_adequate(coset_presentation(c.g, c.h, CosetSide::Right)), c.name + ": coset presentation adequate");
  }
}

void canonical(Check& check) {
  for (const auto& [name, h] : corpus::small()) {
    auto q = quotient(canonical_presentation(h));
    check(are_isomorphic(q, h), name + ": quotient of the canonical presentation");
    check(oracle::isomorphic(oracle::table_of(q), oracle::table_of(h)), name + ": same, by the permutation oracle");
  }
}

void presentation_corollary(Check& check) {
  for (std::size_t m : {3, 4}) {
    auto g = symmetric_group(m);
    auto p = coset_presentation(g, stabilizer_subgroup(g, 0), CosetSide::Right);
    check(presentation_simplicity(p).simple, "Sym" + std::to_string(m) + "/Stab presentation simple");
  }
  std::vector<std::pair<std::string, Presentation>> ps;
  for (const auto& c : corpus::coset_cases()) {
    ps.emplace_back(c.name + " right", coset_presentation(c.g, c.h, CosetSide::Right));
    ps.emplace_back(c.name + " left", coset_presentation(c.g, c.h, CosetSide::Left));
  }
  for (const auto& [name, h] : corpus::small())
    if (h.size() <= 3) ps.emplace_back(name + " canonical", canonical_presentation(h));
  for (std::size_t n : {2, 3, 4, 5, 6}) {
    auto g = cyclic_group(n);
    ps.emplace_back("Z" + std::to_string(n) + " identity", Presentation(group_trame(g), EquivalenceRelation::identity(n)));
  }
  int compared = 0;
  for (const auto& [name, p] : ps) {
    if (!is_adequate(p)) continue;
    auto q = Hypergroup::certify(quotient(p));
    if (q.size() < 2 || q.size() > 12) continue;
    ++compared;
    check(presentation_simplicity(p).simple == is_simple(q), name + ": trame verdict agrees with is_simple");
  }
  check(compared > 20, "enough presentations compared");
}

void group_compatibility(Check& check) {
  std::vector<std::pair<std::string, GroupTable>> groups;
  for (std::size_t n = 1; n <= 12; ++n) groups.emplace_back("Z" + std::to_string(n), cyclic_group(n));
  groups.emplace_back("Klein", corpus::klein());
  groups.emplace_back("Sym3", symmetric_group(3));
  for (std::size_t m : {4, 5, 6}) groups.emplace_back("D" + std::to_string(2 * m), dihedral_group(m));
  groups.emplace_back("Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4)));
  groups.emplace_back("Z2^3", direct_product(corpus::klein(), cyclic_group(2)));
  groups.emplace_back("Z3xZ3", direct_product(cyclic_group(3), cyclic_group(3)));
  groups.emplace_back("Z2xZ6", direct_product(cyclic_group(2), cyclic_group(6)));
  auto s4 = symmetric_group(4);
  groups.emplace_back("A4", subgroup_as_group(s4, alternating_subgroup(s4)));
  for (const auto& [name, g] : groups) {
    const bool simple = is_simple(Hypergroup::certify(g.as_multistructure()));
    const bool classical = oracle::simple_group(as_oracle(g));
    const std::size_t n = g.order();
    const bool prime = n == 2 || n == 3 || n == 5 || n == 7 || n == 11;
    check(simple == classical, name + ": agrees with normal subgroups");
    check(simple == prime, name + ": simple exactly for prime order");
  }
}

void utumi_criterion(Check& check) {
  std::mt19937_64 rng(g_seed + 11);
  int instances = 0, criterion = 0;
  for (int trial = 0; instances < 300 && trial < 10000; ++trial) {
    const std::size_t n = 2 + trial % 11;
    std::vector<std::size_t> labels(n, 0);
    const std::size_t blocks = 1 + rng() % (n - 1);
    for (std::size_t x = 1; x < n; ++x) labels[x] = 1 + rng() % blocks;
    UtumiInput in{cyclic_group(n).as_multistructure(), EquivalenceRelation::from_labels(labels), 0};
    if (!utumi_is_associative(in)) continue;
    ++instances;
    if (utumi_simplicity_criterion(in)) {
      ++criterion;
      check(is_simple(Hypergroup::certify(utumi(in))), "criterion true but not simple, n=" + std::to_string(n));
    }
  }
  check(instances >= 200, "at least 200 instances");
  check(criterion > 0, "criterion fired at least once");
  UtumiInput z2{cyclic_group(2).as_multistructure(), EquivalenceRelation::identity(2), 0};
  check(!utumi_simplicity_criterion(z2), "Z/2: criterion false");
  check(is_simple(Hypergroup::certify(utumi(z2))), "Z/2: simple");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strncmp(argv[i], "--seed=", 7) == 0) g_seed = std::stoull(argv[i] + 7);
    if (std::strncmp(argv[i], "--only=", 7) == 0) only = std::stoi(argv[i] + 7);
  }

  struct Criterion {
    const char* title;
    void (*run)(Check&);
  };
  const Criterion criteria[] = {
      {"Utumi cogroup on Z/8 is a simple hypergroup", utumi_simplicity},
      {"stabilizer hypergroups, alpha 3..8", stabilizer_family},
      {"reflets of G/H are the G/K with K invariant modulo H", reflet_correspondence},
      {"opposite and left/right coset hypergroups", opposite_left_right},
      {"simple coset hypergroups come in non-isomorphic pairs", pairs},
      {"S-family classification and counterexamples", s_family_classes},
      {"adequacy conditions match the quotient axioms", adequacy},
      {"canonical presentations reproduce their hypergroup", canonical},
      {"simplicity decided on presentations", presentation_corollary},
      {"hypergroup simplicity of groups is group simplicity", group_compatibility},
      {"Utumi iterated-sum criterion is sufficient, not necessary", utumi_criterion},
  };
  int failed = 0;
  int number = 0;
  for (const auto& c : criteria) {
    ++number;
    if (only != 0 && only != number) continue;
    Check check;
    try {
      c.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", number, c.title);
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i)
      std::printf("    %s\n", check.failures[i].c_str());
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
