#include "hyper/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hyper {

Hypergroup coset_hypergroup(const GroupTable& g, const Subgroup& h, CosetSide side) {
  auto label = coset_labels(g, h, side);
  const std::size_t k = g.order() / h.order();
  if (k > ElementSet::capacity)
    throw CapExceeded(std::to_string(k) + " cosets exceed the subset width " +
                      std::to_string(ElementSet::capacity));
  std::vector<std::size_t> rep(k);
  for (std::size_t x = g.order(); x-- > 0;) rep[label[x]] = x;

  std::vector<std::string> names;
  std::vector<ElementSet> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(side == CosetSide::Right ? g.name(rep[a]) + "H" : "H" + g.name(rep[a]));
    for (std::size_t b = 0; b < k; ++b) {
      ElementSet prod;
      for (auto m : h.elements()) prod.insert(label[g.multiply(g.multiply(rep[a], m), rep[b])]);
      table[a * k + b] = prod;
    }
  }
  return Hypergroup::certify(Multistructure(std::move(names), std::move(table)));
}

Hypergroup right_coset_hypergroup(const GroupTable& g, const Subgroup& h) {
  return coset_hypergroup(g, h, CosetSide::Right);
}

Hypergroup left_coset_hypergroup(const GroupTable& g, const Subgroup& h) {
  return coset_hypergroup(g, h, CosetSide::Left);
}

Trame group_trame(const GroupTable& g) {
  std::vector<Composition> comps;
  comps.reserve(g.order() * g.order());
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) comps.push_back({a, b, g.multiply(a, b)});
  return Trame(g.order(), std::move(comps), g.names());
}

Presentation coset_presentation(const GroupTable& g, const Subgroup& h, CosetSide side) {
  auto labels = coset_labels(g, h, side);
  auto r = EquivalenceRelation::from_labels(labels);
  std::vector<std::string> names;
  for (auto rep : r.representatives())
    names.push_back(side == CosetSide::Right ? g.name(rep) + "H" : "H" + g.name(rep));
  return Presentation(group_trame(g), std::move(r), std::move(names));
}

Hypergroup stabilizer_hypergroup(std::size_t alpha) {
  if (alpha == 0) throw InvalidInput("alpha must be at least 1");
  if (alpha > ElementSet::capacity)
    throw CapExceeded("alpha exceeds the subset width " + std::to_string(ElementSet::capacity));
  std::vector<std::string> names{"e"};
  for (std::size_t x = 1; x < alpha; ++x) names.push_back("x" + std::to_string(x));
  const auto all = ElementSet::full(alpha);
  std::vector<ElementSet> table(alpha * alpha);
  for (std::size_t x = 0; x < alpha; ++x)
    for (std::size_t y = 0; y < alpha; ++y)
      table[x * alpha + y] = y == 0 ? ElementSet::singleton(x) : all - ElementSet::singleton(x);
  return Hypergroup::certify(Multistructure(std::move(names), std::move(table)));
}

SFamilySizes::SFamilySizes(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw InvalidInput("the S-family needs at least one block");
  for (auto p : sizes_)
    if (p == 0) throw InvalidInput("S-family blocks must be nonempty");
  if (carrier_size() > ElementSet::capacity)
    throw CapExceeded("S-family carrier exceeds the subset width " +
                      std::to_string(ElementSet::capacity));
}

std::size_t SFamilySizes::carrier_size() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

std::size_t SFamilySizes::block_start(std::size_t i) const {
  return std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(i),
                         std::size_t{0});
}

Multistructure s_family(const SFamilySizes& sizes) {
  const std::size_t n = sizes.carrier_size();
  std::vector<std::size_t> block_of(n);
  std::vector<ElementSet> block(sizes.blocks());
  std::vector<std::string> names;
  for (std::size_t i = 0, x = 0; i < sizes.blocks(); ++i)
    for (std::size_t j = 0; j < sizes.sizes()[i]; ++j, ++x) {
      block_of[x] = i;
      block[i].insert(x);
      if (x == 0) names.push_back("e");
      else names.push_back("A" + std::to_string(i) + "_" + std::to_string(j));
    }
  const auto all = ElementSet::full(n);
  std::vector<ElementSet> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto own = block[block_of[x]];
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet v;
      if (y == 0) v = ElementSet::singleton(x);
      else if (block_of[y] == 0) v = own - ElementSet::singleton(x);
      else v = all - own;
      table[x * n + y] = v;
    }
  }
  return Multistructure(std::move(names), std::move(table));
}

const char* to_string(SFamilyClass c) {
  switch (c) {
    case SFamilyClass::DHypergroup: return "DHypergroup";
    case SFamilyClass::HypergroupNotD: return "HypergroupNotD";
    case SFamilyClass::EmptyProduct: return "EmptyProduct";
    case SFamilyClass::NotAssociative: return "NotAssociative";
  }
  return "?";
}

SFamilyClass s_family_class(const SFamilySizes& sizes) {
  const auto& s = sizes.sizes();
  const std::size_t n = s[0];
  auto others = std::span(s).subspan(1);
  auto all_of = [&](auto pred) { return std::all_of(others.begin(), others.end(), pred); };
  auto any_of = [&](auto pred) { return std::any_of(others.begin(), others.end(), pred); };
  if (all_of([&](auto p) { return p == n; })) return SFamilyClass::DHypergroup;
  if (n >= 3 && all_of([](auto p) { return p >= 3; }) && any_of([&](auto p) { return p != n; }))
    return SFamilyClass::HypergroupNotD;
  if (n >= 2 && any_of([](auto p) { return p == 1; })) return SFamilyClass::EmptyProduct;
  return SFamilyClass::NotAssociative;
}

std::optional<SFamilyCounterexample> s_family_counterexample(const SFamilySizes& sizes) {
  if (s_family_class(sizes) != SFamilyClass::NotAssociative) return std::nullopt;
  const auto& s = sizes.sizes();
  const std::size_t n = s[0];
  auto first_block = [&](auto pred) {
    for (std::size_t k = 1; k < s.size(); ++k)
      if (pred(s[k])) return k;
    return std::size_t{0};
  };
  SFamilyCounterexample out;
  std::size_t k = 0;
  if (n == 1) {
    out.verification_case = 1;
    k = first_block([](auto p) { return p >= 2; });
    auto a = sizes.block_start(k);
    out.triple = {a, a, a};
  } else if (n == 2) {
    out.verification_case = 2;
    k = first_block([](auto p) { return p >= 3; });
    out.triple = {sizes.block_start(k), 1, 1};
  } else {
    out.verification_case = 3;
    k = first_block([](auto p) { return p == 2; });
    out.triple = {sizes.block_start(k), 1, 1};
  }
  auto m = s_family(sizes);
  auto [x, y, z] = out.triple;
  out.left_grouped = product_of_sets(m, m.product(x, y), ElementSet::singleton(z));
  out.right_grouped = product_of_sets(m, ElementSet::singleton(x), m.product(y, z));
  return out;
}

std::pair<GroupTable, Subgroup> s_family_group_realization(const SFamilySizes& sizes,
                                                           std::size_t max_order) {
  const auto& s = sizes.sizes();
  const std::size_t n = s[0];
  const std::size_t k = s.size();
  if (!std::all_of(s.begin(), s.end(), [&](auto p) { return p == n; }))
    throw InvalidInput("group realization needs equal block sizes");
  // (n!)^k k!, checked against the cap as it grows.
  std::size_t order = 1;
  auto grow = [&](std::size_t factor) {
    if (order > max_order / factor)
      throw CapExceeded("block permutation group exceeds the group order cap " +
                        std::to_string(max_order));
    order *= factor;
  };
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t i = 2; i <= n; ++i) grow(i);
  for (std::size_t i = 2; i <= k; ++i) grow(i);

  std::vector<std::size_t> block_perm(k), inner(n);
  std::iota(block_perm.begin(), block_perm.end(), std::size_t{0});
  std::iota(inner.begin(), inner.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> all_inner;
  do all_inner.push_back(inner);
  while (std::next_permutation(inner.begin(), inner.end()));

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> choice(k, 0);
  do {
    // Odometer over one inner bijection per block.
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::vector<std::size_t> p(n * k);
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t j = 0; j < n; ++j) p[b * n + j] = block_perm[b] * n + all_inner[choice[b]][j];
      perms.push_back(std::move(p));
      std::size_t pos = 0;
      while (pos < k && ++choice[pos] == all_inner.size()) choice[pos++] = 0;
      if (pos == k) break;
    }
  } while (std::next_permutation(block_perm.begin(), block_perm.end()));

  auto g = permutation_group(std::move(perms));
  auto h = stabilizer_subgroup(g, 0);
  return {std::move(g), std::move(h)};
}

void validate(const UtumiInput& input) {
  const auto& base = input.base;
  const auto& part = input.partition;
  const std::size_t n = base.size();
  if (part.size() != n) throw InvalidInput("partition does not cover the base carrier");
  if (input.zero >= n) throw InvalidInput("zero is outside the carrier");
  const auto zero = input.zero;
  if (part.class_members(part.class_of(zero)) != ElementSet::singleton(zero))
    throw InvalidInput("the class of zero is not {zero}");
  for (std::size_t x = 0; x < n; ++x) {
    if (base.product(x, zero) != ElementSet::singleton(x))
      throw InvalidInput("x + 0 != {x} for x = " + base.name(x));
    auto zx = base.product(zero, x);
    if (!zx.contains(x)) throw InvalidInput("x is not in 0 + x for x = " + base.name(x));
    if (!zx.is_subset_of(part.members_of_class_containing(x)))
      throw InvalidInput("0 + x leaves the class of x for x = " + base.name(x));
  }
}

Multistructure utumi(const UtumiInput& input) {
  validate(input);
  const auto& base = input.base;
  const std::size_t n = base.size();
  std::vector<ElementSet> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      table[x * n + y] = product_of_sets(base, ElementSet::singleton(x),
                                         input.partition.members_of_class_containing(y));
  return Multistructure(base.names(), std::move(table));
}

UtumiAssociativity utumi_associativity(const UtumiInput& input) {
  validate(input);
  const auto& base = input.base;
  const auto& part = input.partition;
  UtumiAssociativity out;
  for (std::size_t x = 0; x < base.size(); ++x)
    for (std::size_t y = 0; y < base.size(); ++y) {
      auto cy = part.members_of_class_containing(y);
      auto lhs = product_of_sets(base, part.members_of_class_containing(x), cy);
      auto rhs = part.saturate(product_of_sets(base, ElementSet::singleton(x), cy));
      if (lhs != rhs) {
        out.associative = false;
        out.witness = std::pair{x, y};
        return out;
      }
    }
  return out;
}

bool utumi_simplicity_criterion(const UtumiInput& input) {
  if (!is_group(input.base) || !verify_axioms(input.base).is_hypergroup())
    throw InvalidInput("the simplicity criterion needs a group base");
  if (!utumi_is_associative(input))
    throw InvalidInput("the construction is not associative");
  const auto& base = input.base;
  const auto all = base.carrier();
  for (const auto& cls : input.partition.classes()) {
    if (cls.size() == 1 && cls.front() == input.zero) continue;
    ElementSet a;
    for (auto x : cls) a.insert(x);
    auto sum = a;
    bool reached = false;
    for (std::size_t terms = 1; terms <= base.size() && !reached; ++terms) {
      if (sum == all) reached = true;
      else sum = product_of_sets(base, sum, a);
    }
    if (!reached) return false;
  }
  return true;
}

EquivalenceRelation parse_partition(const std::string& text, std::size_t n) {
  std::vector<std::vector<std::size_t>> classes;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_space();
    if (i >= text.size() || text[i] != c)
      throw ParseError(0, std::string("expected '") + c + "' at offset " + std::to_string(i) +
                              " in partition \"" + text + "\"");
    ++i;
  };
  while (true) {
    expect('{');
    classes.emplace_back();
    skip_space();
    while (i < text.size() && text[i] != '}') {
      skip_space();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i)
        throw ParseError(0, "expected an element index at offset " + std::to_string(start) +
                                " in partition \"" + text + "\"");
      classes.back().push_back(std::stoul(text.substr(start, i - start)));
      skip_space();
      if (i < text.size() && text[i] == ',') ++i;
    }
    expect('}');
    skip_space();
    if (i == text.size()) break;
    expect('|');
  }
  return EquivalenceRelation::from_classes(n, classes);
}

Presentation canonical_presentation(const Multistructure& m, const Caps& caps) {
  const std::size_t n = m.size();
  const std::size_t cube = n * n * n;
  if (cube > caps.trame_size / n)
    throw CapExceeded("canonical presentation needs " + std::to_string(cube * n) +
                      " elements, above the trame cap " + std::to_string(caps.trame_size));
  const std::size_t size = cube * n;
  std::vector<std::string> names(size);
  std::vector<std::size_t> labels(size);
  for (std::size_t e = 0; e < size; ++e) {
    const std::size_t x = e / cube, t = e % cube;
    labels[e] = x;
    names[e] = m.name(x) + "@" + std::to_string(t / (n * n)) + "." +
               std::to_string((t / n) % n) + "." + std::to_string(t % n);
  }
  std::vector<Composition> comps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (auto c : m.product(a, b)) {
        const std::size_t t = (a * n + b) * n + c;
        comps.push_back({a * cube + t, b * cube + t, c * cube + t});
      }
  return Presentation(Trame(size, std::move(comps), std::move(names)),
                      EquivalenceRelation::from_labels(labels), m.names());
}

}  // namespace hyper
