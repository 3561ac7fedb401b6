#include "hyper/presentation.hpp"

#include <algorithm>
#include <string>

#include "hyper/morphism.hpp"

namespace hyper {

namespace {

void require_mask_width(std::size_t classes) {
  if (classes > ElementSet::capacity)
    throw CapExceeded(std::to_string(classes) + " classes exceed the subset width " +
                      std::to_string(ElementSet::capacity));
}

/// Distinct class triples (class u, class v, class uv) over all
/// composable pairs, sorted.
std::vector<std::array<std::size_t, 3>> class_triples(const Trame& t,
                                                      const EquivalenceRelation& r) {
  std::vector<std::array<std::size_t, 3>> out;
  out.reserve(t.compositions().size());
  for (const auto& c : t.compositions())
    out.push_back({r.class_of(c.left), r.class_of(c.right), r.class_of(c.result)});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::string> class_display_names(const Trame& t, const EquivalenceRelation& r,
                                             const std::vector<std::string>& given) {
  if (!given.empty()) return given;
  std::vector<std::string> names;
  for (auto rep : r.representatives()) names.push_back(t.name(rep));
  return names;
}

}  // namespace

Trame::Trame(std::size_t size, std::vector<Composition> compositions,
             std::vector<std::string> names)
    : names_(std::move(names)), compositions_(std::move(compositions)) {
  if (size == 0) throw InvalidInput("a trame needs at least one element");
  if (names_.empty()) {
    for (std::size_t i = 0; i < size; ++i) names_.push_back("t" + std::to_string(i));
  } else if (names_.size() != size) {
    throw InvalidInput("trame has " + std::to_string(size) + " elements but " +
                       std::to_string(names_.size()) + " names");
  }
  for (const auto& c : compositions_)
    if (c.left >= size || c.right >= size || c.result >= size)
      throw InvalidInput("composition refers to an element outside the trame");
  std::sort(compositions_.begin(), compositions_.end(), [](const auto& a, const auto& b) {
    return std::pair{a.left, a.right} < std::pair{b.left, b.right};
  });
  for (std::size_t i = 1; i < compositions_.size(); ++i) {
    const auto& a = compositions_[i - 1];
    const auto& b = compositions_[i];
    if (a.left == b.left && a.right == b.right && a.result != b.result)
      throw InvalidInput("conflicting results for " + names_[a.left] + " " + names_[a.right]);
  }
  compositions_.erase(std::unique(compositions_.begin(), compositions_.end()),
                      compositions_.end());
}

std::optional<std::size_t> Trame::compose(std::size_t u, std::size_t v) const {
  auto it = std::lower_bound(compositions_.begin(), compositions_.end(), std::pair{u, v},
                             [](const Composition& c, const std::pair<std::size_t, std::size_t>& key) {
                               return std::pair{c.left, c.right} < key;
                             });
  if (it != compositions_.end() && it->left == u && it->right == v) return it->result;
  return std::nullopt;
}

Presentation::Presentation(Trame t, EquivalenceRelation rel, std::vector<std::string> names)
    : trame(std::move(t)), r(std::move(rel)), class_names(std::move(names)) {
  if (r.size() != trame.size())
    throw InvalidInput("equivalence on " + std::to_string(r.size()) +
                       " elements for a trame of " + std::to_string(trame.size()));
  if (!class_names.empty() && class_names.size() != r.class_count())
    throw InvalidInput("class name count does not match the class count");
}

Multistructure quotient(const Trame& t, const EquivalenceRelation& r) {
  return quotient(Presentation(t, r));
}

Multistructure quotient(const Presentation& p) {
  const std::size_t k = p.r.class_count();
  require_mask_width(k);
  std::vector<ElementSet> table(k * k);
  for (const auto& c : p.trame.compositions())
    table[p.r.class_of(c.left) * k + p.r.class_of(c.right)].insert(p.r.class_of(c.result));
  return Multistructure(class_display_names(p.trame, p.r, p.class_names), std::move(table));
}

AdequacyReport check_adequacy(const Presentation& p) {
  const auto& t = p.trame;
  const auto& r = p.r;
  const std::size_t k = r.class_count();
  require_mask_width(k);
  const auto& comps = t.compositions();
  auto cls = [&](std::size_t e) { return r.class_of(e); };

  AdequacyReport report;

  // (1) for every x, y: some r in x composes to land in y, and some s in y
  // is the right factor of a product landing in x.
  std::vector<ElementSet> lands_from(k), lands_into_via_right(k);
  for (const auto& c : comps) {
    lands_from[cls(c.left)].insert(cls(c.result));
    lands_into_via_right[cls(c.right)].insert(cls(c.result));
  }
  for (std::size_t x = 0; x < k && report.reproductive; ++x)
    for (std::size_t y = 0; y < k; ++y)
      if (!lands_from[x].contains(y) || !lands_into_via_right[y].contains(x)) {
        report.reproductive = false;
        report.reproductivity_witness = std::pair{x, y};
        break;
      }

  // (2) Walk pairs of compositions chained through a class: the first
  // product's result class equals the class of the second's left (resp.
  // right) factor.
  std::vector<std::vector<const Composition*>> by_left_class(k), by_right_class(k);
  for (const auto& c : comps) {
    by_left_class[cls(c.left)].push_back(&c);
    by_right_class[cls(c.right)].push_back(&c);
  }
  std::vector<ElementSet> left_first(k * k * k), right_first(k * k * k);
  auto at = [k](std::size_t x, std::size_t y, std::size_t z) { return (x * k + y) * k + z; };
  for (const auto& rs : comps) {
    for (const auto* next : by_left_class[cls(rs.result)])
      left_first[at(cls(rs.left), cls(rs.right), cls(next->right))].insert(cls(next->result));
  }
  for (const auto& st : comps) {
    for (const auto* next : by_right_class[cls(st.result)])
      right_first[at(cls(next->left), cls(st.left), cls(st.right))].insert(cls(next->result));
  }
  for (std::size_t i = 0; i < left_first.size(); ++i) {
    if (left_first[i] == right_first[i]) continue;
    report.associative = false;
    const std::size_t x = i / (k * k), y = (i / k) % k, z = i % k;
    auto diff = (left_first[i] - right_first[i]) | (right_first[i] - left_first[i]);
    report.associativity_witness = std::array{x, y, z, diff.front()};
    break;
  }
  return report;
}

namespace {

/// For a partition `pi` of the r-classes, evaluates both the pair
/// condition and the reflector identities over the class triples.
struct PartitionCheck {
  bool pair_condition = true;
  bool reflective = true;
  std::optional<std::pair<std::size_t, std::size_t>> pair_witness;  // r-classes
};

PartitionCheck check_partition(const std::vector<std::array<std::size_t, 3>>& triples,
                               std::size_t k, std::span<const std::size_t> pi,
                               std::size_t blocks) {
  require_mask_width(k);
  require_mask_width(blocks);
  PartitionCheck out;
  // a[P][Q]: r-classes of products; left[P][Y], right[X][Q] merged over
  // one side's block; s_img[P][Q], u[X][Y]: blocks reached.
  std::vector<ElementSet> a(k * k), left(k * blocks), right(blocks * k);
  std::vector<ElementSet> s_img(k * k), u(blocks * blocks);
  for (const auto& [p, q, w] : triples) {
    a[p * k + q].insert(w);
    left[p * blocks + pi[q]].insert(w);
    right[pi[p] * k + q].insert(w);
    s_img[p * k + q].insert(pi[w]);
    u[pi[p] * blocks + pi[q]].insert(pi[w]);
  }
  std::vector<ElementSet> block_members(blocks);
  for (std::size_t c = 0; c < k; ++c) block_members[pi[c]].insert(c);
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      if (out.pair_condition && s_img[p * k + q] != u[pi[p] * blocks + pi[q]]) {
        out.pair_condition = false;
        out.pair_witness = std::pair{p, q};
      }
      if (out.reflective) {
        ElementSet sat;
        for (auto w : a[p * k + q]) sat |= block_members[pi[w]];
        if (sat != left[p * blocks + pi[q]] || sat != right[pi[p] * k + q])
          out.reflective = false;
      }
    }
  return out;
}

/// s viewed as a partition of r-classes; nullopt when r does not refine s.
std::optional<std::vector<std::size_t>> induced_partition(const EquivalenceRelation& r,
                                                          const EquivalenceRelation& s) {
  if (!r.refines(s)) return std::nullopt;
  std::vector<std::size_t> pi(r.class_count());
  for (std::size_t e = 0; e < r.size(); ++e) pi[r.class_of(e)] = s.class_of(e);
  return pi;
}

}  // namespace

EquivalenceRelation lift(const EquivalenceRelation& r, const EquivalenceRelation& over_classes) {
  if (over_classes.size() != r.class_count())
    throw InvalidInput("partition size does not match the class count");
  std::vector<std::size_t> labels(r.size());
  for (std::size_t e = 0; e < r.size(); ++e) labels[e] = over_classes.class_of(r.class_of(e));
  return EquivalenceRelation::from_labels(labels);
}

InvarianceReport check_invariance_modulo(const Trame& t, const EquivalenceRelation& r,
                                         const EquivalenceRelation& s) {
  if (r.size() != t.size() || s.size() != t.size())
    throw InvalidInput("equivalence size does not match the trame");
  InvarianceReport report;
  auto pi = induced_partition(r, s);
  if (!pi) return report;
  report.contains = true;
  auto check = check_partition(class_triples(t, r), r.class_count(), *pi, s.class_count());
  report.pair_condition = check.pair_condition;
  if (check.pair_witness) {
    auto reps = r.representatives();
    report.witness = std::pair{reps[check.pair_witness->first], reps[check.pair_witness->second]};
  }
  return report;
}

bool is_reflective_modulo(const Trame& t, const EquivalenceRelation& r,
                          const EquivalenceRelation& s) {
  if (r.size() != t.size() || s.size() != t.size())
    throw InvalidInput("equivalence size does not match the trame");
  auto pi = induced_partition(r, s);
  if (!pi) return false;
  return check_partition(class_triples(t, r), r.class_count(), *pi, s.class_count()).reflective;
}

Reflection reflect(const Presentation& p, const EquivalenceRelation& s) {
  if (!is_adequate(p)) throw InvalidInput("presentation is not adequate");
  if (!is_invariant_modulo_equiv(p.trame, p.r, s))
    throw InvalidInput("equivalence is not invariant modulo the presentation's relation");
  auto pi = *induced_partition(p.r, s);
  std::vector<std::string> names;
  if (!p.class_names.empty()) {
    names.assign(s.class_count(), {});
    for (std::size_t c = p.r.class_count(); c-- > 0;) names[pi[c]] = p.class_names[c];
  }
  Reflection out{quotient(Presentation(p.trame, s, std::move(names))), pi};
  auto source = quotient(p);
  if (!is_reflector(Mapping(source, out.structure, out.projection)))
    throw InvalidInput("class map is not a reflector");
  return out;
}

PresentationSimplicity presentation_simplicity(const Presentation& p, const Caps& caps) {
  const std::size_t k = p.r.class_count();
  if (k > caps.simplicity_n)
    throw CapExceeded(std::to_string(k) + " classes exceed the simplicity cap " +
                      std::to_string(caps.simplicity_n));
  if (k < 2) throw InvalidInput("quotient is trivial");
  if (!is_adequate(p)) throw InvalidInput("presentation is not adequate");

  auto triples = class_triples(p.trame, p.r);
  PresentationSimplicity out;
  PartitionSearchStats stats;
  enumerate_partitions(
      k, [](auto, auto) { return true; },
      [&](std::span<const std::size_t> labels) {
        std::size_t blocks = 0;
        for (auto l : labels) blocks = std::max(blocks, l + 1);
        auto check = check_partition(triples, k, labels, blocks);
        if (check.pair_condition) ++out.invariant_count;
        if (check.reflective) {
          ++out.reflective_count;
          if (blocks != 1 && blocks != k && !out.witness)
            out.witness = EquivalenceRelation::from_labels(labels);
        }
        return true;
      },
      &stats);
  out.partitions = stats.partitions_covered;
  out.simple = out.reflective_count == 2;
  return out;
}

}  // namespace hyper
