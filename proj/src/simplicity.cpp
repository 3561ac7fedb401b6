#include "hyper/simplicity.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

#include "hyper/morphism.hpp"

namespace hyper {

namespace {

/// Class masks for a complete or partial labelling of the first `count`
/// elements.
std::array<ElementSet, ElementSet::capacity> class_masks(std::span<const std::size_t> labels,
                                                         std::size_t count) {
  std::array<ElementSet, ElementSet::capacity> masks{};
  for (std::size_t x = 0; x < count; ++x) masks[labels[x]].insert(x);
  return masks;
}

bool identities_hold(const Multistructure& h, std::span<const std::size_t> labels) {
  const std::size_t n = h.size();
  auto masks = class_masks(labels, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet sat;
      for (auto z : h.product(x, y)) sat |= masks[labels[z]];
      ElementSet right_class, left_class;
      for (auto y2 : masks[labels[y]]) right_class |= h.product(x, y2);
      if (right_class != sat) return false;
      for (auto x2 : masks[labels[x]]) left_class |= h.product(x2, y);
      if (left_class != sat) return false;
    }
  return true;
}

/// Prefix test for the RGS search. Elements 0..i are decided. A violation
/// is certain when some decided z in x'.y (x' ~ x) has a class that misses
/// x.y while x.y has no undecided member that could still join it; the
/// same with the right factor varying.
class PrefixPruner {
 public:
  explicit PrefixPruner(const Multistructure& h) : h_(h) {}

  bool operator()(std::span<const std::size_t> labels, std::size_t i) const {
    const std::size_t n = h_.size();
    const auto decided = ElementSet::full(i + 1);
    const auto undecided = ElementSet::full(n) - decided;
    const auto masks = class_masks(labels, i + 1);

    // Is every decided member of `varied` inside sat(target)?
    auto covered = [&](ElementSet varied, ElementSet target) {
      if (target.intersects(undecided)) return true;
      for (auto z : varied & decided)
        if (!masks[labels[z]].intersects(target)) return false;
      return true;
    };

    const std::size_t a = i;
    for (auto b : masks[labels[a]]) {
      for (std::size_t y = 0; y <= i; ++y) {
        // Left factor varies within a's class.
        if (!covered(h_.product(b, y), h_.product(a, y))) return false;
        if (!covered(h_.product(a, y), h_.product(b, y))) return false;
        // Right factor varies within a's class.
        if (!covered(h_.product(y, b), h_.product(y, a))) return false;
        if (!covered(h_.product(y, a), h_.product(y, b))) return false;
      }
    }
    // a as the fixed factor, the other factor varying in a decided class.
    for (std::size_t x = 0; x < i; ++x)
      for (auto x2 : masks[labels[x]]) {
        if (x2 == x) continue;
        if (!covered(h_.product(x2, a), h_.product(x, a))) return false;
        if (!covered(h_.product(a, x2), h_.product(a, x))) return false;
      }
    return true;
  }

 private:
  const Multistructure& h_;
};

void require_cap(const Multistructure& h, const Caps& caps) {
  if (h.size() > caps.simplicity_n)
    throw CapExceeded("hypergroup of size " + std::to_string(h.size()) +
                      " exceeds the simplicity cap " + std::to_string(caps.simplicity_n));
}

/// An element e with x.e = {x} for every x (right) or e.x = {x} (left).
std::optional<std::pair<std::size_t, bool>> scalar_identity(const Multistructure& h) {
  for (bool right : {true, false})
    for (std::size_t e = 0; e < h.size(); ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < h.size() && ok; ++x)
        ok = (right ? h.product(x, e) : h.product(e, x)) == ElementSet{x};
      if (ok) return std::pair{e, right};
    }
  return std::nullopt;
}

/// With a right scalar identity e every congruence satisfies
/// [x] = sat(x.e) = x.[e], so it is fixed by the class of e; on the left,
/// [x] = [e].x. Candidates are the subsets E containing e whose images
/// x.E (or E.x) partition the carrier with E as the class of e.
std::vector<std::vector<std::size_t>> identity_candidates(const Multistructure& h, std::size_t e,
                                                          bool right,
                                                          PartitionSearchStats& stats) {
  const std::size_t n = h.size();
  std::vector<std::size_t> others;
  for (std::size_t x = 0; x < n; ++x)
    if (x != e) others.push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << others.size()); ++bits) {
    ElementSet cls_e{e};
    for (std::size_t j = 0; j < others.size(); ++j)
      if (bits >> j & 1u) cls_e.insert(others[j]);
    std::vector<std::size_t> labels(n);
    std::vector<ElementSet> classes;
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      auto cls = right ? product_of_sets(h, ElementSet{x}, cls_e) : product_of_sets(h, cls_e, ElementSet{x});
      ok = cls.contains(x) && (x != e || cls == cls_e);
      std::size_t k = 0;
      while (ok && k < classes.size() && classes[k] != cls) {
        ok = !classes[k].intersects(cls);
        ++k;
      }
      if (!ok) break;
      if (k == classes.size()) classes.push_back(cls);
      labels[x] = k;
    }
    if (!ok) continue;
    ++stats.leaves_checked;
    if (identities_hold(h, labels)) out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class Visit>
PartitionSearchStats run_search(const Multistructure& h, const CongruenceSearchOptions& options,
                                Visit&& visit) {
  PartitionSearchStats stats;
  if (options.use_scalar_identity) {
    if (auto id = scalar_identity(h)) {
      for (const auto& labels : identity_candidates(h, id->first, id->second, stats))
        if (!visit(std::span<const std::size_t>(labels))) break;
      stats.partitions_covered = bell_number(h.size());
      return stats;
    }
  }
  PrefixPruner pruner(h);
  auto prefix_ok = [&](std::span<const std::size_t> labels, std::size_t i) {
    return !options.prune || pruner(labels, i);
  };
  auto leaf = [&](std::span<const std::size_t> labels) {
    if (!identities_hold(h, labels)) return true;
    return visit(labels);
  };
  enumerate_partitions(h.size(), prefix_ok, leaf, &stats);
  return stats;
}

bool is_identity_labels(std::span<const std::size_t> labels) {
  return labels.back() + 1 == labels.size();
}

bool is_total_labels(std::span<const std::size_t> labels) {
  return std::all_of(labels.begin(), labels.end(), [](auto l) { return l == 0; });
}

}  // namespace

bool is_reflector_congruence(const Multistructure& h, const EquivalenceRelation& eq) {
  if (eq.size() != h.size())
    throw InvalidInput("equivalence size does not match the hypergroup");
  return identities_hold(h, eq.labels());
}

ReflectorCongruence ReflectorCongruence::certify(const Hypergroup& h, EquivalenceRelation eq) {
  if (!is_reflector_congruence(h, eq))
    throw InvalidInput("equivalence is not a reflector congruence");
  return ReflectorCongruence(std::move(eq));
}

Hypergroup quotient_by(const Hypergroup& h, const ReflectorCongruence& c) {
  const auto& eq = c.relation();
  const std::size_t k = eq.class_count();
  auto classes = eq.classes();
  std::vector<std::string> names;
  std::vector<ElementSet> table(k * k);
  for (std::size_t a = 0; a < k; ++a) {
    names.push_back(h.structure().name(classes[a].front()));
    for (std::size_t b = 0; b < k; ++b) {
      auto prod = product_of_sets(h, eq.class_members(a), eq.class_members(b));
      table[a * k + b] = eq.image(prod);
    }
  }
  return Hypergroup::certify(Multistructure(std::move(names), std::move(table)));
}

CongruenceSearch search_reflector_congruences(const Hypergroup& h, const Caps& caps,
                                              const CongruenceSearchOptions& options) {
  require_cap(h, caps);
  CongruenceSearch out;
  out.stats = run_search(h, options, [&](std::span<const std::size_t> labels) {
    out.congruences.push_back(EquivalenceRelation::from_labels(labels));
    return options.limit == 0 || out.congruences.size() < options.limit;
  });
  return out;
}

std::vector<ReflectorCongruence> reflector_congruences(const Hypergroup& h, const Caps& caps) {
  std::vector<ReflectorCongruence> out;
  for (auto& eq : search_reflector_congruences(h, caps).congruences)
    out.push_back(ReflectorCongruence::certify(h, std::move(eq)));
  return out;
}

std::vector<Hypergroup> reflets(const Hypergroup& h, const Caps& caps) {
  std::vector<Hypergroup> out;
  for (const auto& c : reflector_congruences(h, caps)) {
    auto q = quotient_by(h, c);
    bool seen = std::any_of(out.begin(), out.end(),
                            [&](const Hypergroup& k) { return are_isomorphic(k, q); });
    if (!seen) out.push_back(std::move(q));
  }
  auto key = [](const Hypergroup& k) {
    std::vector<std::uint64_t> bits;
    for (auto s : k.structure().table()) bits.push_back(s.bits());
    return std::pair{k.size(), bits};
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Hypergroup& a, const Hypergroup& b) { return key(a) < key(b); });
  return out;
}

SimplicityVerdict decide_simplicity(const Hypergroup& h, const Caps& caps,
                                    const CongruenceSearchOptions& options) {
  auto search = search_reflector_congruences(h, caps, options);
  SimplicityVerdict v;
  v.congruences = search.congruences.size();
  v.stats = search.stats;
  for (const auto& eq : search.congruences)
    if (!eq.is_identity() && !eq.is_total()) {
      v.witness = eq;
      break;
    }
  v.simple = h.size() > 1 && !v.witness;
  return v;
}

bool is_simple(const Hypergroup& h, const Caps& caps) {
  require_cap(h, caps);
  if (h.size() < 2) return false;
  bool extra = false;
  run_search(h, CongruenceSearchOptions{}, [&](std::span<const std::size_t> labels) {
    if (is_identity_labels(labels) || is_total_labels(labels)) return true;
    extra = true;
    return false;
  });
  return !extra;
}

std::vector<Subgroup> invariant_modulo_subgroups(const GroupTable& g, const Subgroup& h,
                                                 const Caps& caps) {
  std::vector<Subgroup> out;
  for (auto& k : subgroups(g, caps.group_order))
    if (h.is_subset_of(k) && is_invariant_modulo(g, h, k)) out.push_back(std::move(k));
  return out;
}

bool is_simple_coset(const GroupTable& g, const Subgroup& h, const Caps& caps) {
  if (h.order() == g.order()) return false;
  auto ks = invariant_modulo_subgroups(g, h, caps);
  return ks.size() == 2;
}

}  // namespace hyper
