#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hyper/equivalence.hpp"
#include "hyper/error.hpp"
#include "hyper/group.hpp"
#include "hyper/multistructure.hpp"

namespace hyper {

/// True iff, for every pair, sat(x.y) = x.[y] = [x].y, where [y] is the
/// class of y and sat adds every class meeting the set. Exactly the
/// relations whose class projection is a reflector.
bool is_reflector_congruence(const Multistructure& h, const EquivalenceRelation& eq);

/// An equivalence certified by is_reflector_congruence.
class ReflectorCongruence {
 public:
  /// Throws InvalidInput when the identities fail.
  static ReflectorCongruence certify(const Hypergroup& h, EquivalenceRelation eq);

  const EquivalenceRelation& relation() const noexcept { return eq_; }

 private:
  explicit ReflectorCongruence(EquivalenceRelation eq) : eq_(std::move(eq)) {}
  EquivalenceRelation eq_;
};

/// Classes as elements; [x].[y] holds the classes meeting sat(x.y). Each
/// class is named after its least member.
Hypergroup quotient_by(const Hypergroup& h, const ReflectorCongruence& c);

struct CongruenceSearchOptions {
  /// Discard prefixes that already violate x'.y within sat(x.y) on the
  /// decided elements. Off means every partition reaches the final check.
  bool prune = true;
  /// When some e has x.e = {x} for all x (or e.x = {x}), search only the
  /// relations generated by a class of e. Off forces the partition search.
  bool use_scalar_identity = true;
  /// Stop after this many congruences (0 = no limit).
  std::size_t limit = 0;
};

struct CongruenceSearch {
  std::vector<EquivalenceRelation> congruences;
  PartitionSearchStats stats;
};

/// All reflector congruences of h in restricted-growth-string order.
/// Throws CapExceeded when h.size() > caps.simplicity_n.
CongruenceSearch search_reflector_congruences(const Hypergroup& h, const Caps& caps = {},
                                              const CongruenceSearchOptions& options = {});

std::vector<ReflectorCongruence> reflector_congruences(const Hypergroup& h,
                                                       const Caps& caps = {});

/// Quotients by all reflector congruences, one per isomorphism class,
/// sorted by size and then by the canonical JSON text of the table.
std::vector<Hypergroup> reflets(const Hypergroup& h, const Caps& caps = {});

struct SimplicityVerdict {
  bool simple = false;
  std::size_t congruences = 0;
  PartitionSearchStats stats;
  /// A reflector congruence other than identity and total, if any.
  std::optional<EquivalenceRelation> witness;
};

/// Full enumeration (no early stop), for reporting.
SimplicityVerdict decide_simplicity(const Hypergroup& h, const Caps& caps = {},
                                    const CongruenceSearchOptions& options = {});

/// Non-trivial, and the identity and total relations are the only
/// reflector congruences. A congruence with k classes yields a reflet of
/// k elements, so any third congruence gives a third reflet up to
/// isomorphism. Stops at the first extra congruence.
bool is_simple(const Hypergroup& h, const Caps& caps = {});

/// Every K with K x K = H x K = K x H for all x. Contains h and g.
std::vector<Subgroup> invariant_modulo_subgroups(const GroupTable& g, const Subgroup& h,
                                                 const Caps& caps = {});

/// Simplicity of the coset hypergroup G/H read off the subgroups
/// invariant modulo H: true iff H != G and those are exactly H and G.
bool is_simple_coset(const GroupTable& g, const Subgroup& h, const Caps& caps = {});

}  // namespace hyper
