#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyper/equivalence.hpp"
#include "hyper/error.hpp"
#include "hyper/multistructure.hpp"

namespace hyper {

/// One defined product u v = w of a trame.
struct Composition {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t result = 0;

  friend bool operator==(const Composition&, const Composition&) = default;
};

/// A finite set with a univalent product defined only on some pairs.
class Trame {
 public:
  /// Throws InvalidInput on an empty carrier, out-of-range indices, or two
  /// compositions of the same pair with different results. Exact
  /// duplicates are merged. Empty `names` default to "t0", "t1", ...
  Trame(std::size_t size, std::vector<Composition> compositions,
        std::vector<std::string> names = {});

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t t) const { return names_[t]; }

  /// Sorted by (left, right).
  const std::vector<Composition>& compositions() const noexcept { return compositions_; }
  std::optional<std::size_t> compose(std::size_t u, std::size_t v) const;
  bool composable(std::size_t u, std::size_t v) const { return compose(u, v).has_value(); }

  friend bool operator==(const Trame& a, const Trame& b) {
    return a.names_ == b.names_ && a.compositions_ == b.compositions_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Composition> compositions_;
};

/// A trame with an equivalence on its carrier.
struct Presentation {
  /// Throws InvalidInput when r is not a relation on the trame's carrier
  /// or `class_names` has the wrong length.
  Presentation(Trame t, EquivalenceRelation r, std::vector<std::string> class_names = {});

  Trame trame;
  EquivalenceRelation r;
  /// Optional display names for the classes of r.
  std::vector<std::string> class_names;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Quotient structure: class z belongs to x.y iff some composable (u, v)
/// with u in x, v in y has uv in z. Products may be empty. Classes are
/// the carrier in label order. Throws CapExceeded above
/// ElementSet::capacity classes.
Multistructure quotient(const Presentation& p);
Multistructure quotient(const Trame& t, const EquivalenceRelation& r);

/// First-order adequacy conditions evaluated on the trame itself.
struct AdequacyReport {
  /// Condition (1): x.T/R meets every class y, and T/R.y meets every x.
  bool reproductive = true;
  /// Condition (2): for all classes x, y, z, u, u is reached by composing
  /// x, y then z exactly when it is reached by composing y, z then x.
  bool associative = true;
  /// Class indices (x, y) for the first failure of (1).
  std::optional<std::pair<std::size_t, std::size_t>> reproductivity_witness;
  /// Class indices (x, y, z, u) for the first failure of (2).
  std::optional<std::array<std::size_t, 4>> associativity_witness;

  bool adequate() const noexcept { return reproductive && associative; }
};

AdequacyReport check_adequacy(const Presentation& p);
inline bool is_adequate(const Presentation& p) { return check_adequacy(p).adequate(); }

/// Outcome of the invariance test of s modulo r.
struct InvarianceReport {
  /// Every r-class lies in an s-class.
  bool contains = false;
  /// The pair condition on representatives: for every composable (u, v)
  /// in s(x) x s(y) and every (p, q) in s(x) x s(y) there is a composable
  /// (r', s') in r(p) x r(q) with r's' s-equivalent to uv.
  bool pair_condition = false;
  /// Elements (p, q) of the trame whose r-classes fail the pair condition.
  std::optional<std::pair<std::size_t, std::size_t>> witness;

  bool invariant() const noexcept { return contains && pair_condition; }
};

InvarianceReport check_invariance_modulo(const Trame& t, const EquivalenceRelation& r,
                                         const EquivalenceRelation& s);
inline bool is_invariant_modulo_equiv(const Trame& t, const EquivalenceRelation& r,
                                      const EquivalenceRelation& s) {
  return check_invariance_modulo(t, r, s).invariant();
}

/// r refines s, and the class map T/R -> T/S satisfies the reflector
/// identities, evaluated over the composable pairs. This is strictly
/// stronger than is_invariant_modulo_equiv.
bool is_reflective_modulo(const Trame& t, const EquivalenceRelation& r,
                          const EquivalenceRelation& s);

/// T/S together with the class map from T/R.
struct Reflection {
  Multistructure structure;
  /// r-class index -> s-class index.
  std::vector<std::size_t> projection;
};

/// The quotient by s, a reflet of quotient(p). Throws InvalidInput if p is
/// not adequate, s is not invariant modulo p.r, or the class map fails
/// the reflector check.
Reflection reflect(const Presentation& p, const EquivalenceRelation& s);

struct PresentationSimplicity {
  bool simple = false;
  /// Partitions of the r-classes that are reflective modulo r, including
  /// r itself and the total relation.
  std::size_t reflective_count = 0;
  /// Partitions that only satisfy is_invariant_modulo_equiv.
  std::size_t invariant_count = 0;
  std::uint64_t partitions = 0;
  /// First reflective partition other than r and the total one, as labels
  /// over r-classes.
  std::optional<EquivalenceRelation> witness;
};

/// Simplicity of quotient(p) decided on the trame: enumerates every
/// relation s containing p.r (as partitions of the r-classes) and counts
/// those reflective modulo p.r. Throws CapExceeded when p.r has more than
/// caps.simplicity_n classes and InvalidInput when p is not adequate or
/// the quotient is trivial.
PresentationSimplicity presentation_simplicity(const Presentation& p, const Caps& caps = {});

/// Lifts a partition of the r-classes to a relation on the trame.
EquivalenceRelation lift(const EquivalenceRelation& r, const EquivalenceRelation& over_classes);

}  // namespace hyper
