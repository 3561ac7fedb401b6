#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyper/equivalence.hpp"
#include "hyper/error.hpp"
#include "hyper/group.hpp"
#include "hyper/multistructure.hpp"
#include "hyper/presentation.hpp"

namespace hyper {

// ---------------------------------------------------------------------------
// Coset hypergroups

/// G/H: right cosets xH, ordered by least member, with
/// (xH).(yH) = { xhyH : h in H }. Coset xH is named after its least member
/// followed by "H".
Hypergroup right_coset_hypergroup(const GroupTable& g, const Subgroup& h);

/// H\G: left cosets Hx with (Hx).(Hy) = { Hxhy : h in H }. Named "H"
/// followed by the least member.
Hypergroup left_coset_hypergroup(const GroupTable& g, const Subgroup& h);

Hypergroup coset_hypergroup(const GroupTable& g, const Subgroup& h, CosetSide side);

/// Group trame of G (every pair composable) with the coset relation of h:
/// x ~ y iff x^-1 y in H (right) or y x^-1 in H (left). Its quotient is
/// the coset hypergroup on the same side.
Presentation coset_presentation(const GroupTable& g, const Subgroup& h, CosetSide side);

/// Every pair of group elements composable, with the group product.
Trame group_trame(const GroupTable& g);

/// The table x.e = x, x.y = K \ {x} for y != e on `alpha` elements, e
/// first.
Hypergroup stabilizer_hypergroup(std::size_t alpha);

// ---------------------------------------------------------------------------
// The S(n, (p_i)) family

/// Block sizes, A_0 first. Throws InvalidInput on an empty list or a zero.
class SFamilySizes {
 public:
  explicit SFamilySizes(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t carrier_size() const noexcept;
  std::size_t blocks() const noexcept { return sizes_.size(); }
  /// Index of the first element of block i.
  std::size_t block_start(std::size_t i) const;

 private:
  std::vector<std::size_t> sizes_;
};

/// Table on K = A_0 + A_1 + ...: x.e = x; a_i.y = A_i \ {a_i} for y in
/// A_0 \ {e}; a_i.a_j = K \ A_i for j != 0. Element order: e, the rest of
/// A_0, then A_1, A_2, ...
Multistructure s_family(const SFamilySizes& sizes);

enum class SFamilyClass { DHypergroup, HypergroupNotD, EmptyProduct, NotAssociative };

const char* to_string(SFamilyClass c);

/// Class 1 iff all p_i = n; class 2 iff n >= 3, all p_i >= 3 and some
/// p_k != n; class 3 iff n >= 2 and some p_k = 1; class 4 otherwise.
SFamilyClass s_family_class(const SFamilySizes& sizes);

/// The explicit identity that fails in a class-4 structure, and both of
/// its sides as computed on the table.
struct SFamilyCounterexample {
  /// 1: n = 1, some p_k >= 2, triple (a, a, a).
  /// 2: n = 2, some p_k >= 3, triple (a, y, y).
  /// 3: n >= 3, some p_k = 2, triple (a, y, y).
  int verification_case = 0;
  std::array<std::size_t, 3> triple{};
  ElementSet left_grouped;   // (x.y).z
  ElementSet right_grouped;  // x.(y.z)
};

/// nullopt unless s_family_class(sizes) is NotAssociative.
std::optional<SFamilyCounterexample> s_family_counterexample(const SFamilySizes& sizes);

/// For equal block sizes: G = permutations of K carrying every block onto
/// a block, H = stabilizer of e. G/H is isomorphic to s_family(sizes).
/// Throws InvalidInput for unequal sizes and CapExceeded when
/// |G| = (n!)^k k! exceeds max_order.
std::pair<GroupTable, Subgroup> s_family_group_realization(
    const SFamilySizes& sizes, std::size_t max_order = Caps{}.group_order);

// ---------------------------------------------------------------------------
// Constructions "a la Utumi": x.y = x + class(y)

struct UtumiInput {
  Multistructure base;
  EquivalenceRelation partition;
  std::size_t zero = 0;
};

/// Checks class(0) = {0}, x + 0 = {x}, and x in 0 + x within class(x).
/// Throws InvalidInput naming the failed clause.
void validate(const UtumiInput& input);

/// x.y = x + class(y). Always reproductive on a reproductive base.
Multistructure utumi(const UtumiInput& input);

struct UtumiAssociativity {
  bool associative = true;
  /// First (x, y) with class(x) + class(y) != sat(x + class(y)).
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// The class criterion class(x) + class(y) = sat(x + class(y)).
UtumiAssociativity utumi_associativity(const UtumiInput& input);
inline bool utumi_is_associative(const UtumiInput& input) {
  return utumi_associativity(input).associative;
}

/// Sufficient condition for simplicity over a group base: every class
/// other than {0} has some iterated sum A + ... + A (at most n terms)
/// equal to the carrier. Throws InvalidInput when the base is not a group
/// or the construction is not associative.
bool utumi_simplicity_criterion(const UtumiInput& input);

/// Parses "{0}|{1,4,7}|{2,3,5,6}" over a carrier of `n` elements.
EquivalenceRelation parse_partition(const std::string& text, std::size_t n);

// ---------------------------------------------------------------------------
// Canonical presentation

/// T = H x H^3. For each triple t = (x, y, z) with z in x.y the pair
/// ((x, t), (y, t)) is composable with product (z, t). Classes are
/// {x} x H^3, named after x; element (x, (a, b, c)) is named "x@a.b.c".
/// Works for any Multistructure. Throws
/// CapExceeded when n^4 > caps.trame_size.
Presentation canonical_presentation(const Multistructure& m, const Caps& caps = {});

}  // namespace hyper
