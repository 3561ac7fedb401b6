#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "hyper/error.hpp"
#include "hyper/multistructure.hpp"

namespace hyper {

/// Membership mask over the elements of a group.
using GroupSet = boost::dynamic_bitset<>;

/// A verified finite group given by its Cayley table.
class GroupTable {
 public:
  /// Checks, in order: square shape and entry range, associativity,
  /// existence of an identity, existence of inverses. Throws
  /// GroupAxiomError describing the first failure.
  static GroupTable verify(const std::vector<std::vector<std::size_t>>& rows,
                           std::vector<std::string> names = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t a) const { return names_[a]; }

  /// One-line notation of each element when the group was built by
  /// symmetric_group or permutation_group; empty otherwise.
  const std::vector<std::vector<std::size_t>>& permutations() const noexcept {
    return permutations_;
  }

  std::vector<std::vector<std::size_t>> rows() const;

  /// The group as a singleton-valued Multistructure. Throws CapExceeded
  /// above ElementSet::capacity elements.
  Multistructure as_multistructure() const;

  /// Used by generators that know the elements are permutations.
  GroupTable with_permutations(std::vector<std::vector<std::size_t>> perms) &&;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> permutations_;
};

/// Reported by GroupTable::verify.
class GroupAxiomError : public InvalidInput {
 public:
  enum class Kind { Shape, Range, NotAssociative, NoIdentity, NoInverse };

  GroupAxiomError(Kind kind, std::vector<std::size_t> witness, const std::string& what)
      : InvalidInput(what), kind_(kind), witness_(std::move(witness)) {}

  Kind kind() const noexcept { return kind_; }
  /// NotAssociative: (a, b, c) with (ab)c != a(bc). NoInverse: (a).
  /// Range: (row, column). Empty otherwise.
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  Kind kind_;
  std::vector<std::size_t> witness_;
};

/// All permutations of {0..m-1} in lexicographic one-line order, composed
/// as (s t)(i) = s(t(i)). Element 0 is the identity. Throws CapExceeded
/// when m! > max_order.
GroupTable symmetric_group(std::size_t m, std::size_t max_order = Caps{}.group_order);
/// Z/mZ under addition.
GroupTable cyclic_group(std::size_t m);
/// Symmetries of a regular m-gon, order 2m: element 2k+f is r^k s^f.
GroupTable dihedral_group(std::size_t m);
/// The group formed by `elements`, permutations in one-line notation,
/// relabelled in lexicographic order. Throws InvalidInput if the set is
/// not closed under composition or is not a group.
GroupTable permutation_group(std::vector<std::vector<std::size_t>> elements);
/// Pairs (a, b) at index a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// A subgroup of some GroupTable, identified by its member mask.
class Subgroup {
 public:
  /// Throws InvalidInput unless `members` is a subgroup of `g`.
  static Subgroup from_members(const GroupTable& g, std::span<const std::size_t> members);
  /// Smallest subgroup containing `generators`.
  static Subgroup generated_by(const GroupTable& g, std::span<const std::size_t> generators);
  static Subgroup trivial(const GroupTable& g);
  static Subgroup whole(const GroupTable& g);

  const GroupSet& mask() const noexcept { return mask_; }
  /// Sorted members.
  const std::vector<std::size_t>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(std::size_t x) const { return mask_.test(x); }
  bool is_subset_of(const Subgroup& other) const { return mask_.is_subset_of(other.mask_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.mask_ == b.mask_; }
  /// By order, then lexicographically by sorted member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  explicit Subgroup(GroupSet mask);

  GroupSet mask_;
  std::vector<std::size_t> elements_;
};

/// Closure of a subset under the group product (finite, so a subgroup).
GroupSet closure(const GroupTable& g, GroupSet seed);

/// Permutations of a symmetric_group fixing `point`. Throws InvalidInput
/// when `g` carries no permutations or the point is out of range.
Subgroup stabilizer_subgroup(const GroupTable& g, std::size_t point);
/// Even permutations of a permutation group.
Subgroup alternating_subgroup(const GroupTable& g);

/// The subgroup `h` as a group of its own, elements in member order.
GroupTable subgroup_as_group(const GroupTable& g, const Subgroup& h);

/// Every subgroup of `g`, sorted by (order, member list). Built by
/// closing <S, x> for known subgroups S and x outside S. Throws
/// CapExceeded when g.order() > max_order.
std::vector<Subgroup> subgroups(const GroupTable& g,
                                std::size_t max_order = Caps{}.group_order);

bool is_normal(const GroupTable& g, const Subgroup& h);
/// No subgroup strictly between h and g: <h, x> = g for every x outside h.
bool is_maximal(const GroupTable& g, const Subgroup& h);

/// A x B = { a x b : a in A, b in B }
GroupSet double_coset(const GroupTable& g, const Subgroup& a, std::size_t x,
                      const Subgroup& b);

/// K x K = H x K = K x H for every x.
bool is_invariant_modulo(const GroupTable& g, const Subgroup& h, const Subgroup& k);
/// Equivalent form: H is inside K and K x is inside H x K for every x.
bool is_invariant_modulo_inclusion_form(const GroupTable& g, const Subgroup& h,
                                        const Subgroup& k);

enum class CosetSide { Right, Left };

/// Coset index of every element, cosets numbered by least member: x H
/// for CosetSide::Right, H x for CosetSide::Left.
std::vector<std::size_t> coset_labels(const GroupTable& g, const Subgroup& h,
                                      CosetSide side);

}  // namespace hyper
