#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyper/element_set.hpp"

namespace hyper {

/// A partition of {0, ..., n-1}, stored as one class index per element.
///
/// Labels are always canonical: class indices appear in order of first
/// occurrence, so `labels()` is a restricted-growth string and two
/// relations are equal exactly when their label vectors are.
class EquivalenceRelation {
 public:
  EquivalenceRelation() = default;

  /// Any labelling works; it is renumbered into first-occurrence order.
  static EquivalenceRelation from_labels(std::span<const std::size_t> labels);
  /// Throws InvalidInput unless `classes` partition {0, ..., n-1}.
  static EquivalenceRelation from_classes(
      std::size_t n, const std::vector<std::vector<std::size_t>>& classes);
  static EquivalenceRelation identity(std::size_t n);
  static EquivalenceRelation total(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }
  std::size_t class_of(std::size_t x) const { return labels_[x]; }
  std::span<const std::size_t> labels() const noexcept { return labels_; }
  bool equivalent(std::size_t x, std::size_t y) const {
    return labels_[x] == labels_[y];
  }

  /// Members of each class, each list ascending, classes in label order.
  std::vector<std::vector<std::size_t>> classes() const;
  /// Least member of each class.
  std::vector<std::size_t> representatives() const;

  bool is_identity() const noexcept { return class_count_ == size(); }
  bool is_total() const noexcept { return class_count_ <= 1; }

  /// True iff every class of `*this` lies inside a class of `coarser`.
  bool refines(const EquivalenceRelation& coarser) const;

  // Mask helpers; valid only when size() <= ElementSet::capacity.
  ElementSet class_members(std::size_t k) const;
  ElementSet members_of_class_containing(std::size_t x) const {
    return class_members(labels_[x]);
  }
  /// Union of all classes that meet `s`.
  ElementSet saturate(ElementSet s) const;
  /// Class indices of the members of `s`.
  ElementSet image(ElementSet s) const;

  friend bool operator==(const EquivalenceRelation& a,
                         const EquivalenceRelation& b) {
    return a.labels_ == b.labels_;
  }

 private:
  explicit EquivalenceRelation(std::vector<std::size_t> canonical_labels);

  std::vector<std::size_t> labels_;
  std::size_t class_count_ = 0;
  std::vector<ElementSet> masks_;
};

/// Number of ways to complete a restricted-growth prefix that already uses
/// `blocks` labels with `remaining` further positions. Saturates at
/// UINT64_MAX.
std::uint64_t rgs_completions(std::size_t remaining, std::size_t blocks);

/// Bell number B(n), saturating.
inline std::uint64_t bell_number(std::size_t n) { return rgs_completions(n, 0); }

/// Counters reported by the partition searches.
struct PartitionSearchStats {
  /// Complete partitions handed to the final check.
  std::uint64_t leaves_checked = 0;
  /// Partitions accounted for: checked leaves plus all completions of
  /// pruned prefixes. Equals Bell(n) when the search ran to the end.
  std::uint64_t partitions_covered = 0;
};

/// Depth-first enumeration of all partitions of {0, ..., n-1} in
/// restricted-growth-string order.
///
/// `prefix_ok(labels, i)` runs after position i receives its label and may
/// return false to discard every completion of labels[0..i]. `visit(labels)`
/// runs on each complete string and returns false to stop the search.
/// Returns false iff the search was stopped by `visit`.
template <class PrefixOk, class Visit>
bool enumerate_partitions(std::size_t n, PrefixOk&& prefix_ok, Visit&& visit,
                          PartitionSearchStats* stats = nullptr) {
  if (n == 0) return true;
  std::vector<std::size_t> labels(n, 0);
  auto add_covered = [&](std::uint64_t k) {
    if (stats == nullptr) return;
    auto& c = stats->partitions_covered;
    c = (c > UINT64_MAX - k) ? UINT64_MAX : c + k;
  };
  // Recursive lambda over position i with `blocks` labels in use.
  auto recurse = [&](auto&& self, std::size_t i, std::size_t blocks) -> bool {
    if (i == n) {
      if (stats != nullptr) ++stats->leaves_checked;
      add_covered(1);
      return visit(std::span<const std::size_t>(labels));
    }
    for (std::size_t label = 0; label <= blocks; ++label) {
      labels[i] = label;
      std::size_t used = label == blocks ? blocks + 1 : blocks;
      if (!prefix_ok(std::span<const std::size_t>(labels), i)) {
        add_covered(rgs_completions(n - i - 1, used));
        continue;
      }
      if (!self(self, i + 1, used)) return false;
    }
    return true;
  };
  labels[0] = 0;
  if (!prefix_ok(std::span<const std::size_t>(labels), 0)) {
    add_covered(rgs_completions(n - 1, 1));
    return true;
  }
  return recurse(recurse, 1, 1);
}

}  // namespace hyper
