#include "hyper/equivalence.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "hyper/error.hpp"

namespace hyper {

EquivalenceRelation::EquivalenceRelation(std::vector<std::size_t> canonical_labels)
    : labels_(std::move(canonical_labels)) {
  for (auto l : labels_) class_count_ = std::max(class_count_, l + 1);
  if (labels_.size() <= ElementSet::capacity) {
    masks_.assign(class_count_, ElementSet{});
    for (std::size_t x = 0; x < labels_.size(); ++x) masks_[labels_[x]].insert(x);
  }
}

EquivalenceRelation EquivalenceRelation::from_labels(
    std::span<const std::size_t> labels) {
  std::vector<std::size_t> canonical(labels.size());
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // (raw, canonical)
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], seen.size());
      canonical[x] = seen.size() - 1;
    } else {
      canonical[x] = it->second;
    }
  }
  return EquivalenceRelation(std::move(canonical));
}

EquivalenceRelation EquivalenceRelation::from_classes(
    std::size_t n, const std::vector<std::vector<std::size_t>>& classes) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> raw(n, unset);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (classes[k].empty()) throw InvalidInput("empty equivalence class");
    for (auto x : classes[k]) {
      if (x >= n)
        throw InvalidInput("class member " + std::to_string(x) +
                           " outside carrier of size " + std::to_string(n));
      if (raw[x] != unset)
        throw InvalidInput("element " + std::to_string(x) +
                           " appears in two classes");
      raw[x] = k;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (raw[x] == unset)
      throw InvalidInput("element " + std::to_string(x) + " is in no class");
  return from_labels(raw);
}

EquivalenceRelation EquivalenceRelation::identity(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t x = 0; x < n; ++x) labels[x] = x;
  return EquivalenceRelation(std::move(labels));
}

EquivalenceRelation EquivalenceRelation::total(std::size_t n) {
  return EquivalenceRelation(std::vector<std::size_t>(n, 0));
}

std::vector<std::vector<std::size_t>> EquivalenceRelation::classes() const {
  std::vector<std::vector<std::size_t>> out(class_count_);
  for (std::size_t x = 0; x < labels_.size(); ++x) out[labels_[x]].push_back(x);
  return out;
}

std::vector<std::size_t> EquivalenceRelation::representatives() const {
  std::vector<std::size_t> reps(class_count_);
  // First occurrence order makes the first member of class k appear
  // before the first member of class k+1.
  std::size_t next = 0;
  for (std::size_t x = 0; x < labels_.size() && next < class_count_; ++x)
    if (labels_[x] == next) reps[next++] = x;
  return reps;
}

bool EquivalenceRelation::refines(const EquivalenceRelation& coarser) const {
  if (coarser.size() != size()) return false;
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> target(class_count_, unset);
  for (std::size_t x = 0; x < labels_.size(); ++x) {
    auto& t = target[labels_[x]];
    if (t == unset) t = coarser.labels_[x];
    else if (t != coarser.labels_[x]) return false;
  }
  return true;
}

ElementSet EquivalenceRelation::class_members(std::size_t k) const {
  return masks_[k];
}

ElementSet EquivalenceRelation::saturate(ElementSet s) const {
  ElementSet out;
  for (auto x : s) out |= masks_[labels_[x]];
  return out;
}

ElementSet EquivalenceRelation::image(ElementSet s) const {
  ElementSet out;
  for (auto x : s) out.insert(labels_[x]);
  return out;
}

std::uint64_t rgs_completions(std::size_t remaining, std::size_t blocks) {
  // table[r][m] = completions of r positions with m blocks in use.
  std::vector<std::vector<std::uint64_t>> table(
      remaining + 1, std::vector<std::uint64_t>(blocks + remaining + 2, 0));
  constexpr auto top = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t m = 0; m < table[0].size(); ++m) table[0][m] = 1;
  for (std::size_t r = 1; r <= remaining; ++r) {
    for (std::size_t m = 0; m + 1 < table[r].size(); ++m) {
      auto a = table[r - 1][m];
      auto b = table[r - 1][m + 1];
      std::uint64_t v;
      if (m != 0 && a > top / m) v = top;
      else v = a * m;
      v = (v > top - b) ? top : v + b;
      table[r][m] = v;
    }
  }
  return table[remaining][blocks];
}

}  // namespace hyper
