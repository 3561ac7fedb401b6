#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>

namespace hyper {

/// A subset of a carrier {0, ..., 63}, stored as one machine word.
///
/// Every multivalued product in this library is an ElementSet, so the
/// carrier of a Multistructure is capped at `ElementSet::capacity`.
class ElementSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr ElementSet() noexcept = default;
  constexpr explicit ElementSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<std::size_t> members) noexcept {
    for (auto m : members) insert(m);
  }

  /// {0, ..., n-1}
  static constexpr ElementSet full(std::size_t n) noexcept {
    return ElementSet(n >= capacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet singleton(std::size_t x) noexcept {
    return ElementSet(std::uint64_t{1} << x);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t x) const noexcept {
    return (bits_ >> x) & 1u;
  }
  constexpr bool is_subset_of(ElementSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr std::size_t front() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(bits_));
  }

  constexpr void insert(std::size_t x) noexcept { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(std::size_t x) noexcept { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr ElementSet& operator|=(ElementSet o) noexcept { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) noexcept { bits_ &= o.bits_; return *this; }
  constexpr ElementSet& operator-=(ElementSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) noexcept { return a |= b; }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) noexcept { return a &= b; }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) noexcept { return a -= b; }
  friend constexpr bool operator==(ElementSet, ElementSet) noexcept = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr std::size_t operator*() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace hyper
