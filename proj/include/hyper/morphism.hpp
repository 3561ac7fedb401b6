#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyper/element_set.hpp"
#include "hyper/multistructure.hpp"

namespace hyper {

/// A map between the carriers of two structures. Holds references: both
/// structures must outlive the Mapping.
class Mapping {
 public:
  /// Throws InvalidInput when `image` has the wrong length or an entry is
  /// outside the codomain.
  Mapping(const Multistructure& dom, const Multistructure& cod,
          std::vector<std::size_t> image);

  const Multistructure& domain() const noexcept { return *dom_; }
  const Multistructure& codomain() const noexcept { return *cod_; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  std::size_t operator()(std::size_t x) const { return image_[x]; }

  /// f(S)
  ElementSet apply(ElementSet s) const;
  /// f^-1(S)
  ElementSet preimage(ElementSet s) const;
  /// f^-1 f(S): the fibre saturation of S.
  ElementSet saturate(ElementSet s) const { return preimage(apply(s)); }

  bool is_surjective() const;
  bool is_injective() const;

 private:
  const Multistructure* dom_;
  const Multistructure* cod_;
  std::vector<std::size_t> image_;
};

/// f(x.y) = f(x).f(y) for every pair.
bool is_morphism(const Mapping& f);

/// f is surjective and, for every pair,
///   f^-1 f(x.y) = f^-1(f(x).f(y)) = x.f^-1 f(y) = f^-1 f(x).y.
bool is_reflector(const Mapping& f);

/// An isomorphism a -> b as an image array, or nullopt.
///
/// Backtracks over candidates in index order, restricted to elements with
/// equal invariant vectors (sorted row and column product sizes, |x.x|,
/// whether x is in x.x). The first bijection found in that order is
/// returned, so the result is deterministic.
std::optional<std::vector<std::size_t>> find_isomorphism(const Multistructure& a,
                                                         const Multistructure& b);

inline bool are_isomorphic(const Multistructure& a, const Multistructure& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace hyper
