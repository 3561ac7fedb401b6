#include "hyper/morphism.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "hyper/error.hpp"

namespace hyper {

Mapping::Mapping(const Multistructure& dom, const Multistructure& cod,
                 std::vector<std::size_t> image)
    : dom_(&dom), cod_(&cod), image_(std::move(image)) {
  if (image_.size() != dom.size())
    throw InvalidInput("mapping has " + std::to_string(image_.size()) +
                       " images for a domain of size " + std::to_string(dom.size()));
  for (auto y : image_)
    if (y >= cod.size()) throw InvalidInput("mapping image outside the codomain");
}

ElementSet Mapping::apply(ElementSet s) const {
  ElementSet out;
  for (auto x : s) out.insert(image_[x]);
  return out;
}

ElementSet Mapping::preimage(ElementSet s) const {
  ElementSet out;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (s.contains(image_[x])) out.insert(x);
  return out;
}

bool Mapping::is_surjective() const {
  return apply(dom_->carrier()) == cod_->carrier();
}

bool Mapping::is_injective() const {
  return apply(dom_->carrier()).size() == dom_->size();
}

bool is_morphism(const Mapping& f) {
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  for (std::size_t x = 0; x < dom.size(); ++x)
    for (std::size_t y = 0; y < dom.size(); ++y)
      if (f.apply(dom.product(x, y)) != cod.product(f(x), f(y))) return false;
  return true;
}

bool is_reflector(const Mapping& f) {
  if (!f.is_surjective()) return false;
  const auto& dom = f.domain();
  const auto& cod = f.codomain();
  const std::size_t n = dom.size();
  std::vector<ElementSet> fibre(n);
  for (std::size_t x = 0; x < n; ++x)
    fibre[x] = f.preimage(ElementSet::singleton(f(x)));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto a = f.saturate(dom.product(x, y));
      auto b = f.preimage(cod.product(f(x), f(y)));
      auto c = product_of_sets(dom, ElementSet::singleton(x), fibre[y]);
      auto d = product_of_sets(dom, fibre[x], ElementSet::singleton(y));
      if (a != b || b != c || c != d) return false;
    }
  return true;
}

namespace {

struct Invariant {
  std::vector<std::size_t> row_sizes;
  std::vector<std::size_t> column_sizes;
  std::size_t square_size = 0;
  bool idempotent_member = false;

  friend bool operator==(const Invariant&, const Invariant&) = default;
};

std::vector<Invariant> invariants(const Multistructure& m) {
  const std::size_t n = m.size();
  std::vector<Invariant> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto& inv = out[x];
    for (std::size_t y = 0; y < n; ++y) {
      inv.row_sizes.push_back(m.product(x, y).size());
      inv.column_sizes.push_back(m.product(y, x).size());
    }
    std::sort(inv.row_sizes.begin(), inv.row_sizes.end());
    std::sort(inv.column_sizes.begin(), inv.column_sizes.end());
    inv.square_size = m.product(x, x).size();
    inv.idempotent_member = m.product(x, x).contains(x);
  }
  return out;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Multistructure& a, const Multistructure& b)
      : a_(a), b_(b), n_(a.size()), image_(n_, 0) {
    auto ia = invariants(a);
    auto ib = invariants(b);
    candidates_.resize(n_);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (ia[x] == ib[y]) candidates_[x].push_back(y);
  }

  std::optional<std::vector<std::size_t>> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Elements 0..depth-1 of `a` are mapped. Checks every pair with at least
  // one member equal to `x` = depth-1 against the partial bijection.
  bool consistent(std::size_t x) const {
    const std::size_t mapped = x + 1;
    auto dom_mapped = ElementSet::full(mapped);
    for (std::size_t y = 0; y < mapped; ++y) {
      for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
        auto s = a_.product(p, q);
        auto t = b_.product(image_[p], image_[q]);
        if (s.size() != t.size()) return false;
        ElementSet known_image;
        for (auto z : s & dom_mapped) known_image.insert(image_[z]);
        if ((t & used_) != known_image) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    for (auto y : candidates_[depth]) {
      if (used_.contains(y)) continue;
      image_[depth] = y;
      used_.insert(y);
      if (consistent(depth) && extend(depth + 1)) return true;
      used_.erase(y);
    }
    return false;
  }

  const Multistructure& a_;
  const Multistructure& b_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> image_;
  ElementSet used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Multistructure& a,
                                                         const Multistructure& b) {
  if (a.size() != b.size()) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

}  // namespace hyper
