#include "hyper/multistructure.hpp"

#include <string>

#include "hyper/error.hpp"

namespace hyper {

Multistructure::Multistructure(std::vector<std::string> names,
                               std::vector<ElementSet> table)
    : names_(std::move(names)), table_(std::move(table)) {
  std::size_t n = 0;
  while (n * n < table_.size()) ++n;
  if (n * n != table_.size())
    throw InvalidInput("table with " + std::to_string(table_.size()) +
                       " entries is not square");
  if (n == 0) throw InvalidInput("empty carrier");
  if (n > ElementSet::capacity)
    throw CapExceeded("carrier of size " + std::to_string(n) +
                      " exceeds the subset width " +
                      std::to_string(ElementSet::capacity));
  n_ = n;
  if (names_.empty()) {
    for (std::size_t x = 0; x < n; ++x) names_.push_back(std::to_string(x));
  } else if (names_.size() != n) {
    throw InvalidInput("expected " + std::to_string(n) + " names, got " +
                       std::to_string(names_.size()));
  }
  auto full = carrier();
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (!table_[i].is_subset_of(full))
      throw InvalidInput("product " + names_[i / n] + "." + names_[i % n] +
                         " names an element outside the carrier");
}

Multistructure::Multistructure(std::size_t n)
    : Multistructure({}, std::vector<ElementSet>(n * n)) {}

void Multistructure::set_product(std::size_t x, std::size_t y, ElementSet value) {
  if (!value.is_subset_of(carrier()))
    throw InvalidInput("product value outside the carrier");
  table_[x * n_ + y] = value;
}

std::optional<std::size_t> Multistructure::find(const std::string& name) const {
  for (std::size_t x = 0; x < n_; ++x)
    if (names_[x] == name) return x;
  return std::nullopt;
}

ElementSet product_of_sets(const Multistructure& m, ElementSet xs, ElementSet ys) {
  ElementSet out;
  for (auto x : xs)
    for (auto y : ys) out |= m.product(x, y);
  return out;
}

AxiomReport verify_axioms(const Multistructure& m) {
  AxiomReport r;
  const std::size_t n = m.size();
  const auto full = m.carrier();

  for (std::size_t x = 0; x < n && r.all_products_nonempty; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m.product(x, y).empty()) {
        r.all_products_nonempty = false;
        r.empty_product_witness = std::pair{x, y};
        break;
      }

  for (std::size_t x = 0; x < n; ++x) {
    ElementSet row, column;
    for (std::size_t y = 0; y < n; ++y) {
      row |= m.product(x, y);
      column |= m.product(y, x);
    }
    if (row != full || column != full) {
      r.reproductive = false;
      r.reproductivity_witness = x;
      break;
    }
  }

  for (std::size_t x = 0; x < n && r.associative; ++x)
    for (std::size_t y = 0; y < n && r.associative; ++y) {
      auto xy = m.product(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        auto left = product_of_sets(m, xy, ElementSet::singleton(z));
        auto right = product_of_sets(m, ElementSet::singleton(x), m.product(y, z));
        if (left != right) {
          r.associative = false;
          r.associativity_witness = std::array{x, y, z};
          break;
        }
      }
    }
  return r;
}

Hypergroup Hypergroup::certify(Multistructure m) {
  auto report = verify_axioms(m);
  if (!report.associative) {
    auto [x, y, z] = *report.associativity_witness;
    throw InvalidInput("not associative: (" + m.name(x) + "." + m.name(y) +
                       ")." + m.name(z) + " != " + m.name(x) + ".(" +
                       m.name(y) + "." + m.name(z) + ")");
  }
  if (!report.reproductive)
    throw InvalidInput("not reproductive at " + m.name(*report.reproductivity_witness));
  if (!report.all_products_nonempty) {
    auto [x, y] = *report.empty_product_witness;
    throw InvalidInput("empty product " + m.name(x) + "." + m.name(y));
  }
  return Hypergroup(std::move(m), std::move(report));
}

Hypergroup trivial_hypergroup() {
  return Hypergroup::certify(Multistructure({"e"}, {ElementSet{0}}));
}

Multistructure opposite(const Multistructure& m) {
  const std::size_t n = m.size();
  std::vector<ElementSet> t(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = m.product(y, x);
  return Multistructure(m.names(), std::move(t));
}

Hypergroup opposite(const Hypergroup& h) {
  return Hypergroup::certify(opposite(h.structure()));
}

bool is_group(const Multistructure& m) {
  for (auto s : m.table())
    if (s.size() != 1) return false;
  return true;
}

ElementSet power(const Multistructure& m, std::size_t x, std::size_t k) {
  if (k == 0) throw InvalidInput("power exponent must be positive");
  auto single = ElementSet::singleton(x);
  auto acc = single;
  for (std::size_t i = 1; i < k; ++i) acc = product_of_sets(m, acc, single);
  return acc;
}

CogroupReport cogroup_report(const Multistructure& m) {
  CogroupReport r;
  const std::size_t n = m.size();
  for (std::size_t x = 0; x < n && r.rows_partition; ++x) {
    ElementSet covered;
    for (std::size_t y = 0; y < n; ++y) {
      auto block = m.product(x, y);
      // Equal blocks are the same member of the family; distinct blocks
      // must be disjoint and nonempty.
      if (block.empty() || (block.intersects(covered) && !block.is_subset_of(covered))) {
        r.rows_partition = false;
        break;
      }
      if (block.intersects(covered)) {
        bool repeated = false;
        for (std::size_t w = 0; w < y; ++w)
          if (m.product(x, w) == block) repeated = true;
        if (!repeated) {
          r.rows_partition = false;
          break;
        }
      }
      covered |= block;
    }
    if (r.rows_partition && covered != m.carrier()) r.rows_partition = false;
    if (!r.rows_partition) r.partition_witness = x;
  }
  for (std::size_t y = 0; y < n && r.equal_cardinality; ++y)
    for (std::size_t x = 1; x < n; ++x)
      if (m.product(x, y).size() != m.product(0, y).size()) {
        r.equal_cardinality = false;
        r.cardinality_witness = std::array<std::size_t, 3>{y, 0, x};
        break;
      }
  return r;
}

}  // namespace hyper
