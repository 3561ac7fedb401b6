#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyper/element_set.hpp"

namespace hyper {

/// A finite carrier with a total table of subsets: entry (x, y) is the
/// product x.y. Products may be empty; no axiom is assumed.
class Multistructure {
 public:
  Multistructure() = default;

  /// `table` is row-major with n*n entries. Throws InvalidInput when the
  /// sizes disagree, n is 0 or above ElementSet::capacity, or an entry
  /// names an element >= n. Empty `names` default to "0", "1", ...
  Multistructure(std::vector<std::string> names, std::vector<ElementSet> table);

  /// Convenience: unnamed carrier of size n, all products empty.
  explicit Multistructure(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t x) const { return names_[x]; }
  ElementSet carrier() const noexcept { return ElementSet::full(n_); }

  ElementSet product(std::size_t x, std::size_t y) const {
    return table_[x * n_ + y];
  }
  void set_product(std::size_t x, std::size_t y, ElementSet value);
  const std::vector<ElementSet>& table() const noexcept { return table_; }

  /// Index of the element called `name`, if any.
  std::optional<std::size_t> find(const std::string& name) const;

  /// Equality of tables; names are ignored.
  bool same_table(const Multistructure& other) const {
    return n_ == other.n_ && table_ == other.table_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::string> names_;
  std::vector<ElementSet> table_;
};

/// Union of x.y over x in `xs`, y in `ys`.
ElementSet product_of_sets(const Multistructure& m, ElementSet xs, ElementSet ys);

/// Result of checking the hypergroup axioms. Each failed flag carries the
/// lexicographically first witness.
struct AxiomReport {
  bool associative = true;
  bool reproductive = true;
  bool all_products_nonempty = true;

  std::optional<std::array<std::size_t, 3>> associativity_witness;
  std::optional<std::size_t> reproductivity_witness;
  std::optional<std::pair<std::size_t, std::size_t>> empty_product_witness;

  bool is_hypergroup() const noexcept {
    return associative && reproductive && all_products_nonempty;
  }
};

AxiomReport verify_axioms(const Multistructure& m);

/// A Multistructure that passed verify_axioms.
class Hypergroup {
 public:
  /// Throws InvalidInput naming the failed axiom.
  static Hypergroup certify(Multistructure m);

  const Multistructure& structure() const noexcept { return m_; }
  operator const Multistructure&() const noexcept { return m_; }  // NOLINT
  const AxiomReport& report() const noexcept { return report_; }
  std::size_t size() const noexcept { return m_.size(); }
  ElementSet product(std::size_t x, std::size_t y) const { return m_.product(x, y); }

 private:
  Hypergroup(Multistructure m, AxiomReport r)
      : m_(std::move(m)), report_(std::move(r)) {}

  Multistructure m_;
  AxiomReport report_;
};

/// The one-element hypergroup.
Hypergroup trivial_hypergroup();

/// x o y = y.x
Multistructure opposite(const Multistructure& m);
Hypergroup opposite(const Hypergroup& h);

/// True iff every product is a singleton.
bool is_group(const Multistructure& m);

/// x.x. ... .x with k factors, folded from the left. Throws InvalidInput
/// when k == 0.
ElementSet power(const Multistructure& m, std::size_t x, std::size_t k);

/// Two separately reported readings of the cogroup property.
struct CogroupReport {
  /// For every fixed x, the distinct products {x.y : y} partition H.
  bool rows_partition = true;
  /// For every fixed y, |x.y| does not depend on x. Holds in every coset
  /// hypergroup, since |xHyH / H| = |HyH| / |H|.
  bool equal_cardinality = true;
  std::optional<std::size_t> partition_witness;  // row x
  /// Column y and the two rows whose products differ in size.
  std::optional<std::array<std::size_t, 3>> cardinality_witness;

  bool is_cogroup() const noexcept { return rows_partition && equal_cardinality; }
};

CogroupReport cogroup_report(const Multistructure& m);
inline bool is_cogroup(const Multistructure& m) {
  return cogroup_report(m).is_cogroup();
}

}  // namespace hyper
