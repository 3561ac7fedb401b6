#include "hyper/group.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace hyper {

namespace {

constexpr auto kUnset = std::numeric_limits<std::size_t>::max();

std::string one_line_name(const std::vector<std::size_t>& perm) {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm.size() > 10 && i != 0) s += '.';
    s += std::to_string(perm[i]);
  }
  return s;
}

std::size_t factorial_capped(std::size_t m, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) {
    if (f > cap / i) return cap + 1;
    f *= i;
  }
  return f;
}

GroupTable from_permutations(std::vector<std::vector<std::size_t>> perms) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], i);
  const std::size_t n = perms.size();
  const std::size_t points = perms.empty() ? 0 : perms[0].size();
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> composed(points);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < points; ++i) composed[i] = perms[a][perms[b][i]];
      auto it = index.find(composed);
      if (it == index.end()) throw InvalidInput("permutations are not closed under composition");
      rows[a][b] = it->second;
    }
  std::vector<std::string> names;
  for (const auto& p : perms) names.push_back(one_line_name(p));
  return GroupTable::verify(rows, std::move(names)).with_permutations(std::move(perms));
}

}  // namespace

GroupTable GroupTable::verify(const std::vector<std::vector<std::size_t>>& rows,
                              std::vector<std::string> names) {
  using Kind = GroupAxiomError::Kind;
  const std::size_t n = rows.size();
  if (n == 0) throw GroupAxiomError(Kind::Shape, {}, "empty group table");
  for (const auto& row : rows)
    if (row.size() != n) throw GroupAxiomError(Kind::Shape, {}, "group table is not square");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rows[a][b] >= n)
        throw GroupAxiomError(Kind::Range, {a, b},
                              "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") is out of range");

  GroupTable g;
  g.n_ = n;
  g.table_.reserve(n * n);
  for (const auto& row : rows) g.table_.insert(g.table_.end(), row.begin(), row.end());

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c)))
          throw GroupAxiomError(Kind::NotAssociative, {a, b, c},
                                "not associative at (" + std::to_string(a) + "," +
                                    std::to_string(b) + "," + std::to_string(c) + ")");

  g.identity_ = kUnset;
  for (std::size_t e = 0; e < n && g.identity_ == kUnset; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ == kUnset) throw GroupAxiomError(Kind::NoIdentity, {}, "no identity element");

  g.inverse_.assign(n, kUnset);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b)
      if (g.multiply(a, b) == g.identity_ && g.multiply(b, a) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == kUnset)
      throw GroupAxiomError(Kind::NoInverse, {a}, "element " + std::to_string(a) +
                                                      " has no inverse");
  }

  if (names.empty()) {
    for (std::size_t a = 0; a < n; ++a) names.push_back(std::to_string(a));
  } else if (names.size() != n) {
    throw GroupAxiomError(Kind::Shape, {}, "name count does not match the table");
  }
  g.names_ = std::move(names);
  return g;
}

std::vector<std::vector<std::size_t>> GroupTable::rows() const {
  std::vector<std::vector<std::size_t>> out(n_);
  for (std::size_t a = 0; a < n_; ++a)
    out[a].assign(table_.begin() + static_cast<std::ptrdiff_t>(a * n_),
                  table_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_));
  return out;
}

Multistructure GroupTable::as_multistructure() const {
  if (n_ > ElementSet::capacity)
    throw CapExceeded("group of order " + std::to_string(n_) +
                      " does not fit a Multistructure");
  std::vector<ElementSet> t(n_ * n_);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = ElementSet::singleton(table_[i]);
  return Multistructure(names_, std::move(t));
}

GroupTable GroupTable::with_permutations(std::vector<std::vector<std::size_t>> perms) && {
  permutations_ = std::move(perms);
  return std::move(*this);
}

GroupTable symmetric_group(std::size_t m, std::size_t max_order) {
  if (m == 0) throw InvalidInput("symmetric group needs at least one point");
  if (factorial_capped(m, max_order) > max_order)
    throw CapExceeded("Sym(" + std::to_string(m) + ") exceeds the group order cap " +
                      std::to_string(max_order));
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> perms;
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return from_permutations(std::move(perms));
}

GroupTable permutation_group(std::vector<std::vector<std::size_t>> elements) {
  if (elements.empty()) throw InvalidInput("empty permutation group");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto& p : elements) {
    auto sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || p.size() != elements[0].size())
        throw InvalidInput("not a permutation of a common point set");
  }
  return from_permutations(std::move(elements));
}

GroupTable cyclic_group(std::size_t m) {
  if (m == 0) throw InvalidInput("cyclic group order must be positive");
  std::vector<std::vector<std::size_t>> rows(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) rows[a][b] = (a + b) % m;
  return GroupTable::verify(rows);
}

GroupTable dihedral_group(std::size_t m) {
  if (m == 0) throw InvalidInput("dihedral group needs m >= 1");
  // r^k s^f with s r = r^-1 s.
  const std::size_t n = 2 * m;
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto [k1, f1] = std::pair{a / 2, a % 2};
    names[a] = (f1 ? "s" : "r") + std::to_string(k1);
    for (std::size_t b = 0; b < n; ++b) {
      auto [k2, f2] = std::pair{b / 2, b % 2};
      std::size_t k = f1 ? (k1 + m - k2) % m : (k1 + k2) % m;
      rows[a][b] = 2 * k + (f1 ^ f2);
    }
  }
  return GroupTable::verify(rows, std::move(names));
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = na * nb;
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    names[x] = "(" + a.name(x / nb) + "," + b.name(x % nb) + ")";
    for (std::size_t y = 0; y < n; ++y)
      rows[x][y] = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  }
  return GroupTable::verify(rows, std::move(names));
}

Subgroup::Subgroup(GroupSet mask) : mask_(std::move(mask)) {
  for (auto i = mask_.find_first(); i != GroupSet::npos; i = mask_.find_next(i))
    elements_.push_back(i);
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

GroupSet closure(const GroupTable& g, GroupSet seed) {
  seed.set(g.identity());
  std::vector<std::size_t> members;
  for (auto i = seed.find_first(); i != GroupSet::npos; i = seed.find_next(i))
    members.push_back(i);
  // Multiply every member by every member until nothing new appears.
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      for (auto prod : {g.multiply(members[i], members[j]), g.multiply(members[j], members[i])})
        if (!seed.test(prod)) {
          seed.set(prod);
          members.push_back(prod);
        }
  return seed;
}

Subgroup Subgroup::from_members(const GroupTable& g, std::span<const std::size_t> members) {
  GroupSet mask(g.order());
  for (auto x : members) {
    if (x >= g.order()) throw InvalidInput("subgroup member out of range");
    mask.set(x);
  }
  if (!mask.test(g.identity())) throw InvalidInput("subgroup lacks the identity");
  for (auto a = mask.find_first(); a != GroupSet::npos; a = mask.find_next(a)) {
    if (!mask.test(g.inverse(a))) throw InvalidInput("subgroup not closed under inverse");
    for (auto b = mask.find_first(); b != GroupSet::npos; b = mask.find_next(b))
      if (!mask.test(g.multiply(a, b)))
        throw InvalidInput("subgroup not closed under the product");
  }
  return Subgroup(std::move(mask));
}

Subgroup Subgroup::generated_by(const GroupTable& g, std::span<const std::size_t> generators) {
  GroupSet seed(g.order());
  for (auto x : generators) {
    if (x >= g.order()) throw InvalidInput("generator out of range");
    seed.set(x);
  }
  return Subgroup(closure(g, std::move(seed)));
}

Subgroup Subgroup::trivial(const GroupTable& g) {
  GroupSet mask(g.order());
  mask.set(g.identity());
  return Subgroup(std::move(mask));
}

Subgroup Subgroup::whole(const GroupTable& g) {
  GroupSet mask(g.order());
  mask.set();
  return Subgroup(std::move(mask));
}

Subgroup stabilizer_subgroup(const GroupTable& g, std::size_t point) {
  const auto& perms = g.permutations();
  if (perms.empty()) throw InvalidInput("stabilizer needs a permutation group");
  if (point >= perms[0].size())
    throw InvalidInput("point " + std::to_string(point) + " is not moved by this group");
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < perms.size(); ++a)
    if (perms[a][point] == point) members.push_back(a);
  return Subgroup::from_members(g, members);
}

Subgroup alternating_subgroup(const GroupTable& g) {
  const auto& perms = g.permutations();
  if (perms.empty()) throw InvalidInput("alternating subgroup needs a permutation group");
  std::vector<std::size_t> members;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perms[a].size(); ++i)
      for (std::size_t j = i + 1; j < perms[a].size(); ++j)
        if (perms[a][i] > perms[a][j]) ++inversions;
    if (inversions % 2 == 0) members.push_back(a);
  }
  return Subgroup::from_members(g, members);
}

GroupTable subgroup_as_group(const GroupTable& g, const Subgroup& h) {
  const auto& el = h.elements();
  std::vector<std::size_t> local(g.order(), kUnset);
  for (std::size_t i = 0; i < el.size(); ++i) local[el[i]] = i;
  std::vector<std::vector<std::size_t>> rows(el.size(), std::vector<std::size_t>(el.size()));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < el.size(); ++i) {
    names.push_back(g.name(el[i]));
    for (std::size_t j = 0; j < el.size(); ++j) rows[i][j] = local[g.multiply(el[i], el[j])];
  }
  return GroupTable::verify(rows, std::move(names));
}

std::vector<Subgroup> subgroups(const GroupTable& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw CapExceeded("subgroup enumeration of a group of order " +
                      std::to_string(g.order()) + " exceeds the cap " +
                      std::to_string(max_order));
  const std::size_t n = g.order();
  std::vector<GroupSet> found{closure(g, GroupSet(n))};
  std::set<GroupSet> seen{found[0]};
  for (std::size_t i = 0; i < found.size(); ++i) {
    // <S, x> = <S, s x> for s in S, so one element per coset S x suffices.
    GroupSet tried = found[i];
    std::vector<std::size_t> members;
    for (auto a = found[i].find_first(); a != GroupSet::npos; a = found[i].find_next(a))
      members.push_back(a);
    for (std::size_t x = 0; x < n; ++x) {
      if (tried.test(x)) continue;
      for (auto s : members) tried.set(g.multiply(s, x));
      auto seed = found[i];
      seed.set(x);
      auto next = closure(g, std::move(seed));
      if (seen.insert(next).second) found.push_back(std::move(next));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& mask : found) {
    std::vector<std::size_t> members;
    for (auto i = mask.find_first(); i != GroupSet::npos; i = mask.find_next(i))
      members.push_back(i);
    out.push_back(Subgroup::from_members(g, members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (auto a : h.elements())
      if (!h.contains(g.multiply(g.multiply(x, a), g.inverse(x)))) return false;
  return true;
}

bool is_maximal(const GroupTable& g, const Subgroup& h) {
  if (h.order() == g.order()) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (h.contains(x)) continue;
    auto seed = h.mask();
    seed.set(x);
    if (closure(g, std::move(seed)).count() != g.order()) return false;
  }
  return true;
}

GroupSet double_coset(const GroupTable& g, const Subgroup& a, std::size_t x,
                      const Subgroup& b) {
  GroupSet out(g.order());
  for (auto p : a.elements()) {
    auto px = g.multiply(p, x);
    for (auto q : b.elements()) out.set(g.multiply(px, q));
  }
  return out;
}

bool is_invariant_modulo(const GroupTable& g, const Subgroup& h, const Subgroup& k) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto kxk = double_coset(g, k, x, k);
    if (kxk != double_coset(g, h, x, k) || kxk != double_coset(g, k, x, h)) return false;
  }
  return true;
}

bool is_invariant_modulo_inclusion_form(const GroupTable& g, const Subgroup& h,
                                        const Subgroup& k) {
  if (!h.is_subset_of(k)) return false;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto hxk = double_coset(g, h, x, k);
    for (auto a : k.elements())
      if (!hxk.test(g.multiply(a, x))) return false;
  }
  return true;
}

std::vector<std::size_t> coset_labels(const GroupTable& g, const Subgroup& h,
                                      CosetSide side) {
  std::vector<std::size_t> label(g.order(), kUnset);
  std::size_t next = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (label[x] != kUnset) continue;
    for (auto a : h.elements())
      label[side == CosetSide::Right ? g.multiply(x, a) : g.multiply(a, x)] = next;
    ++next;
  }
  return label;
}

}  // namespace hyper
