#pragma once

// Reference implementations for the tests. Everything here works on
// std::set and plain loops and shares no code with the library beyond
// reading tables out of it.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hyper/multistructure.hpp"
#include "hyper/group.hpp"

std::uint64_t test_seed();

namespace oracle {

using Set = std::set<int>;
using Table = std::vector<std::vector<Set>>;

inline Table table_of(const hyper::Multistructure& m) {
  const int n = static_cast<int>(m.size());
  Table t(n, std::vector<Set>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (m.product(x, y).contains(z)) t[x][y].insert(z);
  return t;
}

inline hyper::Multistructure structure_of(const Table& t) {
  const std::size_t n = t.size();
  std::vector<hyper::ElementSet> cells(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (int z : t[x][y]) cells[x * n + y].insert(z);
  return hyper::Multistructure({}, cells);
}

inline Set prod(const Table& t, const Set& a, const Set& b) {
  Set out;
  for (int x : a)
    for (int y : b) out.insert(t[x][y].begin(), t[x][y].end());
  return out;
}

inline Set all(int n) {
  Set s;
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

inline bool associative(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (prod(t, t[x][y], {z}) != prod(t, {x}, t[y][z])) return false;
  return true;
}

inline bool reproductive(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int x = 0; x < n; ++x)
    if (prod(t, {x}, all(n)) != all(n) || prod(t, all(n), {x}) != all(n)) return false;
  return true;
}

inline bool nonempty(const Table& t) {
  for (const auto& row : t)
    for (const auto& c : row)
      if (c.empty()) return false;
  return true;
}

inline bool hypergroup(const Table& t) { return associative(t) && reproductive(t) && nonempty(t); }

/// Every labelling of n points by 0..n-1, reduced to the partitions it
/// defines. Quadratic in n^n, fine up to n = 7.
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::set<std::vector<int>> seen;
  std::vector<int> lab(n, 0);
  while (true) {
    std::map<int, int> renumber;
    std::vector<int> canon(n);
    for (int i = 0; i < n; ++i) {
      auto it = renumber.try_emplace(lab[i], static_cast<int>(renumber.size())).first;
      canon[i] = it->second;
    }
    seen.insert(canon);
    int i = 0;
    while (i < n && ++lab[i] == n) lab[i++] = 0;
    if (i == n) break;
  }
  return {seen.begin(), seen.end()};
}

/// Reflector identities for the projection onto the classes of `lab`,
/// written with preimages of sets of class labels.
inline bool reflector_partition(const Table& t, const std::vector<int>& lab) {
  const int n = static_cast<int>(t.size());
  auto f = [&](const Set& s) {
    Set out;
    for (int x : s) out.insert(lab[x]);
    return out;
  };
  auto finv = [&](const Set& classes) {
    Set out;
    for (int x = 0; x < n; ++x)
      if (classes.count(lab[x])) out.insert(x);
    return out;
  };
  // f(x).f(y) in the quotient: classes of products of class members.
  auto qprod = [&](int a, int b) {
    Set out;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (lab[x] == a && lab[y] == b)
          for (int z : t[x][y]) out.insert(lab[z]);
    return out;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const Set a = finv(f(t[x][y]));
      const Set b = finv(qprod(lab[x], lab[y]));
      const Set c = prod(t, {x}, finv({lab[y]}));
      const Set d = prod(t, finv({lab[x]}), {y});
      if (a != b || a != c || a != d) return false;
    }
  return true;
}

inline int reflector_partition_count(const Table& t) {
  int count = 0;
  for (const auto& lab : all_partitions(static_cast<int>(t.size())))
    count += reflector_partition(t, lab);
  return count;
}

inline bool simple(const Table& t) {
  return t.size() >= 2 && reflector_partition_count(t) == 2;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Table& a, const Table& b) {
  if (a.size() != b.size()) return false;
  const int n = static_cast<int>(a.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        Set img;
        for (int z : a[x][y]) img.insert(p[z]);
        ok = img == b[p[x]][p[y]];
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Table transpose(const Table& t) {
  Table out = t;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t y = 0; y < t.size(); ++y) out[x][y] = t[y][x];
  return out;
}

// ---------------------------------------------------------------------------
// Groups given by a multiplication function on 0..n-1

struct Grp {
  int n;
  std::function<int(int, int)> mul;
};

inline Grp zmod(int n) {
  return {n, [n](int a, int b) { return (a + b) % n; }};
}

/// Permutations of m points in lexicographic one-line order, composed as
/// (st)(i) = s(t(i)).
inline Grp sym(int m) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  auto index = std::make_shared<std::map<std::vector<int>, int>>();
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) (*index)[perms[i]] = i;
  auto shared = std::make_shared<std::vector<std::vector<int>>>(perms);
  return {static_cast<int>(perms.size()), [shared, index, m](int a, int b) {
            std::vector<int> c(m);
            for (int i = 0; i < m; ++i) c[i] = (*shared)[a][(*shared)[b][i]];
            return index->at(c);
          }};
}

inline Table group_table(const Grp& g) {
  Table t(g.n, std::vector<Set>(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) t[a][b] = {g.mul(a, b)};
  return t;
}

inline int identity(const Grp& g) {
  for (int e = 0; e < g.n; ++e) {
    bool ok = true;
    for (int a = 0; a < g.n && ok; ++a) ok = g.mul(e, a) == a && g.mul(a, e) == a;
    if (ok) return e;
  }
  return -1;
}

inline bool closed(const Grp& g, const Set& s) {
  if (s.empty()) return false;
  for (int a : s)
    for (int b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

/// Every subset closed under the product; feasible for n <= 12.
inline std::vector<Set> subgroups_by_subsets(const Grp& g) {
  std::vector<Set> out;
  for (std::uint32_t mask = 1; mask < (1u << g.n); ++mask) {
    Set s;
    for (int i = 0; i < g.n; ++i)
      if (mask >> i & 1u) s.insert(i);
    if (closed(g, s)) out.push_back(s);
  }
  return out;
}

inline Set coset_right(const Grp& g, int x, const Set& h) {
  Set out;
  for (int m : h) out.insert(g.mul(x, m));
  return out;
}

inline Set coset_left(const Grp& g, int x, const Set& h) {
  Set out;
  for (int m : h) out.insert(g.mul(m, x));
  return out;
}

inline bool normal(const Grp& g, const Set& h) {
  for (int x = 0; x < g.n; ++x)
    if (coset_right(g, x, h) != coset_left(g, x, h)) return false;
  return true;
}

/// Classical simplicity: exactly two normal subgroups.
inline bool simple_group(const Grp& g) {
  int normals = 0;
  for (const auto& h : subgroups_by_subsets(g)) normals += normal(g, h);
  return g.n > 1 && normals == 2;
}

/// G/H straight from the definition, cosets as sets ordered by least
/// member.
inline Table coset_table(const Grp& g, const Set& h, bool right) {
  std::vector<Set> cosets;
  std::map<Set, int> index;
  for (int x = 0; x < g.n; ++x) {
    Set c = right ? coset_right(g, x, h) : coset_left(g, x, h);
    if (index.try_emplace(c, static_cast<int>(cosets.size())).second) cosets.push_back(c);
  }
  const int k = static_cast<int>(cosets.size());
  Table t(k, std::vector<Set>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int x = *cosets[a].begin(), y = *cosets[b].begin();
      for (int m : h) {
        int z = g.mul(g.mul(x, m), y);
        t[a][b].insert(index.at(right ? coset_right(g, z, h) : coset_left(g, z, h)));
      }
    }
  return t;
}

}  // namespace oracle
