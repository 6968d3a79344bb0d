#pragma once

// Slow reference implementations, written independently of the library code
// so the two can disagree.  Everything here is literal quantifier sweeps.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "zdlab/structure.hpp"

namespace oracle {

using zdlab::ElementId;
using zdlab::FiniteStructure;
using zdlab::OpTable;

inline bool mul_associative(const FiniteStructure& s) {
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 0; b < s.order; ++b)
      for (ElementId c = 0; c < s.order; ++c)
        if (s.times(s.times(a, b), c) != s.times(a, s.times(b, c)))
          return false;
  return true;
}

inline bool zero_absorbing(const FiniteStructure& s) {
  for (ElementId a = 0; a < s.order; ++a)
    if (s.times(0, a) != 0 || s.times(a, 0) != 0) return false;
  return true;
}

inline bool reversible(const FiniteStructure& s) {
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 0; b < s.order; ++b)
      if (s.times(a, b) == 0 && s.times(b, a) != 0) return false;
  return true;
}

inline std::set<ElementId> left_zds(const FiniteStructure& s) {
  std::set<ElementId> out;
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 1; b < s.order; ++b)
      if (s.times(a, b) == 0) out.insert(a);
  return out;
}

inline std::set<ElementId> right_zds(const FiniteStructure& s) {
  std::set<ElementId> out;
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 1; b < s.order; ++b)
      if (s.times(b, a) == 0) out.insert(a);
  return out;
}

inline bool eversible(const FiniteStructure& s) {
  return left_zds(s) == right_zds(s);
}

inline bool entire(const FiniteStructure& s) {
  for (ElementId a = 1; a < s.order; ++a)
    for (ElementId b = 1; b < s.order; ++b)
      if (s.times(a, b) == 0) return false;
  return true;
}

inline bool prime(const FiniteStructure& s) {
  for (ElementId a = 1; a < s.order; ++a)
    for (ElementId b = 1; b < s.order; ++b) {
      bool all_zero = true;
      for (ElementId x = 0; x < s.order; ++x)
        if (s.times(s.times(a, x), b) != 0) all_zero = false;
      if (all_zero) return false;
    }
  return true;
}

inline bool semiprime(const FiniteStructure& s) {
  for (ElementId a = 1; a < s.order; ++a) {
    bool all_zero = true;
    for (ElementId x = 0; x < s.order; ++x)
      if (s.times(s.times(a, x), a) != 0) all_zero = false;
    if (all_zero) return false;
  }
  return true;
}

inline bool nilpotent_free(const FiniteStructure& s) {
  for (ElementId a = 1; a < s.order; ++a)
    if (s.times(a, a) == 0) return false;
  return true;
}

inline bool symmetric(const FiniteStructure& s) {
  for (ElementId r = 0; r < s.order; ++r)
    for (ElementId t = 0; t < s.order; ++t)
      for (ElementId u = 0; u < s.order; ++u)
        if (s.times(s.times(r, t), u) == 0 &&
            s.times(s.times(t, r), u) != 0)
          return false;
  return true;
}

inline bool zerosumfree(const FiniteStructure& s) {
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 0; b < s.order; ++b)
      if (s.plus(a, b) == 0 && (a != 0 || b != 0)) return false;
  return true;
}

inline std::optional<std::uint32_t> nil_index(const FiniteStructure& s,
                                              ElementId a) {
  ElementId p = a;
  for (std::uint32_t k = 1; k <= s.order; ++k) {
    if (p == 0) return k;
    p = s.times(p, a);
  }
  return std::nullopt;
}

// --- table generation helpers ----------------------------------------------

// All row-major tables on {0..n-1} whose free cells run an odometer; cells
// with fixed[i][j] >= 0 are pinned to that value.
inline std::vector<OpTable> all_tables(
    std::uint32_t n, const std::vector<std::vector<int>>& fixed) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> free_cells;
  OpTable base(n, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (fixed[i][j] >= 0)
        base.set(i, j, static_cast<ElementId>(fixed[i][j]));
      else
        free_cells.push_back({i, j});
    }
  std::vector<OpTable> out;
  std::vector<std::uint32_t> digits(free_cells.size(), 0);
  while (true) {
    OpTable t = base;
    for (std::size_t k = 0; k < free_cells.size(); ++k)
      t.set(free_cells[k].first, free_cells[k].second,
            static_cast<ElementId>(digits[k]));
    out.push_back(t);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return out;
}

// Multiplication grids with an absorbing zero row/column.
inline std::vector<OpTable> all_zero_mul_tables(std::uint32_t n) {
  std::vector<std::vector<int>> fixed(n, std::vector<int>(n, -1));
  for (std::uint32_t i = 0; i < n; ++i) fixed[0][i] = fixed[i][0] = 0;
  return all_tables(n, fixed);
}

// Multiplication grids with absorbing zero and identity at index 1.
inline std::vector<OpTable> all_monoid_mul_tables(std::uint32_t n) {
  std::vector<std::vector<int>> fixed(n, std::vector<int>(n, -1));
  for (std::uint32_t i = 0; i < n; ++i) {
    fixed[0][i] = fixed[i][0] = 0;
    fixed[1][i] = fixed[i][1] = static_cast<int>(i);
  }
  return all_tables(n, fixed);
}

// Addition grids with 0 as two-sided neutral and no other constraint.
inline std::vector<OpTable> all_unital_add_tables(std::uint32_t n) {
  std::vector<std::vector<int>> fixed(n, std::vector<int>(n, -1));
  for (std::uint32_t i = 0; i < n; ++i) fixed[0][i] = fixed[i][0] = static_cast<int>(i);
  return all_tables(n, fixed);
}

inline bool table_associative(const OpTable& t) {
  const std::uint32_t n = t.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) return false;
  return true;
}

inline bool table_commutative(const OpTable& t) {
  const std::uint32_t n = t.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (t(a, b) != t(b, a)) return false;
  return true;
}

inline bool distributes(const OpTable& mul, const OpTable& add, bool left,
                        bool right) {
  const std::uint32_t n = mul.order();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        if (left && mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
          return false;
        if (right && mul(add(a, b), c) != add(mul(a, c), mul(b, c)))
          return false;
      }
  return true;
}

// --- isomorphism -----------------------------------------------------------

// Tries every relabeling that keeps the normal form (0 fixed; 1 fixed when
// the kind carries a one).
inline bool isomorphic(const FiniteStructure& a, const FiniteStructure& b) {
  if (a.kind != b.kind || a.order != b.order) return false;
  const std::uint32_t n = a.order;
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ElementId first_free = zdlab::kind_has_one(a.kind) ? 2 : 1;
  std::sort(perm.begin() + first_free, perm.end());
  do {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n && ok; ++y) {
        if (perm[a.times(x, y)] != b.times(perm[x], perm[y])) ok = false;
        if (ok && a.has_add() &&
            perm[a.plus(x, y)] != b.plus(perm[x], perm[y]))
          ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + first_free, perm.end()));
  return false;
}

}  // namespace oracle
