#pragma once

#include <functional>

#include "zdlab/structure.hpp"

namespace zdlab {

// What to generate.  Filters are property names; a structure must satisfy
// every listed property (verdict holds) to be emitted.  allow_big lifts the
// order cap for multiplication-only kinds from 4 to 5; kinds with addition
// stay capped at 4.
struct EnumerationSpec {
  Kind kind = Kind::semigroup_with_zero;
  std::uint32_t order = 2;
  bool up_to_iso = false;
  std::vector<std::string> filters;
  bool allow_big = false;
};

// Every valid table of the requested kind and order, ascending by table
// bytes (addition first, then multiplication).  The visitor returns false to
// stop early.
void for_each_structure(const EnumerationSpec& spec,
                        const std::function<bool(const FiniteStructure&)>& visit);

std::vector<FiniteStructure> enumerate_structures(const EnumerationSpec& spec);

// Every commutative monoid table on {0..order-1} with neutral element 0, in
// ascending cell order.  Order 1 yields the single trivial table.
std::vector<OpTable> commutative_monoid_tables(std::uint32_t order);

// Rejection sampling: fill the free table cells from a seeded generator and
// keep the first fill that validates.  Same seed, same structure.
FiniteStructure random_structure(Kind kind, std::uint32_t order,
                                 std::uint64_t seed);

}  // namespace zdlab
