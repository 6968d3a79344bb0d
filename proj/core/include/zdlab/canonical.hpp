#pragma once

#include "zdlab/structure.hpp"

namespace zdlab {

// Lexicographically minimal relabeling of the tables over all permutations
// that fix 0 (and 1 where present).  Two structures of the same kind are
// isomorphic exactly when their canonical tables are identical, so this is
// the dedup key for iso-classes.  Brute force; intended for small orders.
FiniteStructure canonical_form(const FiniteStructure& s);

// The comparison key canonical_form minimizes: add cells (if any) followed
// by mul cells.
std::vector<ElementId> table_key(const FiniteStructure& s);

}  // namespace zdlab
