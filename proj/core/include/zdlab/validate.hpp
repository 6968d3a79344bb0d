#pragma once

#include "zdlab/structure.hpp"

namespace zdlab {

enum class DistributiveSide { left, right, both };

// Axiom checkers.  Each scans in lexicographic order and records the first
// violating tuple per axiom, so reports are deterministic.  Tables must be
// well formed (shape and range); that is an input error, not a failed axiom.

ValidationReport validate_semigroup_with_zero(const OpTable& mul,
                                              ElementId zero);
ValidationReport validate_monoid_with_zero(const OpTable& mul, ElementId zero,
                                           ElementId one);

// Unital-magma addition (0 neutral both ways, nothing else), multiplicative
// monoid, absorbing zero, and the requested distributive law(s).
ValidationReport validate_pn_semiring(const FiniteStructure& s,
                                      DistributiveSide side);

ValidationReport validate_semiring(const FiniteStructure& s);

// Dispatch on s.kind.
ValidationReport validate_structure(const FiniteStructure& s);

}  // namespace zdlab
