#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zdlab/properties.hpp"

namespace zdlab {

// Rule-backed carrier: elements are small integer tuples, operations are
// closures, and the (possibly infinite) carrier is explored through a
// monotone bounded enumerator.  Scans over such a carrier can confirm a
// membership fact by exhibiting a witness, but absence of a witness within
// the bound proves nothing -- unless the carrier registers a hook that
// settles the question by a structural argument.
struct RuleStructure {
  using Elem = std::vector<std::int64_t>;

  std::string name;
  Elem zero;
  std::optional<Elem> one;
  std::function<Elem(const Elem&, const Elem&)> mul;

  // All elements at the given bound, sorted, zero first; growing the bound
  // only appends elements (monotone).
  std::function<std::vector<Elem>(std::uint32_t bound)> enumerate;

  // Optional conclusive membership deciders for the left/right zero-divisor
  // sets.  Return engaged true/false when the question is settled exactly,
  // disengaged when the generic bounded scan must have the last word.
  std::function<std::optional<bool>(const Elem&)> left_zd_hook;
  std::function<std::optional<bool>(const Elem&)> right_zd_hook;
};

enum class Membership { yes, no, unknown };

struct RuleZdEntry {
  RuleStructure::Elem element;
  Membership left = Membership::unknown;
  Membership right = Membership::unknown;
  // Witnesses backing a `yes` (the first annihilating partner found).
  std::optional<RuleStructure::Elem> left_witness;
  std::optional<RuleStructure::Elem> right_witness;
};

// Membership scan over enumerate(bound).  `yes` verdicts come with a
// witness; `no` verdicts only ever come from a registered hook.
std::vector<RuleZdEntry> rule_zero_divisor_scan(const RuleStructure& s,
                                                std::uint32_t bound);

// fails when some bounded element is settled on exactly one side of
// Z_l / Z_r; otherwise unknown_at_bound (an infinite carrier can never be
// pronounced eversible by scanning).
PropertyReport is_eversible(const RuleStructure& s, std::uint32_t bound);

// fails when a bounded pair has s t = 0 but t s != 0; otherwise
// unknown_at_bound.
PropertyReport is_reversible(const RuleStructure& s, std::uint32_t bound);

std::vector<std::string> rule_carrier_names();
const RuleStructure& rule_carrier(const std::string& name);

}  // namespace zdlab
