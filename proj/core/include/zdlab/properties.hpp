#pragma once

#include <cstdint>
#include <functional>
#include <map>

#include <json.hpp>

#include "zdlab/structure.hpp"

namespace zdlab {

enum class Verdict { holds, fails, unknown_at_bound };

const char* verdict_name(Verdict v);

// Outcome of one property check.  For table-backed structures every check is
// decided exactly and `bound` stays empty; rule-backed scans fill `bound`
// and may return unknown_at_bound.  Witnesses are always the
// lexicographically smallest violating tuple, so re-runs are reproducible.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::holds;
  std::optional<std::vector<std::int64_t>> witness;
  std::optional<std::uint32_t> bound;

  bool holds() const { return verdict == Verdict::holds; }
  bool fails() const { return verdict == Verdict::fails; }
};

nlohmann::json to_json(const PropertyReport& r);

struct ZeroDivisorSets {
  std::vector<ElementId> left;    // s with s x = 0 for some x != 0
  std::vector<ElementId> right;   // s with x s = 0 for some x != 0
  std::vector<ElementId> all;     // union
  std::vector<ElementId> proper;  // union minus zero
};

ZeroDivisorSets zero_divisor_sets(const FiniteStructure& s);

// st = 0 implies ts = 0.
PropertyReport is_reversible(const FiniteStructure& s);
// Left and right zero-divisor sets coincide.
PropertyReport is_eversible(const FiniteStructure& s);
// No zero divisors besides zero itself.
PropertyReport is_entire(const FiniteStructure& s);
// a s b = 0 for every s forces a = 0 or b = 0.
PropertyReport is_prime(const FiniteStructure& s);
// a s a = 0 for every s forces a = 0.
PropertyReport is_semiprime(const FiniteStructure& s);
// s^2 = 0 forces s = 0.
PropertyReport is_nilpotent_free(const FiniteStructure& s);
// r s t = 0 implies s r t = 0.
PropertyReport is_symmetric(const FiniteStructure& s);
// s + t = 0 forces s = t = 0.  Needs an addition table.
PropertyReport is_zerosumfree(const FiniteStructure& s);

// All nilpotent elements with their minimal vanishing exponent; the search
// stops at exponent = order, past which no new elements can vanish.
std::vector<std::pair<ElementId, std::uint32_t>> nilpotent_elements(
    const FiniteStructure& s);

struct Annihilators {
  std::vector<ElementId> left;   // x with x s = 0
  std::vector<ElementId> right;  // x with s x = 0
};

Annihilators annihilators(const FiniteStructure& s, ElementId elem);

enum class Sidedness { left, right, two_sided };

const char* sidedness_name(Sidedness s);

struct IdealDescriptor {
  std::vector<ElementId> generators;
  Sidedness sidedness = Sidedness::two_sided;
  std::vector<ElementId> closure;  // least ideal containing the generators
};

// Fixpoint closure: multiplicative absorption on the requested side(s) and,
// for kinds with addition, pairwise sums.
IdealDescriptor ideal_closure(const FiniteStructure& s,
                              std::vector<ElementId> generators,
                              Sidedness side);

// Checks the given ideal is closed (input error naming the escaping pair if
// not) and that every member is nilpotent.
PropertyReport is_nil_ideal(const FiniteStructure& s,
                            const IdealDescriptor& ideal);

// Consequences of reversibility for nilpotents, checked literally:
//   right_closure_nil           every principal right ideal of a nilpotent is nil
//   right_closure_is_left_ideal ...and is itself closed under left multiples
//   two_sided_closure_nil       the two-sided closure of a nilpotent is nil
//   nilpotent_set_mul_absorbing s n and n s stay nilpotent
// and on semirings additionally:
//   nilpotent_set_add_closed    n + m stays nilpotent
//   sum_index                   (n + m)^(i+j-1) = 0 at the minimal exponents
//   sandwich_index              (a n b)^i = 0 at n's minimal exponent
// Applied only when the structure is reversible; vacuously holds otherwise.
struct CohnReport {
  PropertyReport overall;               // property "cohn"
  std::vector<PropertyReport> checks;   // property "cohn.<claim>"
};

CohnReport verify_cohn(const FiniteStructure& s);

// Zero-product pair criterion for eversibility of distributive pn-semirings:
// for a b = 0 there must be a nonzero c with either b c = 0 = c a, or
// b c != 0, c a != 0 and b c a = 0.  The restricted form quantifies over
// pairs of nonzero elements, the literal form over all pairs; both verdicts
// are reported.
struct Condition2Report {
  PropertyReport restricted;
  PropertyReport literal;
};

Condition2Report eversible_condition2(const FiniteStructure& s);

struct ArmendarizOptions {
  std::uint32_t degree = 2;
  bool allow_sampling = false;    // fall back to sampling past the cap
  std::uint64_t samples = 200000;
  std::uint64_t seed = 0;
};

// Degree-bounded Armendariz check on a semiring: whenever two coefficient
// vectors of length degree+1 convolve to zero, every cross product of
// coefficients is zero.  Witness layout: f cells, g cells, then (i, j).
PropertyReport is_armendariz_bounded(const FiniteStructure& s,
                                     const ArmendarizOptions& opt = {});

// Name-addressable properties for filters, hunt expressions and suites.
struct EvalOptions {
  std::uint32_t degree = 2;
};

using PropertyFn =
    std::function<PropertyReport(const FiniteStructure&, const EvalOptions&)>;

const std::map<std::string, PropertyFn>& property_registry();

// Throws input_error for unknown names.
PropertyReport evaluate_property(const FiniteStructure& s,
                                 const std::string& name,
                                 const EvalOptions& opt = {});

}  // namespace zdlab
