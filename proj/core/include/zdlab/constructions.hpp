#pragma once

#include <array>
#include <optional>
#include <utility>

#include "zdlab/bisemimodule.hpp"
#include "zdlab/structure.hpp"

namespace zdlab {

// A self-map of a carrier, stored as its image table.
struct Endomorphism {
  std::vector<ElementId> map;

  ElementId operator()(ElementId x) const { return map[x]; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(map.size()); }

  friend auto operator<=>(const Endomorphism&, const Endomorphism&) = default;
};

Endomorphism identity_endomorphism(std::uint32_t order);

// All maps f with f(0) = 0 and f(x + y) = f(x) + f(y) for the given operation
// (which must have 0 as two-sided neutral).  Lexicographic by image table.
std::vector<Endomorphism> magma_endomorphisms(const OpTable& add);

// All maps preserving +, *, 0 and 1 of a structure that carries all four.
std::vector<Endomorphism> semiring_endomorphisms(const FiniteStructure& s);

// True when only 0 is sent to 0.
bool kernel_trivial(const Endomorphism& f);

// ---------------------------------------------------------------------------
// Composite carriers.  Every constructor renumbers its output into the usual
// normal form (zero at 0, one at 1 when present), so the result structs keep
// a coordinate chart: coords[id] lists the components of element id, and
// encode() goes the other way.
// ---------------------------------------------------------------------------

struct ProductStructure {
  FiniteStructure structure;
  std::vector<std::vector<ElementId>> coords;
  std::vector<ElementId> flat_to_id;
  std::vector<std::uint32_t> radices;

  ElementId encode(const std::vector<ElementId>& parts) const;
};

// Componentwise product of structures that all share one kind.
ProductStructure direct_product(const std::vector<FiniteStructure>& factors);

struct MatrixSemiring {
  FiniteStructure structure;
  std::uint32_t n = 0;
  std::uint32_t scalar_order = 0;
  std::vector<std::vector<ElementId>> coords;  // row-major matrix entries
  std::vector<ElementId> flat_to_id;

  ElementId encode(const std::vector<ElementId>& entries) const;
};

// n-by-n matrices over a semiring: entrywise sum, usual matrix product.
MatrixSemiring matrix_semiring(const FiniteStructure& s, std::uint32_t n);

struct TriangularSemiring {
  FiniteStructure structure;
  std::uint32_t module_order = 0;
  std::uint32_t right_order = 0;
  std::vector<std::array<ElementId, 3>> coords;  // element -> (s, m, t)
  std::vector<ElementId> flat_to_id;

  ElementId encode(ElementId s, ElementId m, ElementId t) const;
};

// Triples (s, m, t) with componentwise sum and the product
// (s1, m1, t1)(s2, m2, t2) = (s1 s2, s1 m2 + m1 t2, t1 t2).
// The bisemimodule axioms are validated first; a failure is reported as an
// input error naming the broken axiom and a witness.
TriangularSemiring triangular_semiring(const FiniteStructure& s,
                                       const Bisemimodule& m,
                                       const FiniteStructure& t);

struct ExpectationSemiring {
  FiniteStructure structure;
  std::uint32_t module_order = 0;
  std::vector<std::array<ElementId, 2>> coords;  // element -> (s, m)
  std::vector<ElementId> flat_to_id;

  ElementId encode(ElementId s, ElementId m) const;
};

// Pairs (s, m) with componentwise sum and product (s1 s2, s1 m2 + m1 s2),
// where M is a bisemimodule with S acting on both sides.
ExpectationSemiring expectation_semiring(const FiniteStructure& s,
                                         const Bisemimodule& m);
// Convenience: M = S with both actions given by multiplication.
ExpectationSemiring expectation_semiring(const FiniteStructure& s);

// Pairs over a commutative semiring with the left factor twisted by an
// endomorphism: product (s1 s2, sigma(s1) m2 + m1 s2).
ExpectationSemiring sigma_expectation(const FiniteStructure& s,
                                      const Endomorphism& sigma);

// ---------------------------------------------------------------------------
// Zero-fixing additive self-maps under pointwise + and composition.
// ---------------------------------------------------------------------------

// The pointwise sum f + g stopped being additive: it breaks at (x, y).
struct EndoClosureFailure {
  Endomorphism f, g;
  ElementId x = 0, y = 0;
};

struct EndoPnResult {
  std::vector<Endomorphism> maps;  // element i of the structure is maps[i]
  std::optional<FiniteStructure> structure;
  std::optional<EndoClosureFailure> failure;

  bool closed() const { return structure.has_value(); }
};

// Collects every f with f(0) = 0 and f(x+y) = f(x)+f(y) over a unital magma
// (0 two-sided neutral).  If the set is closed under pointwise +, returns the
// structure with pointwise sum, composition product, the zero map at 0 and
// the identity map at 1; otherwise reports the first pair whose sum escapes.
EndoPnResult endomorphism_pn_semiring(const OpTable& add);
// Same, reading the additive table off a structure that has one.
EndoPnResult endomorphism_pn_semiring(const FiniteStructure& s);

// ---------------------------------------------------------------------------
// Fractions.
// ---------------------------------------------------------------------------

struct Localization {
  FiniteStructure structure;
  std::vector<ElementId> canonical;                  // s -> class of s/1
  std::vector<std::pair<ElementId, ElementId>> reps;  // class -> least (u, s)
};

// Classes of pairs (u, s) with u from `denominators` under the relation
// (u1, s1) ~ (u2, s2) iff s1 u2 = s2 u1, with
//   (u1, s1) + (u2, s2) = (u1 u2, s1 u2 + s2 u1)
//   (u1, s1) * (u2, s2) = (u1 u2, s1 s2).
// Denominators must contain 1, be closed under *, and consist of central
// cancellable elements; violations surface as input errors with a witness.
Localization localize(const FiniteStructure& s,
                      const std::vector<ElementId>& denominators);

// Every admissible denominator set of s, ascending by carrier bitmask.
std::vector<std::vector<ElementId>> ore_sets(const FiniteStructure& s);

}  // namespace zdlab
