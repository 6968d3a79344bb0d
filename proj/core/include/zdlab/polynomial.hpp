#pragma once

#include <functional>
#include <utility>

#include "zdlab/properties.hpp"
#include "zdlab/structure.hpp"

namespace zdlab {

// Coefficient vector, index i = coefficient of X^i.
using Poly = std::vector<ElementId>;

// Exact convolution product over the coefficient semiring; the result keeps
// all positions up to deg f + deg g, nothing is truncated.
Poly poly_mul(const FiniteStructure& s, const Poly& f, const Poly& g);

bool poly_is_zero(const Poly& f);

// Walks every ordered pair (f, g) of degree-<= `degree` polynomials with
// f g = 0, lexicographically by the concatenated coefficient digits.  The
// visitor returns false to stop early.
void for_each_poly_zero_product(
    const FiniteStructure& s, std::uint32_t degree,
    const std::function<bool(const Poly&, const Poly&)>& visit);

std::vector<std::pair<Poly, Poly>> poly_zero_product_pairs(
    const FiniteStructure& s, std::uint32_t degree);

// Does g f = 0 follow from f g = 0 for all degree-<= d pairs?  A clean scan
// cannot speak for higher degrees, so it reports unknown_at_bound with the
// bound recorded; a counterexample reports fails with the coefficient blocks
// of f and g as the witness.
PropertyReport polynomial_bounded_reversible(const FiniteStructure& s,
                                             std::uint32_t degree);

// Coefficient vectors of length `terms` with convolution cut off at X^terms.
// Element ids are the base-|S| value of the digits with a0 least significant,
// so the zero vector is 0 and (1,0,...,0) is 1.
struct PowerSeriesSemiring {
  FiniteStructure structure;
  std::uint32_t terms = 0;
  std::uint32_t scalar_order = 0;
  std::vector<std::vector<ElementId>> coords;  // element -> (a0, ..., a_{k-1})

  ElementId encode(const std::vector<ElementId>& coeffs) const;
};

PowerSeriesSemiring power_series_truncated(const FiniteStructure& s,
                                           std::uint32_t terms);

// Elements shifted by a negative power of X: value X^(-shift) * poly.
struct LaurentElement {
  std::uint32_t shift = 0;
  Poly poly;
};

// Zero products among shifted polynomials reduce to zero products of their
// polynomial parts, because shifts multiply by cancellable powers of X.  The
// verdict therefore coincides with polynomial_bounded_reversible; the scan
// exercises the shifted representation on the way as a cross-check.
PropertyReport laurent_zero_product_check(const FiniteStructure& s,
                                          std::uint32_t degree);

}  // namespace zdlab
