#include "zdlab/polynomial.hpp"

#include <algorithm>

#include "zdlab/validate.hpp"

namespace zdlab {

namespace {

void require_semiring(const FiniteStructure& s) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("polynomial coefficients must come from a semiring");
}

// Candidate count guard for pair scans: |S|^(2(degree+1)).
void require_feasible_scan(const FiniteStructure& s, std::uint32_t degree) {
  long double total = 1;
  for (std::uint32_t i = 0; i < 2 * (degree + 1); ++i)
    total *= static_cast<long double>(s.order);
  if (total > static_cast<long double>(1 << 24))
    throw resource_error(
        "polynomial pair scan too large; lower the degree or the order");
}

bool next_poly(Poly& f, std::uint32_t radix) {
  std::size_t i = f.size();
  while (i-- > 0) {
    if (++f[i] < radix) return true;
    f[i] = 0;
  }
  return false;
}

}  // namespace

Poly poly_mul(const FiniteStructure& s, const Poly& f, const Poly& g) {
  require_semiring(s);
  if (f.empty() || g.empty()) throw input_error("empty coefficient vector");
  Poly c(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      c[i + j] = s.plus(c[i + j], s.times(f[i], g[j]));
  return c;
}

bool poly_is_zero(const Poly& f) {
  return std::all_of(f.begin(), f.end(), [](ElementId a) { return a == 0; });
}

void for_each_poly_zero_product(
    const FiniteStructure& s, std::uint32_t degree,
    const std::function<bool(const Poly&, const Poly&)>& visit) {
  require_semiring(s);
  require_feasible_scan(s, degree);
  const std::size_t len = degree + 1;
  Poly f(len, 0);
  do {
    Poly g(len, 0);
    do {
      if (poly_is_zero(poly_mul(s, f, g)) && !visit(f, g)) return;
    } while (next_poly(g, s.order));
  } while (next_poly(f, s.order));
}

std::vector<std::pair<Poly, Poly>> poly_zero_product_pairs(
    const FiniteStructure& s, std::uint32_t degree) {
  std::vector<std::pair<Poly, Poly>> out;
  for_each_poly_zero_product(s, degree, [&](const Poly& f, const Poly& g) {
    out.emplace_back(f, g);
    return true;
  });
  return out;
}

PropertyReport polynomial_bounded_reversible(const FiniteStructure& s,
                                             std::uint32_t degree) {
  PropertyReport r;
  r.property = "poly_reversible_bounded";
  r.bound = degree;
  r.verdict = Verdict::unknown_at_bound;
  for_each_poly_zero_product(s, degree, [&](const Poly& f, const Poly& g) {
    if (!poly_is_zero(poly_mul(s, g, f))) {
      r.verdict = Verdict::fails;
      r.witness.emplace();
      for (ElementId a : f) r.witness->push_back(a);
      for (ElementId b : g) r.witness->push_back(b);
      return false;
    }
    return true;
  });
  return r;
}

ElementId PowerSeriesSemiring::encode(
    const std::vector<ElementId>& coeffs) const {
  if (coeffs.size() != terms) throw input_error("coefficient count mismatch");
  std::size_t flat = 0, stride = 1;
  for (std::uint32_t i = 0; i < terms; ++i) {
    if (coeffs[i] >= scalar_order) throw input_error("coefficient out of range");
    flat += coeffs[i] * stride;
    stride *= scalar_order;
  }
  return static_cast<ElementId>(flat);
}

PowerSeriesSemiring power_series_truncated(const FiniteStructure& s,
                                           std::uint32_t terms) {
  require_semiring(s);
  if (terms == 0) throw input_error("need at least one coefficient slot");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < terms; ++i) {
    order *= s.order;
    if (order > kMaxTableOrder)
      throw resource_error("truncated series carrier would exceed the cap");
  }
  const std::uint32_t N = static_cast<std::uint32_t>(order);

  PowerSeriesSemiring out;
  out.terms = terms;
  out.scalar_order = s.order;
  out.coords.assign(N, std::vector<ElementId>(terms, 0));
  for (std::uint32_t i = 1; i < N; ++i) {
    out.coords[i] = out.coords[i - 1];
    for (std::uint32_t p = 0; p < terms; ++p) {
      if (++out.coords[i][p] < s.order) break;
      out.coords[i][p] = 0;
    }
  }

  FiniteStructure& r = out.structure;
  r.kind = Kind::semiring;
  r.order = N;
  r.zero = 0;
  r.one = 1;
  r.add = OpTable(N);
  r.mul = OpTable(N);
  std::vector<ElementId> acc(terms);
  for (ElementId i = 0; i < N; ++i)
    for (ElementId j = 0; j < N; ++j) {
      for (std::uint32_t p = 0; p < terms; ++p)
        acc[p] = s.plus(out.coords[i][p], out.coords[j][p]);
      r.add->set(i, j, out.encode(acc));
      std::fill(acc.begin(), acc.end(), 0);
      for (std::uint32_t p = 0; p < terms; ++p)
        for (std::uint32_t q = 0; p + q < terms; ++q)
          acc[p + q] = s.plus(acc[p + q],
                              s.times(out.coords[i][p], out.coords[j][q]));
      r.mul.set(i, j, out.encode(acc));
    }
  r.labels.resize(N);
  for (ElementId i = 0; i < N; ++i) {
    std::string l = "(";
    for (std::uint32_t p = 0; p < terms; ++p) {
      if (p) l += ",";
      l += s.labels.empty() ? std::to_string(out.coords[i][p])
                            : s.labels[out.coords[i][p]];
    }
    r.labels[i] = l + ")";
  }
  r.check_well_formed();
  ValidationReport rep = validate_structure(r);
  if (!rep.valid)
    throw error("truncated series produced an invalid table: " +
                rep.failures[0].axiom);
  return out;
}

PropertyReport laurent_zero_product_check(const FiniteStructure& s,
                                          std::uint32_t degree) {
  PropertyReport base = polynomial_bounded_reversible(s, degree);

  // Exercise the shifted representation: a handful of zero pairs, re-run at
  // every small shift combination.  Shifts add under multiplication and a
  // shifted element vanishes exactly when its polynomial part does, so any
  // disagreement with the plain polynomial scan would be a bug.
  std::size_t sampled = 0;
  for_each_poly_zero_product(s, degree, [&](const Poly& f, const Poly& g) {
    for (std::uint32_t n1 = 0; n1 < 3; ++n1)
      for (std::uint32_t n2 = 0; n2 < 3; ++n2) {
        LaurentElement a{n1, f}, b{n2, g};
        LaurentElement fw{a.shift + b.shift, poly_mul(s, a.poly, b.poly)};
        LaurentElement bw{b.shift + a.shift, poly_mul(s, b.poly, a.poly)};
        if (!poly_is_zero(fw.poly))
          throw error("shifted product of a zero pair is not zero");
        if (poly_is_zero(bw.poly) != poly_is_zero(poly_mul(s, g, f)))
          throw error("shift changed the zero-ness of a product");
      }
    return ++sampled < 64;
  });

  base.property = "laurent_reversible_bounded";
  return base;
}

}  // namespace zdlab
