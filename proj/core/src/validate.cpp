#include "zdlab/validate.hpp"

namespace zdlab {

namespace {

void require_well_formed(const OpTable& t, const char* op) {
  if (t.order() < 2) throw input_error("order must be at least 2");
  if (!t.well_formed())
    throw input_error(std::string("malformed ") + op + " table");
}

struct Collector {
  ValidationReport report;
  void fail(const char* axiom, ElementId a, ElementId b = 0, ElementId c = 0) {
    report.valid = false;
    report.failures.push_back({axiom, {a, b, c}});
  }
};

void check_associative(Collector& col, const OpTable& t, const char* axiom) {
  ElementId n = static_cast<ElementId>(t.order());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (t(t(a, b), c) != t(a, t(b, c))) {
          col.fail(axiom, a, b, c);
          return;
        }
}

void check_commutative(Collector& col, const OpTable& t, const char* axiom) {
  ElementId n = static_cast<ElementId>(t.order());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = static_cast<ElementId>(a + 1); b < n; ++b)
      if (t(a, b) != t(b, a)) {
        col.fail(axiom, a, b);
        return;
      }
}

void check_neutral(Collector& col, const OpTable& t, ElementId e,
                   const char* axiom) {
  ElementId n = static_cast<ElementId>(t.order());
  for (ElementId a = 0; a < n; ++a)
    if (t(e, a) != a || t(a, e) != a) {
      col.fail(axiom, a);
      return;
    }
}

void check_absorbing(Collector& col, const OpTable& t, ElementId z,
                     const char* axiom) {
  ElementId n = static_cast<ElementId>(t.order());
  for (ElementId a = 0; a < n; ++a)
    if (t(z, a) != z || t(a, z) != z) {
      col.fail(axiom, a);
      return;
    }
}

void check_distributive(Collector& col, const OpTable& add, const OpTable& mul,
                        DistributiveSide side) {
  ElementId n = static_cast<ElementId>(mul.order());
  if (side == DistributiveSide::right || side == DistributiveSide::both) {
    // (u + v) w  =  u w + v w
    for (ElementId u = 0; u < n; ++u)
      for (ElementId v = 0; v < n; ++v)
        for (ElementId w = 0; w < n; ++w)
          if (mul(add(u, v), w) != add(mul(u, w), mul(v, w))) {
            col.fail("distributive_right", u, v, w);
            goto left;
          }
  }
left:
  if (side == DistributiveSide::left || side == DistributiveSide::both) {
    // u (v + w)  =  u v + u w
    for (ElementId u = 0; u < n; ++u)
      for (ElementId v = 0; v < n; ++v)
        for (ElementId w = 0; w < n; ++w)
          if (mul(u, add(v, w)) != add(mul(u, v), mul(u, w))) {
            col.fail("distributive_left", u, v, w);
            return;
          }
  }
}

}  // namespace

ValidationReport validate_semigroup_with_zero(const OpTable& mul,
                                              ElementId zero) {
  require_well_formed(mul, "mul");
  if (zero >= mul.order()) throw input_error("zero index out of range");
  Collector col;
  check_associative(col, mul, "mul_associative");
  check_absorbing(col, mul, zero, "zero_absorbing");
  return col.report;
}

ValidationReport validate_monoid_with_zero(const OpTable& mul, ElementId zero,
                                           ElementId one) {
  require_well_formed(mul, "mul");
  if (zero >= mul.order() || one >= mul.order())
    throw input_error("zero/one index out of range");
  Collector col;
  if (one == zero) col.fail("one_distinct_from_zero", one);
  check_associative(col, mul, "mul_associative");
  check_neutral(col, mul, one, "one_identity");
  check_absorbing(col, mul, zero, "zero_absorbing");
  return col.report;
}

ValidationReport validate_pn_semiring(const FiniteStructure& s,
                                      DistributiveSide side) {
  s.check_well_formed();
  if (!s.has_add() || !s.has_one())
    throw input_error("pn-semiring validation needs add and one");
  Collector col;
  check_neutral(col, *s.add, s.zero, "add_neutral");
  check_associative(col, s.mul, "mul_associative");
  check_neutral(col, s.mul, *s.one, "one_identity");
  check_absorbing(col, s.mul, s.zero, "zero_absorbing");
  check_distributive(col, *s.add, s.mul, side);
  return col.report;
}

ValidationReport validate_semiring(const FiniteStructure& s) {
  s.check_well_formed();
  if (!s.has_add() || !s.has_one())
    throw input_error("semiring validation needs add and one");
  Collector col;
  if (*s.one == s.zero) col.fail("one_distinct_from_zero", *s.one);
  check_associative(col, *s.add, "add_associative");
  check_commutative(col, *s.add, "add_commutative");
  check_neutral(col, *s.add, s.zero, "add_neutral");
  check_associative(col, s.mul, "mul_associative");
  check_neutral(col, s.mul, *s.one, "one_identity");
  check_absorbing(col, s.mul, s.zero, "zero_absorbing");
  check_distributive(col, *s.add, s.mul, DistributiveSide::both);
  return col.report;
}

ValidationReport validate_structure(const FiniteStructure& s) {
  switch (s.kind) {
    case Kind::semigroup_with_zero:
      s.check_well_formed();
      return validate_semigroup_with_zero(s.mul, s.zero);
    case Kind::monoid_with_zero:
      s.check_well_formed();
      return validate_monoid_with_zero(s.mul, s.zero, *s.one);
    case Kind::pn_semiring_right:
      return validate_pn_semiring(s, DistributiveSide::right);
    case Kind::pn_semiring_left:
      return validate_pn_semiring(s, DistributiveSide::left);
    case Kind::pn_semiring_distributive:
      return validate_pn_semiring(s, DistributiveSide::both);
    case Kind::semiring:
      return validate_semiring(s);
  }
  throw input_error("unknown kind");
}

}  // namespace zdlab
