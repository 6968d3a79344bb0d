#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/properties.hpp"
#include "zdlab/validate.hpp"

using namespace zdlab;

namespace {

std::vector<FiniteStructure> corpus(Kind kind, std::uint32_t lo,
                                    std::uint32_t hi) {
  std::vector<FiniteStructure> out;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    EnumerationSpec spec;
    spec.kind = kind;
    spec.order = n;
    for (FiniteStructure& s : enumerate_structures(spec))
      out.push_back(std::move(s));
  }
  return out;
}

std::vector<ElementId> to_vec(const std::set<ElementId>& s) {
  return {s.begin(), s.end()};
}

// {0,a,s,x} with aa = 0, as = a, sa = x, ss = s, sx = x, xs = x and every
// other product zero.  Reversible, but the right closure {0,a} of a is not a
// left ideal: s a = x escapes.
FiniteStructure strict_triangle() {
  FiniteStructure s;
  s.kind = Kind::semigroup_with_zero;
  s.order = 4;
  s.labels = {"0", "a", "s", "x"};
  s.mul = OpTable::from_rows({{0, 0, 0, 0},  //
                              {0, 0, 1, 0},
                              {0, 3, 2, 3},
                              {0, 0, 3, 0}});
  return s;
}

}  // namespace

TEST_CASE("zero divisor sets match a direct sweep") {
  for (const FiniteStructure& s : corpus(Kind::semigroup_with_zero, 2, 3)) {
    ZeroDivisorSets z = zero_divisor_sets(s);
    CHECK(z.left == to_vec(oracle::left_zds(s)));
    CHECK(z.right == to_vec(oracle::right_zds(s)));
    std::set<ElementId> right = oracle::right_zds(s);
    std::set<ElementId> both = oracle::left_zds(s);
    both.insert(right.begin(), right.end());
    CHECK(z.all == to_vec(both));
    both.erase(0);
    CHECK(z.proper == to_vec(both));
  }
}

TEST_CASE("multiplicative properties agree with direct sweeps") {
  std::vector<FiniteStructure> pool = corpus(Kind::semigroup_with_zero, 2, 4);
  for (const FiniteStructure& s : corpus(Kind::monoid_with_zero, 2, 4))
    pool.push_back(s);
  REQUIRE(pool.size() == 464 + 29);

  for (const FiniteStructure& s : pool) {
    PropertyReport rev = is_reversible(s);
    CHECK(rev.holds() == oracle::reversible(s));
    if (rev.fails()) {
      auto& w = *rev.witness;
      REQUIRE(w.size() == 2);
      CHECK(s.times(ElementId(w[0]), ElementId(w[1])) == 0);
      CHECK(s.times(ElementId(w[1]), ElementId(w[0])) != 0);
    }

    CHECK(is_eversible(s).holds() == oracle::eversible(s));

    PropertyReport ent = is_entire(s);
    CHECK(ent.holds() == oracle::entire(s));
    if (ent.fails()) {
      auto& w = *ent.witness;
      CHECK(w[0] != 0);
      CHECK(w[1] != 0);
      CHECK(s.times(ElementId(w[0]), ElementId(w[1])) == 0);
    }

    CHECK(is_prime(s).holds() == oracle::prime(s));
    CHECK(is_semiprime(s).holds() == oracle::semiprime(s));

    PropertyReport nf = is_nilpotent_free(s);
    CHECK(nf.holds() == oracle::nilpotent_free(s));
    if (nf.fails()) {
      ElementId a = ElementId((*nf.witness)[0]);
      CHECK(a != 0);
      CHECK(s.times(a, a) == 0);
    }

    PropertyReport sym = is_symmetric(s);
    CHECK(sym.holds() == oracle::symmetric(s));
    if (sym.fails()) {
      auto& w = *sym.witness;
      ElementId r = ElementId(w[0]), t = ElementId(w[1]), u = ElementId(w[2]);
      CHECK(s.times(s.times(r, t), u) == 0);
      CHECK(s.times(s.times(t, r), u) != 0);
    }
  }
}

TEST_CASE("additive properties agree with direct sweeps") {
  std::vector<FiniteStructure> pool = corpus(Kind::semiring, 2, 4);
  for (const FiniteStructure& s :
       corpus(Kind::pn_semiring_distributive, 2, 3))
    pool.push_back(s);

  for (const FiniteStructure& s : pool) {
    PropertyReport zsf = is_zerosumfree(s);
    CHECK(zsf.holds() == oracle::zerosumfree(s));
    if (zsf.fails()) {
      auto& w = *zsf.witness;
      CHECK(s.plus(ElementId(w[0]), ElementId(w[1])) == 0);
      CHECK((w[0] != 0 || w[1] != 0));
    }
  }
  CHECK_THROWS_AS(is_zerosumfree(builtin_structure("z6mul")), input_error);
}

TEST_CASE("nilpotent elements carry their minimal vanishing exponent") {
  std::vector<FiniteStructure> pool = corpus(Kind::semigroup_with_zero, 2, 3);
  pool.push_back(builtin_structure("z4mul"));
  pool.push_back(builtin_structure("z6mul"));
  pool.push_back(strict_triangle());

  for (const FiniteStructure& s : pool) {
    auto nils = nilpotent_elements(s);
    std::set<ElementId> seen;
    for (auto [a, k] : nils) {
      seen.insert(a);
      auto expect = oracle::nil_index(s, a);
      REQUIRE(expect.has_value());
      CHECK(k == *expect);
    }
    for (ElementId a = 0; a < s.order; ++a)
      CHECK(seen.count(a) == oracle::nil_index(s, a).has_value());
  }
}

TEST_CASE("annihilators match a direct sweep") {
  for (const FiniteStructure& s : corpus(Kind::semigroup_with_zero, 2, 3)) {
    for (ElementId e = 0; e < s.order; ++e) {
      Annihilators ann = annihilators(s, e);
      std::vector<ElementId> left, right;
      for (ElementId x = 0; x < s.order; ++x) {
        if (s.times(x, e) == 0) left.push_back(x);
        if (s.times(e, x) == 0) right.push_back(x);
      }
      CHECK(ann.left == left);
      CHECK(ann.right == right);
    }
    CHECK_THROWS_AS(annihilators(s, ElementId(s.order)), input_error);
  }
}

TEST_CASE("ideal closure is the least closed superset") {
  std::vector<FiniteStructure> pool = {builtin_structure("z4mul"),
                                       builtin_structure("z6mul"),
                                       builtin_structure("z6"),
                                       strict_triangle()};
  for (const FiniteStructure& s : pool) {
    for (ElementId g = 0; g < s.order; ++g) {
      for (Sidedness side :
           {Sidedness::left, Sidedness::right, Sidedness::two_sided}) {
        IdealDescriptor ideal = ideal_closure(s, {g}, side);

        // Naive fixpoint with the same absorption rules.
        std::set<ElementId> naive = {g};
        bool grew = true;
        while (grew) {
          grew = false;
          std::set<ElementId> next = naive;
          for (ElementId x : naive) {
            for (ElementId t = 0; t < s.order; ++t) {
              if (side != Sidedness::left) next.insert(s.times(x, t));
              if (side != Sidedness::right) next.insert(s.times(t, x));
            }
            if (s.has_add())
              for (ElementId y : naive) next.insert(s.plus(x, y));
          }
          if (next != naive) {
            naive = std::move(next);
            grew = true;
          }
        }
        CHECK(ideal.closure == to_vec(naive));
        CHECK(ideal.generators == std::vector<ElementId>{g});
        CHECK(ideal.sidedness == side);
      }
    }
  }
  CHECK_THROWS_AS(ideal_closure(pool[0], {}, Sidedness::left), input_error);
  CHECK_THROWS_AS(ideal_closure(pool[0], {9}, Sidedness::left), input_error);
}

TEST_CASE("nil ideal check rejects unclosed sets and spots nilpotency") {
  FiniteStructure z4 = builtin_structure("z4mul");
  IdealDescriptor nil = ideal_closure(z4, {2}, Sidedness::two_sided);
  CHECK(nil.closure == std::vector<ElementId>{0, 2});
  CHECK(is_nil_ideal(z4, nil).holds());

  IdealDescriptor full = ideal_closure(z4, {1}, Sidedness::two_sided);
  PropertyReport r = is_nil_ideal(z4, full);
  CHECK(r.fails());
  CHECK(oracle::nil_index(z4, ElementId((*r.witness)[0])) == std::nullopt);

  IdealDescriptor broken = nil;
  broken.closure = {2};  // drops zero, so 2 * 2 escapes
  CHECK_THROWS_AS(is_nil_ideal(z4, broken), closure_error);
}

TEST_CASE("reversibility consequences fail on the strict triangle") {
  FiniteStructure s = strict_triangle();
  REQUIRE(validate_structure(s).valid);
  REQUIRE(oracle::reversible(s));

  CohnReport rep = verify_cohn(s);
  CHECK(rep.overall.fails());
  REQUIRE(rep.checks.size() == 4);
  for (const PropertyReport& c : rep.checks) {
    if (c.property == "cohn.right_closure_is_left_ideal") {
      CHECK(c.fails());
      // witness: nilpotent generator, left multiplier, escaping element
      auto& w = *c.witness;
      REQUIRE(w.size() == 3);
      IdealDescriptor rc =
          ideal_closure(s, {ElementId(w[0])}, Sidedness::right);
      ElementId prod = s.times(ElementId(w[1]), ElementId(w[2]));
      CHECK(!std::binary_search(rc.closure.begin(), rc.closure.end(), prod));
    } else {
      CHECK(c.holds());
    }
  }
}

TEST_CASE("reversibility consequences hold on reversible builtins") {
  for (const char* name : {"b", "z2", "z4mul", "z6mul"}) {
    FiniteStructure s = builtin_structure(name);
    REQUIRE(is_reversible(s).holds());
    CohnReport rep = verify_cohn(s);
    CHECK(rep.overall.holds());
    std::size_t expect = s.kind == Kind::semiring ? 7 : 4;
    CHECK(rep.checks.size() == expect);
    for (const PropertyReport& c : rep.checks) CHECK(c.holds());
  }
}

TEST_CASE("reversibility consequences are vacuous otherwise") {
  // First non-reversible semigroup of order 3.
  std::optional<FiniteStructure> found;
  EnumerationSpec spec;
  spec.kind = Kind::semigroup_with_zero;
  spec.order = 3;
  for_each_structure(spec, [&](const FiniteStructure& s) {
    if (!oracle::reversible(s)) {
      found = s;
      return false;
    }
    return true;
  });
  REQUIRE(found.has_value());
  CohnReport rep = verify_cohn(*found);
  CHECK(rep.overall.holds());
  CHECK(rep.checks.empty());
}

TEST_CASE("zero product pair criterion matches a direct sweep") {
  std::vector<FiniteStructure> pool =
      corpus(Kind::pn_semiring_distributive, 2, 3);
  for (const FiniteStructure& s : corpus(Kind::semiring, 2, 3))
    pool.push_back(s);

  auto pair_ok = [](const FiniteStructure& s, ElementId a, ElementId b) {
    for (ElementId c = 1; c < s.order; ++c) {
      ElementId bc = s.times(b, c), ca = s.times(c, a);
      if (bc == 0 && ca == 0) return true;
      if (bc != 0 && ca != 0 && s.times(s.times(b, c), a) == 0) return true;
    }
    return false;
  };

  for (const FiniteStructure& s : pool) {
    Condition2Report rep = eversible_condition2(s);
    bool restricted = true, literal = true;
    for (ElementId a = 0; a < s.order; ++a)
      for (ElementId b = 0; b < s.order; ++b)
        if (s.times(a, b) == 0 && !pair_ok(s, a, b)) {
          literal = false;
          if (a != 0 && b != 0) restricted = false;
        }
    CHECK(rep.restricted.holds() == restricted);
    CHECK(rep.literal.holds() == literal);
    if (rep.restricted.fails()) {
      auto& w = *rep.restricted.witness;
      CHECK(s.times(ElementId(w[0]), ElementId(w[1])) == 0);
      CHECK(!pair_ok(s, ElementId(w[0]), ElementId(w[1])));
    }
  }

  CHECK_THROWS_AS(eversible_condition2(builtin_structure("z6mul")),
                  input_error);
}

TEST_CASE("degree one armendariz agrees with direct convolution") {
  for (const FiniteStructure& s : corpus(Kind::semiring, 2, 3)) {
    bool expect = true;
    std::uint32_t n = s.order;
    for (ElementId f0 = 0; f0 < n && expect; ++f0)
      for (ElementId f1 = 0; f1 < n && expect; ++f1)
        for (ElementId g0 = 0; g0 < n && expect; ++g0)
          for (ElementId g1 = 0; g1 < n && expect; ++g1) {
            if (s.times(f0, g0) != 0) continue;
            if (s.plus(s.times(f0, g1), s.times(f1, g0)) != 0) continue;
            if (s.times(f1, g1) != 0) continue;
            expect = s.times(f0, g1) == 0 && s.times(f1, g0) == 0;
          }
    ArmendarizOptions opt;
    opt.degree = 1;
    PropertyReport rep = is_armendariz_bounded(s, opt);
    CHECK(rep.holds() == expect);
    if (rep.fails()) {
      auto& w = *rep.witness;
      REQUIRE(w.size() == 6);
      std::uint32_t i = std::uint32_t(w[4]), j = std::uint32_t(w[5]);
      CHECK(s.times(ElementId(w[i]), ElementId(w[2 + j])) != 0);
    }
  }
  CHECK_THROWS_AS(is_armendariz_bounded(builtin_structure("z6mul"), {}),
                  input_error);
}

TEST_CASE("armendariz sampling reports an inconclusive bound") {
  FiniteStructure b = builtin_structure("b");
  ArmendarizOptions opt;
  opt.degree = 15;  // 2^32 pairs, past the exact cap
  CHECK_THROWS_AS(is_armendariz_bounded(b, opt), resource_error);

  opt.allow_sampling = true;
  opt.samples = 64;
  opt.seed = 7;
  PropertyReport rep = is_armendariz_bounded(b, opt);
  // Boolean semiring is armendariz at any degree, so sampling never finds a
  // witness and must say so honestly.
  CHECK(rep.verdict == Verdict::unknown_at_bound);
  REQUIRE(rep.bound.has_value());
  CHECK(*rep.bound == 64);
}

TEST_CASE("property registry evaluates every named property") {
  const auto& reg = property_registry();
  for (const char* name :
       {"reversible", "eversible", "entire", "prime", "semiprime",
        "nilpotent_free", "nilpotent-free", "symmetric", "zerosumfree",
        "commutative", "armendariz"})
    CHECK(reg.count(name) == 1);

  FiniteStructure z6 = builtin_structure("z6");
  CHECK(evaluate_property(z6, "commutative").holds());
  CHECK(evaluate_property(z6, "nilpotent_free").holds() ==
        evaluate_property(z6, "nilpotent-free").holds());
  CHECK_THROWS_AS(evaluate_property(z6, "no_such_property"), input_error);

  // degree option reaches the armendariz check
  EvalOptions opt;
  opt.degree = 1;
  CHECK(evaluate_property(z6, "armendariz", opt).holds());
}

TEST_CASE("commutativity check matches the table") {
  for (const FiniteStructure& s : corpus(Kind::semigroup_with_zero, 2, 3)) {
    bool expect = true;
    for (ElementId a = 0; a < s.order && expect; ++a)
      for (ElementId b = 0; b < s.order && expect; ++b)
        expect = s.times(a, b) == s.times(b, a);
    CHECK(evaluate_property(s, "commutative").holds() == expect);
  }
}

TEST_CASE("property reports serialize with a fixed shape") {
  FiniteStructure z4 = builtin_structure("z4mul");
  nlohmann::json ok = to_json(is_reversible(z4));
  CHECK(ok["property"] == "reversible");
  CHECK(ok["verdict"] == "holds");
  CHECK(ok["witness"].is_null());
  CHECK(ok["bound"].is_null());

  nlohmann::json bad = to_json(is_nilpotent_free(z4));
  CHECK(bad["verdict"] == "fails");
  REQUIRE(bad["witness"].is_array());
  CHECK(bad["witness"][0] == 2);
}
