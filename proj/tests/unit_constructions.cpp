#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "zdlab/bisemimodule.hpp"
#include "zdlab/constructions.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/polynomial.hpp"
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

}  // namespace

TEST_CASE("direct products multiply componentwise") {
  FiniteStructure b = builtin_structure("b");
  FiniteStructure z2 = builtin_structure("z2");
  FiniteStructure z3 = builtin_structure("z3");

  ProductStructure p = direct_product({b, z2, z3});
  REQUIRE(p.structure.order == 12);
  CHECK(p.structure.kind == Kind::semiring);
  CHECK(validate_structure(p.structure).valid);
  CHECK(p.structure.labels[0] == "(0,0,0)");

  const std::vector<const FiniteStructure*> fs = {&b, &z2, &z3};
  for (ElementId i = 0; i < p.structure.order; ++i) {
    CHECK(p.encode(p.coords[i]) == i);
    for (ElementId j = 0; j < p.structure.order; ++j) {
      std::vector<ElementId> prod(3), sum(3);
      for (std::size_t k = 0; k < 3; ++k) {
        prod[k] = fs[k]->times(p.coords[i][k], p.coords[j][k]);
        sum[k] = fs[k]->plus(p.coords[i][k], p.coords[j][k]);
      }
      CHECK(p.structure.times(i, j) == p.encode(prod));
      CHECK(p.structure.plus(i, j) == p.encode(sum));
    }
  }

  CHECK_THROWS_AS(direct_product({}), input_error);
  CHECK_THROWS_AS(direct_product({b, builtin_structure("z6mul")}),
                  input_error);
  CHECK_THROWS_AS(p.encode({0, 0}), input_error);
  CHECK_THROWS_AS(p.encode({0, 0, 9}), input_error);
}

TEST_CASE("products of multiplicative kinds skip the addition") {
  FiniteStructure a = builtin_structure("z4mul");
  ProductStructure p = direct_product({a, a});
  CHECK(p.structure.kind == Kind::monoid_with_zero);
  CHECK(p.structure.order == 16);
  CHECK(!p.structure.has_add());
  CHECK(validate_structure(p.structure).valid);
}

TEST_CASE("matrix semirings use entrywise sums and the matrix product") {
  FiniteStructure b = builtin_structure("b");
  MatrixSemiring m = matrix_semiring(b, 2);
  REQUIRE(m.structure.order == 16);
  REQUIRE(m.n == 2);
  CHECK(validate_structure(m.structure).valid);

  for (ElementId i = 0; i < m.structure.order; ++i) {
    CHECK(m.encode(m.coords[i]) == i);
    for (ElementId j = 0; j < m.structure.order; ++j) {
      std::vector<ElementId> sum(4), prod(4);
      for (std::uint32_t r = 0; r < 2; ++r)
        for (std::uint32_t c = 0; c < 2; ++c) {
          sum[r * 2 + c] = b.plus(m.coords[i][r * 2 + c],
                                  m.coords[j][r * 2 + c]);
          ElementId acc = 0;
          for (std::uint32_t q = 0; q < 2; ++q)
            acc = b.plus(acc, b.times(m.coords[i][r * 2 + q],
                                      m.coords[j][q * 2 + c]));
          prod[r * 2 + c] = acc;
        }
      CHECK(m.structure.plus(i, j) == m.encode(sum));
      CHECK(m.structure.times(i, j) == m.encode(prod));
    }
  }

  // identity matrix sits at the multiplicative one
  CHECK(m.coords[1] == std::vector<ElementId>{1, 0, 0, 1});

  PropertyReport rev = is_reversible(m.structure);
  CHECK(rev.fails());

  CHECK_THROWS_AS(matrix_semiring(builtin_structure("z6mul"), 2), input_error);
  CHECK_THROWS_AS(matrix_semiring(b, 0), input_error);
  CHECK_THROWS_AS(matrix_semiring(b, 4), resource_error);
  CHECK_THROWS_AS(matrix_semiring(builtin_structure("z6"), 3), resource_error);
}

TEST_CASE("triangular semirings implement the triangle product") {
  FiniteStructure s = builtin_structure("b");
  FiniteStructure t = builtin_structure("n3");

  OpTable add = *s.add;  // join on {0,1}
  // z2 has 1 + 1 = 0, which no action on the join monoid can respect
  CHECK(enumerate_right_actions(builtin_structure("z2"), add).empty());

  std::vector<ActionTable> lefts = enumerate_left_actions(s, add);
  std::vector<ActionTable> rights = enumerate_right_actions(t, add);
  REQUIRE(!lefts.empty());
  REQUIRE(!rights.empty());

  for (const ActionTable& la : lefts)
    for (const ActionTable& ra : rights) {
      Bisemimodule m;
      m.module_order = 2;
      m.module_add = add;
      m.left_action = la;
      m.right_action = ra;
      REQUIRE(validate_bisemimodule(s, m, t).valid);

      TriangularSemiring tri = triangular_semiring(s, m, t);
      REQUIRE(tri.structure.order == 16);
      CHECK(validate_structure(tri.structure).valid);

      for (ElementId i = 0; i < 16; ++i) {
        auto [s1, m1, t1] = std::tuple(tri.coords[i][0], tri.coords[i][1],
                                       tri.coords[i][2]);
        CHECK(tri.encode(s1, m1, t1) == i);
        for (ElementId j = 0; j < 16; ++j) {
          auto [s2, m2, t2] = std::tuple(tri.coords[j][0], tri.coords[j][1],
                                         tri.coords[j][2]);
          ElementId ps = s.times(s1, s2);
          ElementId pm = m.plus(m.act_left(s1, m2), m.act_right(m1, t2));
          ElementId pt = t.times(t1, t2);
          CHECK(tri.structure.times(i, j) == tri.encode(ps, pm, pt));
          CHECK(tri.structure.plus(i, j) ==
                tri.encode(s.plus(s1, s2), m.plus(m1, m2), t.plus(t1, t2)));
        }
      }
    }
}

TEST_CASE("triangular construction rejects broken bisemimodules") {
  FiniteStructure s = builtin_structure("b");
  Bisemimodule m = regular_bisemimodule(s);
  REQUIRE(validate_bisemimodule(s, m, s).valid);
  m.left_action.set(1, 1, 0);  // 1 acting on 1 must give 1
  CHECK_THROWS_AS(triangular_semiring(s, m, s), input_error);
  CHECK_THROWS_AS(triangular_semiring(builtin_structure("z6mul"),
                                      regular_bisemimodule(s), s),
                  input_error);
}

TEST_CASE("expectation semirings pair the carrier with itself") {
  for (const char* name : {"b", "z2", "z6"}) {
    FiniteStructure s = builtin_structure(name);
    ExpectationSemiring e = expectation_semiring(s);
    REQUIRE(e.structure.order == s.order * s.order);
    CHECK(validate_structure(e.structure).valid);

    for (ElementId i = 0; i < e.structure.order; ++i) {
      auto [s1, m1] = std::pair(e.coords[i][0], e.coords[i][1]);
      CHECK(e.encode(s1, m1) == i);
      for (ElementId j = 0; j < e.structure.order; ++j) {
        auto [s2, m2] = std::pair(e.coords[j][0], e.coords[j][1]);
        ElementId want =
            e.encode(s.times(s1, s2),
                     s.plus(s.times(s1, m2), s.times(m1, s2)));
        CHECK(e.structure.times(i, j) == want);
        CHECK(e.structure.plus(i, j) ==
              e.encode(s.plus(s1, s2), s.plus(m1, m2)));
      }
    }

    ExpectationSemiring via_module =
        expectation_semiring(s, regular_bisemimodule(s));
    CHECK(via_module.structure.mul == e.structure.mul);
    CHECK(*via_module.structure.add == *e.structure.add);
  }
}

TEST_CASE("sigma twists reach the left factor only") {
  FiniteStructure z6 = builtin_structure("z6");
  ExpectationSemiring plain = expectation_semiring(z6);
  ExpectationSemiring twisted =
      sigma_expectation(z6, identity_endomorphism(6));
  CHECK(twisted.structure.mul == plain.structure.mul);
  CHECK(*twisted.structure.add == *plain.structure.add);

  // Swapping the two coordinates of b x b is a kernel-trivial automorphism.
  ProductStructure bb =
      direct_product({builtin_structure("b"), builtin_structure("b")});
  Endomorphism swap;
  swap.map.resize(4);
  for (ElementId i = 0; i < 4; ++i)
    swap.map[i] = bb.encode({bb.coords[i][1], bb.coords[i][0]});
  CHECK(kernel_trivial(swap));

  ExpectationSemiring tw = sigma_expectation(bb.structure, swap);
  CHECK(validate_structure(tw.structure).valid);
  for (ElementId i = 0; i < tw.structure.order; ++i) {
    auto [s1, m1] = std::pair(tw.coords[i][0], tw.coords[i][1]);
    for (ElementId j = 0; j < tw.structure.order; ++j) {
      auto [s2, m2] = std::pair(tw.coords[j][0], tw.coords[j][1]);
      ElementId want = tw.encode(
          bb.structure.times(s1, s2),
          bb.structure.plus(bb.structure.times(swap(s1), m2),
                            bb.structure.times(m1, s2)));
      CHECK(tw.structure.times(i, j) == want);
    }
  }
  CHECK(is_eversible(tw.structure).holds());
  CHECK(is_reversible(tw.structure).fails());

  Endomorphism bad;
  bad.map = {0, 1, 2, 3, 4, 0};  // drops additivity: 5 = 2 + 3 maps to 0
  CHECK_THROWS_AS(sigma_expectation(z6, bad), input_error);
  Endomorphism short_map;
  short_map.map = {0, 1};
  CHECK_THROWS_AS(sigma_expectation(z6, short_map), input_error);
}

TEST_CASE("magma endomorphisms match a brute force scan") {
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (const OpTable& add : oracle::all_unital_add_tables(n)) {
      std::vector<Endomorphism> got = magma_endomorphisms(add);

      std::vector<Endomorphism> want;
      std::vector<ElementId> img(n, 0);
      bool more = true;
      while (more) {
        bool ok = img[0] == 0;
        for (ElementId x = 0; x < n && ok; ++x)
          for (ElementId y = 0; y < n && ok; ++y)
            ok = img[add(x, y)] == add(img[x], img[y]);
        if (ok) want.push_back({img});
        more = false;
        for (std::size_t i = n; i-- > 0;) {
          if (++img[i] < n) {
            more = true;
            break;
          }
          img[i] = 0;
        }
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("semiring endomorphisms preserve every operation") {
  for (const FiniteStructure& s : corpus(Kind::semiring, 2, 3)) {
    std::vector<Endomorphism> got = semiring_endomorphisms(s);
    std::uint32_t n = s.order;
    std::vector<Endomorphism> want;
    std::vector<ElementId> img(n, 0);
    bool more = true;
    while (more) {
      bool ok = img[0] == 0 && img[1] == 1;
      for (ElementId x = 0; x < n && ok; ++x)
        for (ElementId y = 0; y < n && ok; ++y)
          ok = img[s.plus(x, y)] == s.plus(img[x], img[y]) &&
               img[s.times(x, y)] == s.times(img[x], img[y]);
      if (ok) want.push_back({img});
      more = false;
      for (std::size_t i = n; i-- > 0;) {
        if (++img[i] < n) {
          more = true;
          break;
        }
        img[i] = 0;
      }
    }
    CHECK(got == want);
    for (const Endomorphism& f : got) {
      bool trivial = true;
      for (ElementId x = 1; x < n; ++x) trivial = trivial && f(x) != 0;
      CHECK(kernel_trivial(f) == trivial);
    }
  }
  CHECK(semiring_endomorphisms(builtin_structure("z6")).size() == 1);
}

TEST_CASE("endomorphism carriers close exactly when sums stay additive") {
  int closed_2 = 0, open_2 = 0, closed_3 = 0, open_3 = 0;
  for (std::uint32_t n = 2; n <= 3; ++n) {
    for (const OpTable& add : oracle::all_unital_add_tables(n)) {
      EndoPnResult r = endomorphism_pn_semiring(add);
      if (r.closed()) {
        (n == 2 ? closed_2 : closed_3)++;
        const FiniteStructure& e = *r.structure;
        REQUIRE(e.order == r.maps.size());
        CHECK(e.kind == Kind::pn_semiring_right);
        CHECK(validate_structure(e).valid);
        // element 0 is the zero map, element 1 the identity
        CHECK(r.maps[0].map == std::vector<ElementId>(n, 0));
        CHECK(r.maps[1].map == identity_endomorphism(n).map);
        for (ElementId i = 0; i < e.order; ++i)
          for (ElementId j = 0; j < e.order; ++j)
            for (ElementId x = 0; x < n; ++x) {
              CHECK(r.maps[e.times(i, j)].map[x] ==
                    r.maps[i].map[r.maps[j].map[x]]);
              CHECK(r.maps[e.plus(i, j)].map[x] ==
                    add(r.maps[i].map[x], r.maps[j].map[x]));
            }
      } else {
        (n == 2 ? open_2 : open_3)++;
        REQUIRE(r.failure.has_value());
        const EndoClosureFailure& f = *r.failure;
        CHECK(std::count(r.maps.begin(), r.maps.end(), f.f) == 1);
        CHECK(std::count(r.maps.begin(), r.maps.end(), f.g) == 1);
        std::vector<ElementId> h(n);
        for (ElementId x = 0; x < n; ++x)
          h[x] = add(f.f.map[x], f.g.map[x]);
        CHECK(h[add(f.x, f.y)] != add(h[f.x], h[f.y]));
      }
    }
  }
  CHECK(closed_2 == 2);
  CHECK(open_2 == 0);
  CHECK(closed_3 == 31);
  CHECK(open_3 == 50);

  EndoPnResult n3 = endomorphism_pn_semiring(builtin_structure("n3"));
  REQUIRE(n3.closed());
  CHECK(n3.structure->order == 4);
  CHECK_THROWS_AS(endomorphism_pn_semiring(builtin_structure("z6mul")),
                  input_error);
}

TEST_CASE("fractions identify pairs by the cross relation") {
  FiniteStructure z6 = builtin_structure("z6");

  // Inverting the units changes nothing up to isomorphism.
  Localization loc = localize(z6, {1, 5});
  REQUIRE(loc.structure.order == 6);
  CHECK(validate_structure(loc.structure).valid);
  CHECK(oracle::isomorphic(loc.structure, z6));
  std::set<ElementId> image(loc.canonical.begin(), loc.canonical.end());
  CHECK(image.size() == 6);

  // Trivial denominator set gives the structure back unchanged.
  Localization triv = localize(z6, {1});
  CHECK(triv.structure.mul == z6.mul);
  CHECK(*triv.structure.add == *z6.add);
  for (ElementId x = 0; x < 6; ++x) CHECK(triv.canonical[x] == x);

  // Representatives come from the first pair seen, which has denominator 1,
  // so each class is the canonical image of its representative numerator.
  for (ElementId c = 0; c < loc.structure.order; ++c) {
    auto [u, x] = loc.reps[c];
    CHECK(u == 1);
    CHECK(loc.canonical[x] == c);
  }

  CHECK_THROWS_AS(localize(z6, {5}), input_error);         // missing 1
  CHECK_THROWS_AS(localize(z6, {1, 0}), input_error);      // 0 not cancellable
  CHECK_THROWS_AS(localize(z6, {1, 2}), input_error);      // 2*0 = 2*3
  CHECK_THROWS_AS(localize(builtin_structure("z6mul"), {1}), input_error);
}

TEST_CASE("ore sets are exactly the admissible denominator sets") {
  std::vector<FiniteStructure> pool = corpus(Kind::semiring, 2, 3);
  pool.push_back(builtin_structure("z6"));
  for (const FiniteStructure& s : pool) {
    std::vector<std::vector<ElementId>> got = ore_sets(s);

    std::vector<std::vector<ElementId>> want;
    std::uint32_t n = s.order;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      if (!(mask >> 1 & 1)) continue;  // must contain 1
      std::vector<ElementId> set;
      for (ElementId u = 0; u < n; ++u)
        if (mask >> u & 1) set.push_back(u);
      bool ok = true;
      for (ElementId u : set) {
        std::set<ElementId> images;
        for (ElementId x = 0; x < n && ok; ++x) {
          if (s.times(u, x) != s.times(x, u)) ok = false;
          images.insert(s.times(u, x));
        }
        if (images.size() != n) ok = false;
        for (ElementId v : set)
          if (!std::binary_search(set.begin(), set.end(), s.times(u, v)))
            ok = false;
        if (!ok) break;
      }
      if (ok) want.push_back(set);
    }
    CHECK(got == want);
    for (const std::vector<ElementId>& o : got)
      CHECK(validate_structure(localize(s, o).structure).valid);
  }
}

TEST_CASE("polynomial products convolve over the coefficient semiring") {
  FiniteStructure z6 = builtin_structure("z6");
  Poly f = {1, 2, 3}, g = {4, 5};
  Poly fg = poly_mul(z6, f, g);
  REQUIRE(fg.size() == 4);
  // (1 + 2x + 3x^2)(4 + 5x) over Z/6
  CHECK(fg == Poly{4, 1, 4, 3});
  CHECK(poly_is_zero(poly_mul(z6, {0, 0}, f)));
  CHECK(!poly_is_zero(fg));

  // over b: f g = 0 forces f = 0 or g = 0, so the degree-1 pair count is
  // 4 + 4 - 1 ordered pairs sharing the zero polynomial
  auto pairs = poly_zero_product_pairs(builtin_structure("b"), 1);
  CHECK(pairs.size() == 7);
  for (auto& [p, q] : pairs)
    CHECK(poly_is_zero(poly_mul(builtin_structure("b"), p, q)));
}

TEST_CASE("bounded polynomial reversibility cannot overclaim") {
  for (const FiniteStructure& s : corpus(Kind::semiring, 2, 3)) {
    PropertyReport rep = polynomial_bounded_reversible(s, 1);
    // a clean scan reports the bound instead of claiming the property
    if (!rep.fails()) {
      CHECK(rep.verdict == Verdict::unknown_at_bound);
      REQUIRE(rep.bound.has_value());
      CHECK(*rep.bound == 1);
    } else {
      auto& w = *rep.witness;
      REQUIRE(w.size() == 4);
      Poly f = {ElementId(w[0]), ElementId(w[1])};
      Poly g = {ElementId(w[2]), ElementId(w[3])};
      CHECK(poly_is_zero(poly_mul(s, f, g)));
      CHECK(!poly_is_zero(poly_mul(s, g, f)));
    }
    PropertyReport lau = laurent_zero_product_check(s, 1);
    CHECK(lau.verdict == rep.verdict);
  }
}

TEST_CASE("truncated power series multiply modulo the cutoff") {
  FiniteStructure z2 = builtin_structure("z2");
  PowerSeriesSemiring ps = power_series_truncated(z2, 3);
  REQUIRE(ps.structure.order == 8);
  CHECK(validate_structure(ps.structure).valid);
  CHECK(ps.coords[0] == std::vector<ElementId>{0, 0, 0});
  CHECK(ps.coords[1] == std::vector<ElementId>{1, 0, 0});

  for (ElementId i = 0; i < 8; ++i) {
    CHECK(ps.encode(ps.coords[i]) == i);
    for (ElementId j = 0; j < 8; ++j) {
      std::vector<ElementId> conv(3, 0);
      for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t c = 0; a + c < 3; ++c)
          conv[a + c] = z2.plus(conv[a + c],
                                z2.times(ps.coords[i][a], ps.coords[j][c]));
      CHECK(ps.structure.times(i, j) == ps.encode(conv));
      std::vector<ElementId> sum(3);
      for (std::uint32_t a = 0; a < 3; ++a)
        sum[a] = z2.plus(ps.coords[i][a], ps.coords[j][a]);
      CHECK(ps.structure.plus(i, j) == ps.encode(sum));
    }
  }

  CHECK_THROWS_AS(power_series_truncated(builtin_structure("z6"), 5),
                  resource_error);
  CHECK_THROWS_AS(power_series_truncated(builtin_structure("z6mul"), 2),
                  input_error);
}
