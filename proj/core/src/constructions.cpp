#include "zdlab/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "zdlab/io.hpp"
#include "zdlab/validate.hpp"

namespace zdlab {

namespace {

std::string label_of(const FiniteStructure& s, ElementId i) {
  return s.labels.empty() ? std::to_string(i) : s.labels[i];
}

void assert_valid(const FiniteStructure& s, const char* what) {
  ValidationReport rep = validate_structure(s);
  if (!rep.valid)
    throw error(std::string(what) + " produced an invalid table: " +
                (rep.failures.empty() ? "unknown axiom" : rep.failures[0].axiom));
}

// Renumber a freshly built flat-indexed carrier into normal form and hand the
// permutation back so coordinate charts can follow it.
std::vector<ElementId> finish(FiniteStructure& raw, ElementId zero_flat,
                              std::optional<ElementId> one_flat) {
  auto perm = normalizing_permutation(raw.order, zero_flat, one_flat);
  raw.zero = zero_flat;
  raw.one = one_flat;
  raw = relabel(raw, perm);
  return perm;
}

std::uint64_t checked_product_order(std::uint64_t a, std::uint64_t b) {
  std::uint64_t p = a * b;
  if (a != 0 && (p / a != b || p > kMaxTableOrder))
    throw resource_error("construction output would exceed the table cap");
  return p;
}

}  // namespace

Endomorphism identity_endomorphism(std::uint32_t order) {
  Endomorphism f;
  f.map.resize(order);
  for (std::uint32_t i = 0; i < order; ++i)
    f.map[i] = static_cast<ElementId>(i);
  return f;
}

std::vector<Endomorphism> magma_endomorphisms(const OpTable& add) {
  const std::uint32_t n = add.order();
  if (n < 1 || !add.well_formed()) throw input_error("malformed table");
  for (ElementId x = 0; x < n; ++x)
    if (add(0, x) != x || add(x, 0) != x)
      throw input_error("0 must be a two-sided neutral for the operation");
  if (n > 7) throw resource_error("endomorphism search capped at order 7");

  std::vector<Endomorphism> out;
  std::vector<ElementId> img(n, 0);  // img[0] stays 0
  for (;;) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (img[add(x, y)] != add(img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok) out.push_back({img});
    std::uint32_t i = n;
    while (--i > 0) {
      if (++img[i] < n) break;
      img[i] = 0;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<Endomorphism> semiring_endomorphisms(const FiniteStructure& s) {
  s.check_well_formed();
  if (!s.has_add() || !s.has_one())
    throw input_error("endomorphism search needs both + and 1");
  const std::uint32_t n = s.order;
  if (n > 8) throw resource_error("endomorphism search capped at order 8");

  std::vector<Endomorphism> out;
  std::vector<ElementId> img(n, 0);
  img[1] = 1;
  for (;;) {
    bool ok = true;
    for (ElementId x = 0; x < n && ok; ++x)
      for (ElementId y = 0; y < n; ++y)
        if (img[s.plus(x, y)] != s.plus(img[x], img[y]) ||
            img[s.times(x, y)] != s.times(img[x], img[y])) {
          ok = false;
          break;
        }
    if (ok) out.push_back({img});
    std::uint32_t i = n;
    while (--i > 1) {
      if (++img[i] < n) break;
      img[i] = 0;
    }
    if (i <= 1) break;
  }
  return out;
}

bool kernel_trivial(const Endomorphism& f) {
  for (std::size_t x = 1; x < f.map.size(); ++x)
    if (f.map[x] == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

ElementId ProductStructure::encode(const std::vector<ElementId>& parts) const {
  if (parts.size() != radices.size())
    throw input_error("component count mismatch");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= radices[i]) throw input_error("component out of range");
    flat = flat * radices[i] + parts[i];
  }
  return flat_to_id[flat];
}

ProductStructure direct_product(const std::vector<FiniteStructure>& factors) {
  if (factors.empty()) throw input_error("need at least one factor");
  const Kind kind = factors[0].kind;
  std::uint64_t order = 1;
  for (const auto& f : factors) {
    f.check_well_formed();
    if (f.kind != kind) throw input_error("factors must share one kind");
    order = checked_product_order(order, f.order);
  }
  const std::uint32_t N = static_cast<std::uint32_t>(order);
  const std::size_t k = factors.size();

  std::vector<std::vector<ElementId>> tuples(N, std::vector<ElementId>(k, 0));
  for (std::uint32_t i = 1; i < N; ++i) {
    tuples[i] = tuples[i - 1];
    std::size_t p = k;
    while (p-- > 0) {
      if (++tuples[i][p] < factors[p].order) break;
      tuples[i][p] = 0;
    }
  }

  FiniteStructure raw;
  raw.kind = kind;
  raw.order = N;
  raw.mul = OpTable(N);
  if (kind_has_add(kind)) raw.add = OpTable(N);
  std::vector<ElementId> scratch(k);
  auto flat_of = [&](const std::vector<ElementId>& parts) {
    std::size_t flat = 0;
    for (std::size_t p = 0; p < k; ++p)
      flat = flat * factors[p].order + parts[p];
    return static_cast<ElementId>(flat);
  };
  for (ElementId i = 0; i < N; ++i)
    for (ElementId j = 0; j < N; ++j) {
      for (std::size_t p = 0; p < k; ++p)
        scratch[p] = factors[p].times(tuples[i][p], tuples[j][p]);
      raw.mul.set(i, j, flat_of(scratch));
      if (raw.add) {
        for (std::size_t p = 0; p < k; ++p)
          scratch[p] = factors[p].plus(tuples[i][p], tuples[j][p]);
        raw.add->set(i, j, flat_of(scratch));
      }
    }
  raw.labels.resize(N);
  for (ElementId i = 0; i < N; ++i) {
    std::string l = "(";
    for (std::size_t p = 0; p < k; ++p) {
      if (p) l += ",";
      l += label_of(factors[p], tuples[i][p]);
    }
    raw.labels[i] = l + ")";
  }

  std::optional<ElementId> one_flat;
  if (kind_has_one(kind)) {
    std::vector<ElementId> ones(k, 1);
    one_flat = flat_of(ones);
  }

  ProductStructure out;
  auto perm = finish(raw, 0, one_flat);
  out.structure = std::move(raw);
  for (const auto& f : factors) out.radices.push_back(f.order);
  out.coords.resize(N);
  out.flat_to_id.resize(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    out.coords[perm[i]] = tuples[i];
    out.flat_to_id[i] = perm[i];
  }
  assert_valid(out.structure, "direct_product");
  return out;
}

// ---------------------------------------------------------------------------

ElementId MatrixSemiring::encode(const std::vector<ElementId>& entries) const {
  if (entries.size() != static_cast<std::size_t>(n) * n)
    throw input_error("entry count mismatch");
  std::size_t flat = 0;
  for (ElementId e : entries) {
    if (e >= scalar_order) throw input_error("entry out of range");
    flat = flat * scalar_order + e;
  }
  return flat_to_id[flat];
}

MatrixSemiring matrix_semiring(const FiniteStructure& s, std::uint32_t n) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("matrix construction needs a semiring");
  if (n == 0) throw input_error("matrix size must be positive");

  std::uint64_t order = 1;
  for (std::uint32_t c = 0; c < n * n; ++c)
    order = checked_product_order(order, s.order);
  const std::uint32_t N = static_cast<std::uint32_t>(order);
  const std::uint32_t cells = n * n;

  std::vector<std::vector<ElementId>> mats(N, std::vector<ElementId>(cells, 0));
  for (std::uint32_t i = 1; i < N; ++i) {
    mats[i] = mats[i - 1];
    std::uint32_t p = cells;
    while (p-- > 0) {
      if (++mats[i][p] < s.order) break;
      mats[i][p] = 0;
    }
  }
  auto flat_of = [&](const std::vector<ElementId>& m) {
    std::size_t flat = 0;
    for (ElementId e : m) flat = flat * s.order + e;
    return static_cast<ElementId>(flat);
  };

  FiniteStructure raw;
  raw.kind = Kind::semiring;
  raw.order = N;
  raw.mul = OpTable(N);
  raw.add = OpTable(N);
  std::vector<ElementId> scratch(cells);
  for (ElementId i = 0; i < N; ++i)
    for (ElementId j = 0; j < N; ++j) {
      for (std::uint32_t c = 0; c < cells; ++c)
        scratch[c] = s.plus(mats[i][c], mats[j][c]);
      raw.add->set(i, j, flat_of(scratch));
      for (std::uint32_t r = 0; r < n; ++r)
        for (std::uint32_t c = 0; c < n; ++c) {
          ElementId acc = 0;
          for (std::uint32_t q = 0; q < n; ++q)
            acc = s.plus(acc, s.times(mats[i][r * n + q], mats[j][q * n + c]));
          scratch[r * n + c] = acc;
        }
      raw.mul.set(i, j, flat_of(scratch));
    }

  std::vector<ElementId> id_mat(cells, 0);
  for (std::uint32_t r = 0; r < n; ++r) id_mat[r * n + r] = 1;
  ElementId one_flat = flat_of(id_mat);

  raw.labels.resize(N);
  for (ElementId i = 0; i < N; ++i) {
    std::string l = "[";
    for (std::uint32_t r = 0; r < n; ++r) {
      l += (r ? ",[" : "[");
      for (std::uint32_t c = 0; c < n; ++c) {
        if (c) l += ",";
        l += label_of(s, mats[i][r * n + c]);
      }
      l += "]";
    }
    raw.labels[i] = l + "]";
  }

  MatrixSemiring out;
  auto perm = finish(raw, 0, one_flat);
  out.structure = std::move(raw);
  out.n = n;
  out.scalar_order = s.order;
  out.coords.resize(N);
  out.flat_to_id.resize(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    out.coords[perm[i]] = mats[i];
    out.flat_to_id[i] = perm[i];
  }
  assert_valid(out.structure, "matrix_semiring");
  return out;
}

// ---------------------------------------------------------------------------

ElementId TriangularSemiring::encode(ElementId s, ElementId m,
                                     ElementId t) const {
  std::size_t flat =
      (static_cast<std::size_t>(s) * module_order + m) * right_order + t;
  if (flat >= flat_to_id.size()) throw input_error("component out of range");
  return flat_to_id[flat];
}

TriangularSemiring triangular_semiring(const FiniteStructure& s,
                                       const Bisemimodule& m,
                                       const FiniteStructure& t) {
  if (s.kind != Kind::semiring || t.kind != Kind::semiring)
    throw input_error("corner components must be semirings");
  ValidationReport axioms = validate_bisemimodule(s, m, t);
  if (!axioms.valid) {
    const auto& f = axioms.failures[0];
    throw input_error("bisemimodule axiom " + f.axiom + " fails at (" +
                      std::to_string(f.witness[0]) + "," +
                      std::to_string(f.witness[1]) + "," +
                      std::to_string(f.witness[2]) + ")");
  }
  const std::uint32_t M = m.module_order, T = t.order;
  std::uint64_t order = checked_product_order(
      checked_product_order(s.order, M), T);
  const std::uint32_t N = static_cast<std::uint32_t>(order);

  auto flat_of = [&](ElementId si, ElementId mi, ElementId ti) {
    return static_cast<ElementId>(
        (static_cast<std::size_t>(si) * M + mi) * T + ti);
  };

  FiniteStructure raw;
  raw.kind = Kind::semiring;
  raw.order = N;
  raw.mul = OpTable(N);
  raw.add = OpTable(N);
  raw.labels.resize(N);
  std::vector<std::array<ElementId, 3>> trip(N);
  for (ElementId si = 0; si < s.order; ++si)
    for (ElementId mi = 0; mi < M; ++mi)
      for (ElementId ti = 0; ti < T; ++ti) {
        ElementId i = flat_of(si, mi, ti);
        trip[i] = {si, mi, ti};
        raw.labels[i] = "(" + label_of(s, si) + "," + std::to_string(mi) +
                        "," + label_of(t, ti) + ")";
      }
  for (ElementId i = 0; i < N; ++i)
    for (ElementId j = 0; j < N; ++j) {
      auto [s1, m1, t1] = trip[i];
      auto [s2, m2, t2] = trip[j];
      raw.add->set(i, j, flat_of(s.plus(s1, s2), m.plus(m1, m2),
                                 t.plus(t1, t2)));
      raw.mul.set(i, j,
                  flat_of(s.times(s1, s2),
                          m.plus(m.act_left(s1, m2), m.act_right(m1, t2)),
                          t.times(t1, t2)));
    }

  TriangularSemiring out;
  auto perm = finish(raw, flat_of(0, 0, 0), flat_of(1, 0, 1));
  out.structure = std::move(raw);
  out.module_order = M;
  out.right_order = T;
  out.coords.resize(N);
  out.flat_to_id.resize(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    out.coords[perm[i]] = trip[i];
    out.flat_to_id[i] = perm[i];
  }
  assert_valid(out.structure, "triangular_semiring");
  return out;
}

// ---------------------------------------------------------------------------

ElementId ExpectationSemiring::encode(ElementId s, ElementId m) const {
  std::size_t flat = static_cast<std::size_t>(s) * module_order + m;
  if (flat >= flat_to_id.size()) throw input_error("component out of range");
  return flat_to_id[flat];
}

namespace {

// Shared pair-carrier builder: product (s1 s2, act(s1, m2) + m1 s2).
ExpectationSemiring build_pairs(
    const FiniteStructure& s, std::uint32_t M,
    const std::function<ElementId(ElementId, ElementId)>& plus_m,
    const std::function<ElementId(ElementId, ElementId)>& left,
    const std::function<ElementId(ElementId, ElementId)>& right,
    const char* what) {
  std::uint64_t order = checked_product_order(s.order, M);
  const std::uint32_t N = static_cast<std::uint32_t>(order);
  auto flat_of = [&](ElementId si, ElementId mi) {
    return static_cast<ElementId>(static_cast<std::size_t>(si) * M + mi);
  };

  FiniteStructure raw;
  raw.kind = Kind::semiring;
  raw.order = N;
  raw.mul = OpTable(N);
  raw.add = OpTable(N);
  raw.labels.resize(N);
  std::vector<std::array<ElementId, 2>> pairs(N);
  for (ElementId si = 0; si < s.order; ++si)
    for (ElementId mi = 0; mi < M; ++mi) {
      ElementId i = flat_of(si, mi);
      pairs[i] = {si, mi};
      raw.labels[i] =
          "(" + label_of(s, si) + "," + std::to_string(mi) + ")";
    }
  for (ElementId i = 0; i < N; ++i)
    for (ElementId j = 0; j < N; ++j) {
      auto [s1, m1] = pairs[i];
      auto [s2, m2] = pairs[j];
      raw.add->set(i, j, flat_of(s.plus(s1, s2), plus_m(m1, m2)));
      raw.mul.set(i, j,
                  flat_of(s.times(s1, s2), plus_m(left(s1, m2), right(m1, s2))));
    }

  ExpectationSemiring out;
  auto perm = finish(raw, flat_of(0, 0), flat_of(1, 0));
  out.structure = std::move(raw);
  out.module_order = M;
  out.coords.resize(N);
  out.flat_to_id.resize(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    out.coords[perm[i]] = pairs[i];
    out.flat_to_id[i] = perm[i];
  }
  assert_valid(out.structure, what);
  return out;
}

}  // namespace

ExpectationSemiring expectation_semiring(const FiniteStructure& s,
                                         const Bisemimodule& m) {
  if (s.kind != Kind::semiring)
    throw input_error("expectation construction needs a semiring");
  ValidationReport axioms = validate_bisemimodule(s, m, s);
  if (!axioms.valid) {
    const auto& f = axioms.failures[0];
    throw input_error("bisemimodule axiom " + f.axiom + " fails at (" +
                      std::to_string(f.witness[0]) + "," +
                      std::to_string(f.witness[1]) + "," +
                      std::to_string(f.witness[2]) + ")");
  }
  return build_pairs(
      s, m.module_order,
      [&](ElementId a, ElementId b) { return m.plus(a, b); },
      [&](ElementId x, ElementId a) { return m.act_left(x, a); },
      [&](ElementId a, ElementId x) { return m.act_right(a, x); },
      "expectation_semiring");
}

ExpectationSemiring expectation_semiring(const FiniteStructure& s) {
  return expectation_semiring(s, regular_bisemimodule(s));
}

ExpectationSemiring sigma_expectation(const FiniteStructure& s,
                                      const Endomorphism& sigma) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("twisted pairs need a semiring");
  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId y = static_cast<ElementId>(x + 1); y < s.order; ++y)
      if (s.times(x, y) != s.times(y, x))
        throw input_error("multiplication must be commutative; " +
                          std::to_string(x) + "*" + std::to_string(y) +
                          " != " + std::to_string(y) + "*" +
                          std::to_string(x));
  if (sigma.order() != s.order)
    throw input_error("endomorphism has the wrong carrier size");
  if (sigma(0) != 0) throw input_error("sigma(0) != 0");
  if (sigma(1) != 1) throw input_error("sigma(1) != 1");
  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId y = 0; y < s.order; ++y) {
      if (sigma(s.plus(x, y)) != s.plus(sigma(x), sigma(y)))
        throw input_error("sigma(x + y) != sigma(x) + sigma(y) at (" +
                          std::to_string(x) + "," + std::to_string(y) + ")");
      if (sigma(s.times(x, y)) != s.times(sigma(x), sigma(y)))
        throw input_error("sigma(x * y) != sigma(x) * sigma(y) at (" +
                          std::to_string(x) + "," + std::to_string(y) + ")");
    }
  return build_pairs(
      s, s.order, [&](ElementId a, ElementId b) { return s.plus(a, b); },
      [&](ElementId x, ElementId a) { return s.times(sigma(x), a); },
      [&](ElementId a, ElementId x) { return s.times(a, x); },
      "sigma_expectation");
}

// ---------------------------------------------------------------------------

EndoPnResult endomorphism_pn_semiring(const OpTable& add) {
  std::vector<Endomorphism> maps = magma_endomorphisms(add);
  const std::uint32_t n = add.order();
  const std::uint32_t E = static_cast<std::uint32_t>(maps.size());
  if (E > kMaxTableOrder)
    throw resource_error("endomorphism carrier would exceed the table cap");

  auto index_of = [&](const std::vector<ElementId>& img) -> std::int64_t {
    auto it = std::lower_bound(
        maps.begin(), maps.end(), img,
        [](const Endomorphism& f, const std::vector<ElementId>& v) {
          return f.map < v;
        });
    if (it == maps.end() || it->map != img) return -1;
    return it - maps.begin();
  };

  EndoPnResult out;

  // The set is closed under pointwise + exactly when every pointwise sum is
  // again additive; scan for the first pair where that breaks.
  std::vector<ElementId> sum(n);
  OpTable add_table(E), mul_table(E);
  for (std::uint32_t i = 0; i < E; ++i)
    for (std::uint32_t j = 0; j < E; ++j) {
      for (ElementId x = 0; x < n; ++x)
        sum[x] = add(maps[i].map[x], maps[j].map[x]);
      for (ElementId x = 0; x < n; ++x)
        for (ElementId y = 0; y < n; ++y)
          if (sum[add(x, y)] != add(sum[x], sum[y])) {
            out.maps = maps;
            out.failure = EndoClosureFailure{maps[i], maps[j], x, y};
            return out;
          }
      add_table.set(static_cast<ElementId>(i), static_cast<ElementId>(j),
                    static_cast<ElementId>(index_of(sum)));
      for (ElementId x = 0; x < n; ++x) sum[x] = maps[i].map[maps[j].map[x]];
      std::int64_t c = index_of(sum);
      if (c < 0) throw error("composition escaped the endomorphism carrier");
      mul_table.set(static_cast<ElementId>(i), static_cast<ElementId>(j),
                    static_cast<ElementId>(c));
    }

  std::int64_t zero_idx = index_of(std::vector<ElementId>(n, 0));
  std::int64_t one_idx = index_of(identity_endomorphism(n).map);
  if (zero_idx < 0 || one_idx < 0)
    throw error("zero map or identity map missing from the carrier");

  FiniteStructure raw;
  raw.kind = Kind::pn_semiring_right;
  raw.order = E;
  raw.add = std::move(add_table);
  raw.mul = std::move(mul_table);
  raw.labels.resize(E);
  for (std::uint32_t i = 0; i < E; ++i) {
    std::string l = "[";
    for (ElementId x = 0; x < n; ++x) {
      if (x) l += ",";
      l += std::to_string(maps[i].map[x]);
    }
    raw.labels[i] = l + "]";
  }

  auto perm = finish(raw, static_cast<ElementId>(zero_idx),
                     static_cast<ElementId>(one_idx));
  out.maps.resize(E);
  for (std::uint32_t i = 0; i < E; ++i) out.maps[perm[i]] = maps[i];
  out.structure = std::move(raw);
  assert_valid(*out.structure, "endomorphism_pn_semiring");
  return out;
}

EndoPnResult endomorphism_pn_semiring(const FiniteStructure& s) {
  s.check_well_formed();
  if (!s.has_add())
    throw input_error("structure has no additive operation to act on");
  return endomorphism_pn_semiring(*s.add);
}

// ---------------------------------------------------------------------------

Localization localize(const FiniteStructure& s,
                      const std::vector<ElementId>& denominators) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("fractions need a semiring");
  std::vector<ElementId> O = denominators;
  std::sort(O.begin(), O.end());
  O.erase(std::unique(O.begin(), O.end()), O.end());
  if (O.empty() || !std::binary_search(O.begin(), O.end(), ElementId{1}))
    throw input_error("denominators must contain 1");
  for (ElementId u : O) {
    if (u >= s.order) throw input_error("denominator out of range");
    for (ElementId x = 0; x < s.order; ++x) {
      if (s.times(u, x) != s.times(x, u))
        throw input_error("denominator " + std::to_string(u) +
                          " is not central; witness " + std::to_string(x));
      for (ElementId y = static_cast<ElementId>(x + 1); y < s.order; ++y)
        if (s.times(u, x) == s.times(u, y))
          throw input_error("denominator " + std::to_string(u) +
                            " is not cancellable; " + std::to_string(u) + "*" +
                            std::to_string(x) + " = " + std::to_string(u) +
                            "*" + std::to_string(y));
    }
  }
  for (ElementId u : O)
    for (ElementId v : O)
      if (!std::binary_search(O.begin(), O.end(), s.times(u, v)))
        throw input_error("denominators not closed under *: " +
                          std::to_string(u) + "*" + std::to_string(v) +
                          " escapes");

  // Pairs (u, s) in lexicographic order; classes keyed by first appearance.
  struct Pair {
    ElementId u, s;
  };
  std::vector<Pair> pairs;
  for (ElementId u : O)
    for (ElementId x = 0; x < s.order; ++x) pairs.push_back({u, x});
  auto related = [&](const Pair& a, const Pair& b) {
    return s.times(a.s, b.u) == s.times(b.s, a.u);
  };

  std::vector<std::uint32_t> cls(pairs.size());
  std::vector<Pair> reps;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    std::int64_t home = -1;
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (related(pairs[p], reps[c])) {
        if (home >= 0)
          throw error("fraction relation is not transitive on this input");
        home = static_cast<std::int64_t>(c);
      }
    if (home < 0) {
      home = static_cast<std::int64_t>(reps.size());
      reps.push_back(pairs[p]);
    }
    cls[p] = static_cast<std::uint32_t>(home);
  }
  const std::uint32_t K = static_cast<std::uint32_t>(reps.size());
  if (K > kMaxTableOrder)
    throw resource_error("fraction carrier would exceed the table cap");

  auto class_of = [&](ElementId u, ElementId x) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (pairs[p].u == u && pairs[p].s == x) return cls[p];
    throw error("fraction pair fell outside the carrier");
  };

  FiniteStructure raw;
  raw.kind = Kind::semiring;
  raw.order = K;
  raw.add = OpTable(K);
  raw.mul = OpTable(K);
  for (std::uint32_t a = 0; a < K; ++a)
    for (std::uint32_t b = 0; b < K; ++b) {
      const Pair &x = reps[a], &y = reps[b];
      ElementId du = s.times(x.u, y.u);
      raw.add->set(static_cast<ElementId>(a), static_cast<ElementId>(b),
                   static_cast<ElementId>(class_of(
                       du, s.plus(s.times(x.s, y.u), s.times(y.s, x.u)))));
      raw.mul.set(static_cast<ElementId>(a), static_cast<ElementId>(b),
                  static_cast<ElementId>(class_of(du, s.times(x.s, y.s))));
    }

  // Operations must not depend on the representative chosen.
  if (pairs.size() <= 512) {
    for (std::size_t p = 0; p < pairs.size(); ++p)
      for (std::size_t q = 0; q < pairs.size(); ++q) {
        ElementId du = s.times(pairs[p].u, pairs[q].u);
        std::uint32_t sum = class_of(
            du, s.plus(s.times(pairs[p].s, pairs[q].u),
                       s.times(pairs[q].s, pairs[p].u)));
        std::uint32_t prod = class_of(du, s.times(pairs[p].s, pairs[q].s));
        if (sum != (*raw.add)(static_cast<ElementId>(cls[p]),
                              static_cast<ElementId>(cls[q])) ||
            prod != raw.mul(static_cast<ElementId>(cls[p]),
                            static_cast<ElementId>(cls[q])))
          throw error("fraction operations depend on representatives");
      }
  }

  raw.labels.resize(K);
  for (std::uint32_t c = 0; c < K; ++c)
    raw.labels[c] = label_of(s, reps[c].s) + "/" + label_of(s, reps[c].u);

  ElementId zero_cls = static_cast<ElementId>(class_of(1, 0));
  ElementId one_cls = static_cast<ElementId>(class_of(1, 1));

  Localization out;
  auto perm = finish(raw, zero_cls, one_cls);
  out.structure = std::move(raw);
  out.reps.resize(K);
  for (std::uint32_t c = 0; c < K; ++c)
    out.reps[perm[c]] = {reps[c].u, reps[c].s};
  out.canonical.resize(s.order);
  for (ElementId x = 0; x < s.order; ++x)
    out.canonical[x] = perm[class_of(1, x)];
  assert_valid(out.structure, "localize");

  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId y = 0; y < s.order; ++y) {
      if (x < y && out.canonical[x] == out.canonical[y])
        throw error("canonical map into the fractions is not injective");
      if (out.canonical[s.plus(x, y)] !=
              out.structure.plus(out.canonical[x], out.canonical[y]) ||
          out.canonical[s.times(x, y)] !=
              out.structure.times(out.canonical[x], out.canonical[y]))
        throw error("canonical map into the fractions is not a homomorphism");
    }
  return out;
}

std::vector<std::vector<ElementId>> ore_sets(const FiniteStructure& s) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("fractions need a semiring");
  std::vector<ElementId> cand;
  for (ElementId u = 0; u < s.order; ++u) {
    bool ok = true;
    for (ElementId x = 0; x < s.order && ok; ++x) {
      if (s.times(u, x) != s.times(x, u)) ok = false;
      for (ElementId y = static_cast<ElementId>(x + 1); y < s.order && ok; ++y)
        if (s.times(u, x) == s.times(u, y) || s.times(x, u) == s.times(y, u))
          ok = false;
    }
    if (ok) cand.push_back(u);
  }
  if (cand.size() > 20)
    throw resource_error("too many candidate denominators to enumerate");

  std::size_t one_pos = std::find(cand.begin(), cand.end(), ElementId{1}) -
                        cand.begin();
  std::vector<std::vector<ElementId>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cand.size());
       ++mask) {
    if (!(mask >> one_pos & 1)) continue;
    std::vector<ElementId> subset;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) subset.push_back(cand[i]);
    bool closed = true;
    for (ElementId u : subset)
      for (ElementId v : subset)
        if (!std::binary_search(subset.begin(), subset.end(), s.times(u, v))) {
          closed = false;
          break;
        }
    if (closed) out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace zdlab
