#include "zdlab/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "zdlab/validate.hpp"

namespace zdlab {

using nlohmann::json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::unknown_at_bound: return "unknown_at_bound";
  }
  return "?";
}

json to_json(const PropertyReport& r) {
  json j;
  j["property"] = r.property;
  j["verdict"] = verdict_name(r.verdict);
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  j["bound"] = r.bound ? json(*r.bound) : json(nullptr);
  return j;
}

namespace {

PropertyReport pass(const char* prop) {
  PropertyReport r;
  r.property = prop;
  return r;
}

PropertyReport fail(const char* prop, std::initializer_list<std::int64_t> w) {
  PropertyReport r;
  r.property = prop;
  r.verdict = Verdict::fails;
  r.witness = std::vector<std::int64_t>(w);
  return r;
}

std::vector<ElementId> mask_to_ids(const std::vector<char>& mask) {
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(static_cast<ElementId>(i));
  return out;
}

// x^k under the multiplication table.
ElementId power(const FiniteStructure& s, ElementId x, std::uint32_t k) {
  ElementId p = x;
  for (std::uint32_t i = 1; i < k; ++i) p = s.times(p, x);
  return p;
}

// Minimal k <= order with x^k = 0, or 0 if x is not nilpotent.
std::uint32_t nil_index(const FiniteStructure& s, ElementId x) {
  ElementId p = x;
  for (std::uint32_t k = 1; k <= s.order; ++k) {
    if (p == 0) return k;
    p = s.times(p, x);
  }
  return 0;
}

}  // namespace

ZeroDivisorSets zero_divisor_sets(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  std::vector<char> left(n, 0), right(n, 0);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId x = 1; x < n; ++x) {
      if (s.times(a, x) == 0) left[a] = 1;
      if (s.times(x, a) == 0) right[a] = 1;
    }
  ZeroDivisorSets out;
  out.left = mask_to_ids(left);
  out.right = mask_to_ids(right);
  std::vector<char> both(n, 0);
  for (ElementId a = 0; a < n; ++a) both[a] = left[a] | right[a];
  out.all = mask_to_ids(both);
  both[0] = 0;
  out.proper = mask_to_ids(both);
  return out;
}

PropertyReport is_reversible(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (s.times(a, b) == 0 && s.times(b, a) != 0)
        return fail("reversible", {a, b});
  return pass("reversible");
}

PropertyReport is_eversible(const FiniteStructure& s) {
  ZeroDivisorSets z = zero_divisor_sets(s);
  std::vector<ElementId> diff;
  std::set_symmetric_difference(z.left.begin(), z.left.end(), z.right.begin(),
                                z.right.end(), std::back_inserter(diff));
  if (diff.empty()) return pass("eversible");
  return fail("eversible", {diff.front()});
}

PropertyReport is_entire(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 1; a < n; ++a)
    for (ElementId b = 1; b < n; ++b)
      if (s.times(a, b) == 0) return fail("entire", {a, b});
  return pass("entire");
}

PropertyReport is_prime(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 1; a < n; ++a)
    for (ElementId b = 1; b < n; ++b) {
      bool all_zero = true;
      for (ElementId x = 0; x < n && all_zero; ++x)
        all_zero = s.times(s.times(a, x), b) == 0;
      if (all_zero) return fail("prime", {a, b});
    }
  return pass("prime");
}

PropertyReport is_semiprime(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 1; a < n; ++a) {
    bool all_zero = true;
    for (ElementId x = 0; x < n && all_zero; ++x)
      all_zero = s.times(s.times(a, x), a) == 0;
    if (all_zero) return fail("semiprime", {a});
  }
  return pass("semiprime");
}

PropertyReport is_nilpotent_free(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 1; a < n; ++a)
    if (s.times(a, a) == 0) return fail("nilpotent_free", {a});
  return pass("nilpotent_free");
}

PropertyReport is_symmetric(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId r = 0; r < n; ++r)
    for (ElementId t = 0; t < n; ++t)
      for (ElementId u = 0; u < n; ++u)
        if (s.times(s.times(r, t), u) == 0 && s.times(s.times(t, r), u) != 0)
          return fail("symmetric", {r, t, u});
  return pass("symmetric");
}

PropertyReport is_zerosumfree(const FiniteStructure& s) {
  s.check_well_formed();
  if (!s.has_add()) throw input_error("zerosumfree needs an addition table");
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (s.plus(a, b) == 0 && (a != 0 || b != 0))
        return fail("zerosumfree", {a, b});
  return pass("zerosumfree");
}

std::vector<std::pair<ElementId, std::uint32_t>> nilpotent_elements(
    const FiniteStructure& s) {
  s.check_well_formed();
  std::vector<std::pair<ElementId, std::uint32_t>> out;
  for (ElementId a = 0; a < s.order; ++a)
    if (std::uint32_t k = nil_index(s, a)) out.emplace_back(a, k);
  return out;
}

Annihilators annihilators(const FiniteStructure& s, ElementId elem) {
  s.check_well_formed();
  if (elem >= s.order) throw input_error("element out of range");
  Annihilators out;
  for (ElementId x = 0; x < s.order; ++x) {
    if (s.times(x, elem) == 0) out.left.push_back(x);
    if (s.times(elem, x) == 0) out.right.push_back(x);
  }
  return out;
}

const char* sidedness_name(Sidedness s) {
  switch (s) {
    case Sidedness::left: return "left";
    case Sidedness::right: return "right";
    case Sidedness::two_sided: return "two_sided";
  }
  return "?";
}

IdealDescriptor ideal_closure(const FiniteStructure& s,
                              std::vector<ElementId> generators,
                              Sidedness side) {
  s.check_well_formed();
  if (generators.empty()) throw input_error("ideal needs a generator");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (ElementId g : generators)
    if (g >= s.order) throw input_error("generator out of range");

  std::vector<char> in(s.order, 0);
  for (ElementId g : generators) in[g] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    auto put = [&](ElementId v) {
      if (!in[v]) {
        in[v] = 1;
        grew = true;
      }
    };
    for (ElementId x = 0; x < s.order; ++x) {
      if (!in[x]) continue;
      for (ElementId t = 0; t < s.order; ++t) {
        if (side != Sidedness::left) put(s.times(x, t));
        if (side != Sidedness::right) put(s.times(t, x));
      }
      if (s.has_add())
        for (ElementId y = 0; y < s.order; ++y)
          if (in[y]) put(s.plus(x, y));
    }
  }

  IdealDescriptor out;
  out.generators = std::move(generators);
  out.sidedness = side;
  out.closure = mask_to_ids(in);
  return out;
}

PropertyReport is_nil_ideal(const FiniteStructure& s,
                            const IdealDescriptor& ideal) {
  s.check_well_formed();
  std::vector<char> in(s.order, 0);
  for (ElementId x : ideal.closure) {
    if (x >= s.order) throw input_error("ideal element out of range");
    in[x] = 1;
  }
  for (ElementId x : ideal.closure) {
    for (ElementId t = 0; t < s.order; ++t) {
      if (ideal.sidedness != Sidedness::left && !in[s.times(x, t)])
        throw closure_error("ideal is not closed under right multiplication",
                            x, t);
      if (ideal.sidedness != Sidedness::right && !in[s.times(t, x)])
        throw closure_error("ideal is not closed under left multiplication", t,
                            x);
    }
    if (s.has_add())
      for (ElementId y : ideal.closure)
        if (!in[s.plus(x, y)])
          throw closure_error("ideal is not closed under addition", x, y);
  }
  for (ElementId x : ideal.closure)
    if (nil_index(s, x) == 0) return fail("nil_ideal", {x});
  return pass("nil_ideal");
}

CohnReport verify_cohn(const FiniteStructure& s) {
  CohnReport rep;
  rep.overall = pass("cohn");
  if (!is_reversible(s).holds()) return rep;  // conclusions only bind here

  ElementId n = static_cast<ElementId>(s.order);
  std::vector<std::uint32_t> index(n, 0);
  std::vector<ElementId> nils;
  for (ElementId a = 0; a < n; ++a) {
    index[a] = nil_index(s, a);
    if (index[a]) nils.push_back(a);
  }
  auto is_nil = [&](ElementId x) { return index[x] != 0; };

  PropertyReport rc_nil = pass("cohn.right_closure_nil");
  PropertyReport rc_left = pass("cohn.right_closure_is_left_ideal");
  PropertyReport tc_nil = pass("cohn.two_sided_closure_nil");
  for (ElementId a : nils) {
    auto rc = ideal_closure(s, {a}, Sidedness::right);
    std::vector<char> in(n, 0);
    for (ElementId x : rc.closure) in[x] = 1;
    if (rc_nil.holds())
      for (ElementId x : rc.closure)
        if (!is_nil(x)) {
          rc_nil = fail("cohn.right_closure_nil", {a, x});
          break;
        }
    if (rc_left.holds())
      for (ElementId t = 0; t < n && rc_left.holds(); ++t)
        for (ElementId x : rc.closure)
          if (!in[s.times(t, x)]) {
            rc_left = fail("cohn.right_closure_is_left_ideal", {a, t, x});
            break;
          }
    if (tc_nil.holds()) {
      auto tc = ideal_closure(s, {a}, Sidedness::two_sided);
      for (ElementId x : tc.closure)
        if (!is_nil(x)) {
          tc_nil = fail("cohn.two_sided_closure_nil", {a, x});
          break;
        }
    }
  }
  rep.checks.push_back(std::move(rc_nil));
  rep.checks.push_back(std::move(rc_left));
  rep.checks.push_back(std::move(tc_nil));

  PropertyReport absorb = pass("cohn.nilpotent_set_mul_absorbing");
  for (ElementId t = 0; t < n && absorb.holds(); ++t)
    for (ElementId a : nils)
      if (!is_nil(s.times(t, a)) || !is_nil(s.times(a, t))) {
        absorb = fail("cohn.nilpotent_set_mul_absorbing", {t, a});
        break;
      }
  rep.checks.push_back(std::move(absorb));

  if (s.kind == Kind::semiring) {
    PropertyReport add_closed = pass("cohn.nilpotent_set_add_closed");
    PropertyReport sum_index = pass("cohn.sum_index");
    for (ElementId a : nils) {
      for (ElementId b : nils) {
        ElementId c = s.plus(a, b);
        if (add_closed.holds() && !is_nil(c)) {
          add_closed = fail("cohn.nilpotent_set_add_closed", {a, b});
        }
        if (sum_index.holds() && power(s, c, index[a] + index[b] - 1) != 0) {
          sum_index = fail("cohn.sum_index", {a, b});
        }
      }
    }
    rep.checks.push_back(std::move(add_closed));
    rep.checks.push_back(std::move(sum_index));

    PropertyReport sandwich = pass("cohn.sandwich_index");
    for (ElementId a = 0; a < n && sandwich.holds(); ++a)
      for (ElementId nl : nils) {
        for (ElementId b = 0; b < n; ++b)
          if (power(s, s.times(s.times(a, nl), b), index[nl]) != 0) {
            sandwich = fail("cohn.sandwich_index", {a, nl, b});
            break;
          }
        if (!sandwich.holds()) break;
      }
    rep.checks.push_back(std::move(sandwich));
  }

  for (const auto& c : rep.checks)
    if (c.fails()) {
      rep.overall.verdict = Verdict::fails;
      rep.overall.witness = c.witness;
      break;
    }
  return rep;
}

Condition2Report eversible_condition2(const FiniteStructure& s) {
  if (!s.has_add() || !validate_pn_semiring(s, DistributiveSide::both).valid)
    throw input_error("criterion needs a valid distributive pn-semiring");
  ElementId n = static_cast<ElementId>(s.order);

  auto pair_ok = [&](ElementId a, ElementId b) {
    for (ElementId c = 1; c < n; ++c) {
      ElementId bc = s.times(b, c), ca = s.times(c, a);
      if (bc == 0 && ca == 0) return true;
      if (bc != 0 && ca != 0 && s.times(bc, a) == 0) return true;
    }
    return false;
  };

  auto scan = [&](ElementId first, const char* name) {
    for (ElementId a = first; a < n; ++a)
      for (ElementId b = first; b < n; ++b)
        if (s.times(a, b) == 0 && !pair_ok(a, b)) return fail(name, {a, b});
    return pass(name);
  };

  Condition2Report rep;
  rep.restricted = scan(1, "eversible_condition2_restricted");
  rep.literal = scan(0, "eversible_condition2_literal");
  return rep;
}

PropertyReport is_armendariz_bounded(const FiniteStructure& s,
                                     const ArmendarizOptions& opt) {
  s.check_well_formed();
  if (s.kind != Kind::semiring)
    throw input_error("armendariz check needs a semiring");
  const std::uint32_t len = opt.degree + 1;
  const ElementId n = static_cast<ElementId>(s.order);

  auto convolves_to_zero = [&](const std::vector<ElementId>& f,
                               const std::vector<ElementId>& g) {
    for (std::uint32_t k = 0; k <= 2 * opt.degree; ++k) {
      ElementId acc = 0;
      std::uint32_t lo = k >= opt.degree ? k - opt.degree : 0;
      std::uint32_t hi = std::min(k, opt.degree);
      for (std::uint32_t i = lo; i <= hi; ++i)
        acc = s.plus(acc, s.times(f[i], g[k - i]));
      if (acc != 0) return false;
    }
    return true;
  };

  auto cross_witness = [&](const std::vector<ElementId>& f,
                           const std::vector<ElementId>& g)
      -> std::optional<std::pair<std::uint32_t, std::uint32_t>> {
    for (std::uint32_t i = 0; i < len; ++i)
      for (std::uint32_t j = 0; j < len; ++j)
        if (s.times(f[i], g[j]) != 0) return std::make_pair(i, j);
    return std::nullopt;
  };

  auto make_report = [&](const std::vector<ElementId>& f,
                         const std::vector<ElementId>& g, std::uint32_t i,
                         std::uint32_t j) {
    PropertyReport r;
    r.property = "armendariz";
    r.verdict = Verdict::fails;
    r.witness.emplace();
    for (ElementId c : f) r.witness->push_back(c);
    for (ElementId c : g) r.witness->push_back(c);
    r.witness->push_back(i);
    r.witness->push_back(j);
    return r;
  };

  double pairs = std::pow(static_cast<double>(n), 2.0 * len);
  if (pairs <= static_cast<double>(1u << 22)) {
    std::vector<ElementId> f(len, 0), g(len, 0);
    auto bump = [&](std::vector<ElementId>& v) {
      for (std::uint32_t i = len; i-- > 0;) {
        if (++v[i] < n) return true;
        v[i] = 0;
      }
      return false;
    };
    do {
      std::fill(g.begin(), g.end(), 0);
      do {
        if (convolves_to_zero(f, g))
          if (auto w = cross_witness(f, g))
            return make_report(f, g, w->first, w->second);
      } while (bump(g));
    } while (bump(f));
    return pass("armendariz");
  }

  if (!opt.allow_sampling)
    throw resource_error(
        "armendariz pair space is too large; enable sampling or lower the "
        "degree");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  std::vector<ElementId> f(len), g(len);
  for (std::uint64_t t = 0; t < opt.samples; ++t) {
    for (auto& c : f) c = static_cast<ElementId>(pick(rng));
    for (auto& c : g) c = static_cast<ElementId>(pick(rng));
    if (convolves_to_zero(f, g))
      if (auto w = cross_witness(f, g))
        return make_report(f, g, w->first, w->second);
  }
  PropertyReport r = pass("armendariz");
  r.verdict = Verdict::unknown_at_bound;
  r.bound = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(opt.samples, 0xffffffffu));
  return r;
}

namespace {

PropertyReport is_mul_commutative(const FiniteStructure& s) {
  s.check_well_formed();
  ElementId n = static_cast<ElementId>(s.order);
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = static_cast<ElementId>(a + 1); b < n; ++b)
      if (s.times(a, b) != s.times(b, a)) return fail("commutative", {a, b});
  return pass("commutative");
}

}  // namespace

const std::map<std::string, PropertyFn>& property_registry() {
  static const std::map<std::string, PropertyFn> reg = [] {
    std::map<std::string, PropertyFn> m;
    auto plain = [&m](const std::string& name,
                      PropertyReport (*fn)(const FiniteStructure&)) {
      m[name] = [fn](const FiniteStructure& s, const EvalOptions&) {
        return fn(s);
      };
    };
    plain("reversible", is_reversible);
    plain("eversible", is_eversible);
    plain("entire", is_entire);
    plain("prime", is_prime);
    plain("semiprime", is_semiprime);
    plain("nilpotent_free", is_nilpotent_free);
    plain("nilpotent-free", is_nilpotent_free);
    plain("symmetric", is_symmetric);
    plain("zerosumfree", is_zerosumfree);
    plain("commutative", is_mul_commutative);
    m["armendariz"] = [](const FiniteStructure& s, const EvalOptions& o) {
      ArmendarizOptions a;
      a.degree = o.degree;
      return is_armendariz_bounded(s, a);
    };
    return m;
  }();
  return reg;
}

PropertyReport evaluate_property(const FiniteStructure& s,
                                 const std::string& name,
                                 const EvalOptions& opt) {
  auto& reg = property_registry();
  auto it = reg.find(name);
  if (it == reg.end()) throw input_error("unknown property \"" + name + "\"");
  return it->second(s, opt);
}

}  // namespace zdlab
