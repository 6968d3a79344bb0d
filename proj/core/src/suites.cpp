#include "zdlab/suites.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <functional>
#include <map>
#include <utility>

#include "zdlab/constructions.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/parallel.hpp"
#include "zdlab/polynomial.hpp"
#include "zdlab/properties.hpp"
#include "zdlab/validate.hpp"
#include "zdlab/zdgraph.hpp"

namespace zdlab {

using nlohmann::json;

namespace {

std::string rate(std::uint64_t num, std::uint64_t den) {
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::int64_t> witness_of(const PropertyReport& r) {
  return r.witness ? *r.witness : std::vector<std::int64_t>{};
}

// ----------------------------------------------------------------- corpora

struct Member {
  std::string id;
  FiniteStructure s;
};

std::vector<Member> enumerated_members(Kind kind, std::uint32_t lo,
                                       std::uint32_t hi) {
  std::vector<Member> out;
  for (std::uint32_t n = lo; n <= hi; ++n) {
    EnumerationSpec spec;
    spec.kind = kind;
    spec.order = n;
    std::uint64_t index = 0;
    for_each_structure(spec, [&](const FiniteStructure& s) {
      out.push_back({std::string(kind_name(kind)) + "/" + std::to_string(n) +
                         "/" + std::to_string(index++),
                     s});
      return true;
    });
  }
  return out;
}

// Empty `allowed` admits every kind.
std::vector<Member> corpus_members(const SuiteOptions& opt,
                                   const std::vector<Kind>& allowed) {
  std::vector<Member> out;
  for (std::size_t i = 0; i < opt.corpus.size(); ++i) {
    const FiniteStructure& s = opt.corpus[i];
    if (!allowed.empty() &&
        std::find(allowed.begin(), allowed.end(), s.kind) == allowed.end())
      throw input_error("suite cannot digest corpus member " +
                        std::to_string(i) + " of kind " + kind_name(s.kind));
    ValidationReport rep = validate_structure(s);
    if (!rep.valid)
      throw input_error("corpus member " + std::to_string(i) + " is invalid: " +
                        (rep.failures.empty() ? std::string("unknown axiom")
                                              : rep.failures[0].axiom));
    out.push_back({"corpus/" + std::to_string(i), s});
  }
  return out;
}

std::vector<Member> suite_members(const SuiteOptions& opt, Kind kind,
                                  std::uint32_t default_hi) {
  if (!opt.corpus.empty()) return corpus_members(opt, {kind});
  return enumerated_members(kind, 2, opt.order ? opt.order : default_hi);
}

// ------------------------------------------------------ implication driver

struct Implication {
  const char* claim;
  std::vector<const char*> hypotheses;
  std::vector<const char*> conclusions;
};

SuiteReport implication_suite(const char* name, Kind kind,
                              std::uint32_t default_hi,
                              const std::vector<Implication>& implications,
                              const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  std::vector<Member> members = suite_members(opt, kind, default_hi);
  rep.structures_checked = members.size();

  EvalOptions eo;
  eo.degree = opt.degree;

  struct Slot {
    std::vector<SuiteViolation> violations;
    std::vector<std::uint64_t> fired;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    slot.fired.assign(implications.size(), 0);
    std::map<std::string, PropertyReport> memo;
    auto report = [&](const char* prop) -> const PropertyReport& {
      auto it = memo.find(prop);
      if (it == memo.end())
        it = memo.emplace(prop, evaluate_property(members[i].s, prop, eo))
                 .first;
      return it->second;
    };
    for (std::size_t k = 0; k < implications.size(); ++k) {
      const Implication& imp = implications[k];
      bool hyp = true;
      for (const char* h : imp.hypotheses) hyp = hyp && report(h).holds();
      if (!hyp) continue;
      ++slot.fired[k];
      for (const char* c : imp.conclusions) {
        const PropertyReport& pr = report(c);
        if (!pr.holds())
          slot.violations.push_back({members[i].id, imp.claim, witness_of(pr)});
      }
    }
  });

  std::vector<std::uint64_t> fired(implications.size(), 0);
  for (Slot& slot : slots) {
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
    for (std::size_t k = 0; k < implications.size(); ++k)
      fired[k] += slot.fired[k];
  }
  json hits = json::object();
  for (std::size_t k = 0; k < implications.size(); ++k)
    hits[implications[k].claim] = fired[k];
  rep.data["hypothesis_hits"] = hits;
  return rep;
}

// ------------------------------------------------ triangular comparator guts

const char* const kTriDirections[6] = {
    "left_conditions_imply_zd",       "left_zd_implies_conditions",
    "right_conditions_imply_zd",      "right_zd_implies_conditions",
    "right_dual_conditions_imply_zd", "right_zd_implies_dual_conditions"};

// Brute-force one-sided zero-divisor membership over the triple carrier,
// computed straight from the component tables via
// (s1,m1,t1)(s2,m2,t2) = (s1 s2, s1 m2 + m1 t2, t1 t2).
struct TriOracle {
  std::uint32_t ns = 0, nm = 0, nt = 0;
  std::vector<char> left, right;

  std::size_t idx(ElementId s, ElementId m, ElementId t) const {
    return (static_cast<std::size_t>(s) * nm + m) * nt + t;
  }
};

TriOracle tri_oracle(const FiniteStructure& s, const Bisemimodule& m,
                     const FiniteStructure& t) {
  TriOracle o;
  o.ns = s.order;
  o.nm = m.module_order;
  o.nt = t.order;
  std::size_t total =
      static_cast<std::size_t>(o.ns) * o.nm * o.nt;
  o.left.assign(total, 0);
  o.right.assign(total, 0);
  for (ElementId s1 = 0; s1 < o.ns; ++s1)
    for (ElementId m1 = 0; m1 < o.nm; ++m1)
      for (ElementId t1 = 0; t1 < o.nt; ++t1) {
        bool x_zero = s1 == 0 && m1 == 0 && t1 == 0;
        for (ElementId s2 = 0; s2 < o.ns; ++s2)
          for (ElementId m2 = 0; m2 < o.nm; ++m2)
            for (ElementId t2 = 0; t2 < o.nt; ++t2) {
              bool y_zero = s2 == 0 && m2 == 0 && t2 == 0;
              if (x_zero && y_zero) continue;
              if (s.times(s1, s2) != 0 || t.times(t1, t2) != 0) continue;
              if (m.plus(m.act_left(s1, m2), m.act_right(m1, t2)) != 0)
                continue;
              if (!y_zero) o.left[o.idx(s1, m1, t1)] = 1;
              if (!x_zero) o.right[o.idx(s2, m2, t2)] = 1;
            }
      }
  return o;
}

void tally(TriangularComparison& out, std::size_t dir, bool antecedent,
           bool consequent, bool m_nonzero, ElementId s, ElementId m,
           ElementId t) {
  if (!antecedent) return;
  TriangularAgreement& a = out.directions[dir];
  ++a.checked;
  if (m_nonzero) ++a.checked_m_nonzero;
  if (consequent) {
    ++a.agreed;
    if (m_nonzero) ++a.agreed_m_nonzero;
  } else {
    out.mismatches.push_back({a.direction, s, m, t});
  }
}

json agreement_json(const TriangularAgreement& a) {
  json j;
  j["direction"] = a.direction;
  j["checked"] = a.checked;
  j["agreed"] = a.agreed;
  j["agreement"] = rate(a.agreed, a.checked);
  j["checked_m_nonzero"] = a.checked_m_nonzero;
  j["agreed_m_nonzero"] = a.agreed_m_nonzero;
  j["agreement_m_nonzero"] = rate(a.agreed_m_nonzero, a.checked_m_nonzero);
  return j;
}

}  // namespace

TriangularComparison compare_triangular_characterization(
    const FiniteStructure& s, const Bisemimodule& m, const FiniteStructure& t) {
  if (s.kind != Kind::semiring || t.kind != Kind::semiring)
    throw input_error("corner structures must be semirings");
  ValidationReport vs = validate_structure(s);
  if (!vs.valid)
    throw input_error("left corner invalid: " + vs.failures[0].axiom);
  ValidationReport vt = validate_structure(t);
  if (!vt.valid)
    throw input_error("right corner invalid: " + vt.failures[0].axiom);
  ValidationReport vm = validate_bisemimodule(s, m, t);
  if (!vm.valid)
    throw input_error("bisemimodule axiom " + vm.failures[0].axiom + " fails");

  TriOracle oracle = tri_oracle(s, m, t);

  ZeroDivisorSets zs = zero_divisor_sets(s);
  ZeroDivisorSets zt = zero_divisor_sets(t);
  std::vector<char> zl_s(s.order, 0), zr_s(s.order, 0);
  std::vector<char> zl_t(t.order, 0), zr_t(t.order, 0);
  for (ElementId e : zs.left) zl_s[e] = 1;
  for (ElementId e : zs.right) zr_s[e] = 1;
  for (ElementId e : zt.left) zl_t[e] = 1;
  for (ElementId e : zt.right) zr_t[e] = 1;

  // Nonzero annihilators of each corner element, plus whether a corner
  // element kills some nonzero module element from its side.
  std::vector<std::vector<ElementId>> annr_t(t.order), annl_t(t.order);
  for (ElementId a = 0; a < t.order; ++a)
    for (ElementId b = 1; b < t.order; ++b) {
      if (t.times(a, b) == 0) annr_t[a].push_back(b);
      if (t.times(b, a) == 0) annl_t[a].push_back(b);
    }
  std::vector<std::vector<ElementId>> annl_s(s.order);
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 1; b < s.order; ++b)
      if (s.times(b, a) == 0) annl_s[a].push_back(b);
  std::vector<char> s_kills_module(s.order, 0), module_kills_t(t.order, 0);
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId mm = 1; mm < m.module_order; ++mm)
      if (m.act_left(a, mm) == 0) {
        s_kills_module[a] = 1;
        break;
      }
  for (ElementId a = 0; a < t.order; ++a)
    for (ElementId mm = 1; mm < m.module_order; ++mm)
      if (m.act_right(mm, a) == 0) {
        module_kills_t[a] = 1;
        break;
      }

  TriangularComparison out;
  out.directions.resize(6);
  for (std::size_t d = 0; d < 6; ++d)
    out.directions[d].direction = kTriDirections[d];

  for (ElementId s1 = 0; s1 < s.order; ++s1)
    for (ElementId m1 = 0; m1 < m.module_order; ++m1)
      for (ElementId t1 = 0; t1 < t.order; ++t1) {
        auto killed_right_ann = [&](const std::vector<ElementId>& anns) {
          for (ElementId k : anns)
            if (m.act_right(m1, k) == 0) return true;
          return false;
        };
        auto killed_left_ann_s = [&](const std::vector<ElementId>& anns) {
          for (ElementId k : anns)
            if (m.act_left(k, m1) == 0) return true;
          return false;
        };
        // The second and third clauses are subsumed by the first in each
        // bundle; they stay spelled out so the comparison runs the
        // membership conditions exactly as they are stated.
        bool lit_left =
            zl_s[s1] ||
            (zl_s[s1] && s1 != 0 && zl_t[t1] && killed_right_ann(annr_t[t1])) ||
            (zl_s[s1] && s1 != 0 && zl_t[t1] && t1 != 0 && s_kills_module[s1]);
        bool lit_right =
            zr_s[s1] ||
            (zr_s[s1] && s1 != 0 && zr_t[t1] && killed_right_ann(annl_t[t1])) ||
            (zr_s[s1] && s1 != 0 && zr_t[t1] && t1 != 0 && s_kills_module[s1]);
        bool dual_right =
            zr_t[t1] ||
            (zr_t[t1] && t1 != 0 && zr_s[s1] && killed_left_ann_s(annl_s[s1])) ||
            (zr_t[t1] && t1 != 0 && zr_s[s1] && s1 != 0 && module_kills_t[t1]);
        bool oracle_left = oracle.left[oracle.idx(s1, m1, t1)] != 0;
        bool oracle_right = oracle.right[oracle.idx(s1, m1, t1)] != 0;
        bool mnz = m1 != 0;
        tally(out, 0, lit_left, oracle_left, mnz, s1, m1, t1);
        tally(out, 1, oracle_left, lit_left, mnz, s1, m1, t1);
        tally(out, 2, lit_right, oracle_right, mnz, s1, m1, t1);
        tally(out, 3, oracle_right, lit_right, mnz, s1, m1, t1);
        tally(out, 4, dual_right, oracle_right, mnz, s1, m1, t1);
        tally(out, 5, oracle_right, dual_right, mnz, s1, m1, t1);
      }
  return out;
}

json to_json(const TriangularComparison& c) {
  json dirs = json::array();
  for (const TriangularAgreement& a : c.directions)
    dirs.push_back(agreement_json(a));
  json mm = json::array();
  for (const TriangularMismatch& x : c.mismatches) {
    json j;
    j["claim"] = x.claim;
    j["s"] = x.s;
    j["m"] = x.m;
    j["t"] = x.t;
    mm.push_back(j);
  }
  json out;
  out["directions"] = dirs;
  out["mismatches"] = mm;
  return out;
}

namespace {

// ------------------------------------------------------------ suite runners

SuiteReport suite_reversible_equivalences(const SuiteOptions& opt) {
  static const std::vector<Implication> imps = {
      {"entire_implies_prime", {"entire"}, {"prime"}},
      {"entire_implies_reversible", {"entire"}, {"reversible"}},
      {"prime_and_reversible_implies_entire",
       {"prime", "reversible"},
       {"entire"}},
  };
  return implication_suite("reversible-equivalences",
                           Kind::semigroup_with_zero, 4, imps, opt);
}

SuiteReport suite_symmetric_chain(const SuiteOptions& opt) {
  static const std::vector<Implication> imps = {
      {"nilpotent_free_implies_semiprime", {"nilpotent_free"}, {"semiprime"}},
      {"nilpotent_free_implies_reversible", {"nilpotent_free"}, {"reversible"}},
      {"semiprime_and_reversible_implies_nilpotent_free",
       {"semiprime", "reversible"},
       {"nilpotent_free"}},
      {"nilpotent_free_implies_symmetric", {"nilpotent_free"}, {"symmetric"}},
      {"symmetric_implies_reversible", {"symmetric"}, {"reversible"}},
  };
  return implication_suite("symmetric-chain", Kind::monoid_with_zero, 4, imps,
                           opt);
}

SuiteReport suite_cohn(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "cohn";
  std::vector<Member> members;
  if (!opt.corpus.empty()) {
    members = corpus_members(opt, {});
  } else {
    std::uint32_t hi = opt.order ? opt.order : 4;
    members = enumerated_members(Kind::semigroup_with_zero, 2, hi);
    std::vector<Member> srs = enumerated_members(Kind::semiring, 2, hi);
    members.insert(members.end(), std::make_move_iterator(srs.begin()),
                   std::make_move_iterator(srs.end()));
  }
  rep.structures_checked = members.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool reversible = false;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    if (!is_reversible(members[i].s).holds()) return;
    slot.reversible = true;
    CohnReport cr = verify_cohn(members[i].s);
    for (const PropertyReport& check : cr.checks)
      if (check.fails())
        slot.violations.push_back(
            {members[i].id, check.property, witness_of(check)});
  });

  std::uint64_t reversible = 0;
  for (Slot& slot : slots) {
    if (slot.reversible) ++reversible;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  rep.data["reversible"] = reversible;
  return rep;
}

SuiteReport suite_eversible_criterion(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "eversible-criterion";
  std::vector<Member> members =
      opt.corpus.empty()
          ? enumerated_members(Kind::pn_semiring_distributive, 2,
                               opt.order ? opt.order : 3)
          : corpus_members(opt,
                           {Kind::pn_semiring_distributive, Kind::semiring});
  rep.structures_checked = members.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool restricted_agrees = false, literal_agrees = false;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    Condition2Report c2 = eversible_condition2(members[i].s);
    PropertyReport ev = is_eversible(members[i].s);
    slot.restricted_agrees = c2.restricted.holds() == ev.holds();
    slot.literal_agrees = c2.literal.holds() == ev.holds();
    if (!slot.restricted_agrees) {
      std::vector<std::int64_t> w = witness_of(c2.restricted);
      if (w.empty()) w = witness_of(ev);
      slot.violations.push_back(
          {members[i].id, "condition2_restricted_iff_eversible", w});
    }
  });

  std::uint64_t restricted = 0, literal = 0;
  for (Slot& slot : slots) {
    if (slot.restricted_agrees) ++restricted;
    if (slot.literal_agrees) ++literal;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  rep.data["checked"] = members.size();
  rep.data["restricted_agree"] = restricted;
  rep.data["literal_agree"] = literal;
  rep.data["restricted_agreement"] = rate(restricted, members.size());
  rep.data["literal_agreement"] = rate(literal, members.size());
  return rep;
}

SuiteReport suite_expectation(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "expectation";
  std::vector<Member> members = suite_members(opt, Kind::semiring, 3);

  EvalOptions eo;
  eo.degree = opt.degree;

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool nilpotent_free = false;
    std::uint64_t twisted = 0;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    const FiniteStructure& s = members[i].s;
    if (is_nilpotent_free(s).holds()) {
      slot.nilpotent_free = true;
      ExpectationSemiring e = expectation_semiring(s);
      PropertyReport r = is_reversible(e.structure);
      if (!r.holds())
        slot.violations.push_back({members[i].id,
                                   "expectation_reversible_over_nilpotent_free",
                                   witness_of(r)});
    }
    if (is_entire(s).holds() &&
        evaluate_property(s, "commutative", eo).holds()) {
      for (const Endomorphism& sigma : semiring_endomorphisms(s)) {
        if (!kernel_trivial(sigma)) continue;
        ++slot.twisted;
        ExpectationSemiring x = sigma_expectation(s, sigma);
        PropertyReport r = is_reversible(x.structure);
        if (!r.holds()) {
          std::vector<std::int64_t> w(sigma.map.begin(), sigma.map.end());
          for (std::int64_t v : witness_of(r)) w.push_back(v);
          slot.violations.push_back(
              {members[i].id, "twisted_expectation_reversible_over_entire", w});
        }
      }
    }
  });

  std::uint64_t nilpotent_free = 0, twisted = 0;
  for (Slot& slot : slots) {
    if (slot.nilpotent_free) ++nilpotent_free;
    twisted += slot.twisted;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }

  // Fixed spot check: the coordinate swap on the square of the two-element
  // lattice semiring twists the pair product into a carrier whose one-sided
  // zero-divisors coincide even though specific products only vanish one way.
  FiniteStructure b = builtin_structure("b");
  ProductStructure s2 = direct_product({b, b});
  Endomorphism swap;
  swap.map.resize(s2.structure.order);
  for (ElementId e = 0; e < s2.structure.order; ++e)
    swap.map[e] = s2.encode({s2.coords[e][1], s2.coords[e][0]});
  ExpectationSemiring x2 = sigma_expectation(s2.structure, swap);
  const std::string bid = "twisted-square/b";
  PropertyReport ev = is_eversible(x2.structure);
  if (!ev.holds())
    rep.violations.push_back({bid, "twisted_square_eversible", witness_of(ev)});
  PropertyReport rv = is_reversible(x2.structure);
  if (!rv.fails())
    rep.violations.push_back({bid, "twisted_square_not_reversible", {}});
  ElementId ca = s2.encode({0, 1});
  ElementId cb = s2.encode({1, 0});
  ElementId zz = s2.encode({0, 0});
  ElementId px = x2.encode(ca, ca);
  ElementId py = x2.encode(cb, ca);
  ElementId pxy = x2.structure.times(px, py);
  ElementId pyx = x2.structure.times(py, px);
  if (!(pxy == 0 && pyx == x2.encode(zz, ca) && pyx != 0))
    rep.violations.push_back(
        {bid, "twisted_square_witness", {px, py, pxy, pyx}});

  rep.structures_checked = members.size() + 1;
  rep.data["nilpotent_free"] = nilpotent_free;
  rep.data["twisted_pairs"] = twisted;
  return rep;
}

SuiteReport suite_armendariz(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "armendariz";
  std::vector<Member> members = suite_members(opt, Kind::semiring, 3);
  rep.structures_checked = members.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool zerosumfree = false;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    if (!is_zerosumfree(members[i].s).holds()) return;
    slot.zerosumfree = true;
    ArmendarizOptions ao;
    ao.degree = opt.degree;
    PropertyReport ar = is_armendariz_bounded(members[i].s, ao);
    if (ar.fails())
      slot.violations.push_back({members[i].id,
                                 "zerosumfree_implies_armendariz_bounded",
                                 witness_of(ar)});
  });

  std::uint64_t zerosumfree = 0;
  for (Slot& slot : slots) {
    if (slot.zerosumfree) ++zerosumfree;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  rep.data["zerosumfree"] = zerosumfree;
  rep.data["degree"] = opt.degree;
  return rep;
}

SuiteReport suite_poly_reversible(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "poly-reversible";
  std::vector<Member> members = suite_members(opt, Kind::semiring, 3);
  rep.structures_checked = members.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool eligible = false;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    const FiniteStructure& s = members[i].s;
    if (!is_zerosumfree(s).holds() || !is_reversible(s).holds()) return;
    slot.eligible = true;
    PropertyReport pr = polynomial_bounded_reversible(s, opt.degree);
    if (pr.fails())
      slot.violations.push_back(
          {members[i].id, "poly_reversible_bounded", witness_of(pr)});
    PowerSeriesSemiring ps = power_series_truncated(s, 3);
    PropertyReport sr = is_reversible(ps.structure);
    if (!sr.holds())
      slot.violations.push_back(
          {members[i].id, "series_truncated_reversible", witness_of(sr)});
    PropertyReport lv = laurent_zero_product_check(s, opt.degree);
    if (lv.verdict != pr.verdict) {
      std::vector<std::int64_t> w = witness_of(lv);
      if (w.empty()) w = witness_of(pr);
      slot.violations.push_back(
          {members[i].id, "laurent_matches_polynomial", w});
    }
  });

  std::uint64_t eligible = 0;
  for (Slot& slot : slots) {
    if (slot.eligible) ++eligible;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  rep.data["eligible"] = eligible;
  rep.data["degree"] = opt.degree;
  rep.data["series_terms"] = 3;
  return rep;
}

SuiteReport suite_localization(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "localization";
  std::vector<Member> members = suite_members(opt, Kind::semiring, 4);
  rep.structures_checked = members.size();

  EvalOptions eo;
  eo.degree = opt.degree;

  struct Slot {
    std::vector<SuiteViolation> violations;
    bool commutative = false;
    std::uint64_t sets = 0;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    const FiniteStructure& s = members[i].s;
    if (!evaluate_property(s, "commutative", eo).holds()) return;
    slot.commutative = true;
    bool sr = is_reversible(s).holds();
    bool se = is_eversible(s).holds();
    for (const std::vector<ElementId>& denoms : ore_sets(s)) {
      ++slot.sets;
      std::vector<std::int64_t> ow(denoms.begin(), denoms.end());
      Localization loc;
      try {
        loc = localize(s, denoms);
      } catch (const error&) {
        slot.violations.push_back({members[i].id, "localize_valid", ow});
        continue;
      }
      if (!validate_structure(loc.structure).valid)
        slot.violations.push_back(
            {members[i].id, "localization_result_valid", ow});
      std::vector<char> hit(loc.structure.order, 0);
      for (ElementId e = 0; e < s.order; ++e) {
        if (hit[loc.canonical[e]]) {
          slot.violations.push_back(
              {members[i].id, "localization_canonical_injective",
               {e, loc.canonical[e]}});
          break;
        }
        hit[loc.canonical[e]] = 1;
      }
      if (is_reversible(loc.structure).holds() != sr)
        slot.violations.push_back(
            {members[i].id, "localization_preserves_reversible", ow});
      if (is_eversible(loc.structure).holds() != se)
        slot.violations.push_back(
            {members[i].id, "localization_preserves_eversible", ow});
    }
  });

  std::uint64_t commutative = 0, sets = 0;
  for (Slot& slot : slots) {
    if (slot.commutative) ++commutative;
    sets += slot.sets;
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  rep.data["commutative"] = commutative;
  rep.data["ore_sets_tested"] = sets;
  return rep;
}

SuiteReport suite_laurent(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "laurent";
  std::vector<Member> members = suite_members(opt, Kind::semiring, 3);
  rep.structures_checked = members.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
  };
  std::vector<Slot> slots(members.size());
  parallel_for(members.size(), opt.jobs, [&](std::size_t i) {
    const FiniteStructure& s = members[i].s;
    PropertyReport pr = polynomial_bounded_reversible(s, opt.degree);
    PropertyReport lv = laurent_zero_product_check(s, opt.degree);
    if (lv.verdict != pr.verdict) {
      std::vector<std::int64_t> w = witness_of(lv);
      if (w.empty()) w = witness_of(pr);
      slots[i].violations.push_back(
          {members[i].id, "laurent_matches_polynomial", w});
    }
  });
  for (Slot& slot : slots)
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  rep.data["degree"] = opt.degree;
  return rep;
}

SuiteReport suite_graph(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "graph";
  std::vector<Member> members;
  if (!opt.corpus.empty()) {
    members = corpus_members(opt, {});
  } else {
    std::uint32_t hi = opt.order ? opt.order : 4;
    members = enumerated_members(Kind::semigroup_with_zero, 2, hi);
    std::vector<Member> srs = enumerated_members(Kind::semiring, 2, hi);
    members.insert(members.end(), std::make_move_iterator(srs.begin()),
                   std::make_move_iterator(srs.end()));
  }
  rep.structures_checked = members.size();

  std::vector<FiniteStructure> corpus;
  corpus.reserve(members.size());
  for (const Member& m : members) corpus.push_back(m.s);
  Calibration cal = calibrate_connectivity_notion(corpus);

  std::uint64_t diameter_max = 0;
  if (!cal.chosen) {
    rep.violations.push_back({"(corpus)", "calibration_exact_notion_exists", {}});
  } else {
    for (const Member& m : members) {
      ZdGraph g = build_graph(m.s);
      if (!connectivity(g, *cal.chosen)) continue;
      Diameter d = diameter(g, *cal.chosen);
      if (!d.finite || d.value > 3)
        rep.violations.push_back(
            {m.id, "diameter_at_most_three",
             {d.finite ? static_cast<std::int64_t>(d.value) : -1}});
      if (d.finite && d.value > diameter_max) diameter_max = d.value;
    }
  }
  rep.data["calibration"] = to_json(cal);
  rep.data["diameter_max"] = diameter_max;
  return rep;
}

SuiteReport suite_triangular(const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = "triangular";
  std::uint32_t cap = opt.order ? opt.order : 3;
  if (cap > 3)
    throw resource_error("triangular suite caps component orders at 3");

  std::vector<Member> pool = opt.corpus.empty()
                                 ? enumerated_members(Kind::semiring, 2, cap)
                                 : corpus_members(opt, {Kind::semiring});

  struct ModEntry {
    std::uint32_t order, index;
    OpTable add;
  };
  std::vector<ModEntry> mods;
  for (std::uint32_t n = 1; n <= cap; ++n) {
    std::uint32_t index = 0;
    std::vector<OpTable> tables = commutative_monoid_tables(n);
    for (OpTable& t : tables) mods.push_back({n, index++, std::move(t)});
  }

  std::vector<std::vector<std::vector<ActionTable>>> lefts(pool.size()),
      rights(pool.size());
  for (std::size_t p = 0; p < pool.size(); ++p) {
    lefts[p].resize(mods.size());
    rights[p].resize(mods.size());
    for (std::size_t q = 0; q < mods.size(); ++q) {
      lefts[p][q] = enumerate_left_actions(pool[p].s, mods[q].add);
      rights[p][q] = enumerate_right_actions(pool[p].s, mods[q].add);
    }
  }

  struct Triple {
    std::uint32_t si, mi, ti, li, ri;
  };
  std::vector<Triple> triples;
  std::uint64_t candidates = 0;
  for (std::uint32_t si = 0; si < pool.size(); ++si)
    for (std::uint32_t mi = 0; mi < mods.size(); ++mi)
      for (std::uint32_t ti = 0; ti < pool.size(); ++ti)
        for (std::uint32_t li = 0; li < lefts[si][mi].size(); ++li)
          for (std::uint32_t ri = 0; ri < rights[ti][mi].size(); ++ri) {
            ++candidates;
            Bisemimodule bm;
            bm.module_order = mods[mi].order;
            bm.module_add = mods[mi].add;
            bm.left_action = lefts[si][mi][li];
            bm.right_action = rights[ti][mi][ri];
            if (validate_bisemimodule(pool[si].s, bm, pool[ti].s).valid)
              triples.push_back({si, mi, ti, li, ri});
          }
  rep.structures_checked = triples.size();

  struct Slot {
    std::vector<SuiteViolation> violations;
    std::array<std::array<std::uint64_t, 4>, 6> tallies{};
    bool transfer_applicable = false;
  };
  std::vector<Slot> slots(triples.size());
  parallel_for(triples.size(), opt.jobs, [&](std::size_t n) {
    const Triple& tr = triples[n];
    const FiniteStructure& cs = pool[tr.si].s;
    const FiniteStructure& ct = pool[tr.ti].s;
    Bisemimodule bm;
    bm.module_order = mods[tr.mi].order;
    bm.module_add = mods[tr.mi].add;
    bm.left_action = lefts[tr.si][tr.mi][tr.li];
    bm.right_action = rights[tr.ti][tr.mi][tr.ri];
    std::string id = "tri/" + pool[tr.si].id + "/m" +
                     std::to_string(mods[tr.mi].order) + "." +
                     std::to_string(mods[tr.mi].index) + "/" + pool[tr.ti].id +
                     "/l" + std::to_string(tr.li) + "/r" +
                     std::to_string(tr.ri);
    Slot& slot = slots[n];

    TriangularComparison comp =
        compare_triangular_characterization(cs, bm, ct);
    for (std::size_t d = 0; d < comp.directions.size(); ++d) {
      const TriangularAgreement& a = comp.directions[d];
      slot.tallies[d][0] += a.checked;
      slot.tallies[d][1] += a.agreed;
      slot.tallies[d][2] += a.checked_m_nonzero;
      slot.tallies[d][3] += a.agreed_m_nonzero;
    }
    auto first_mismatch = [&](const char* direction, const char* claim) {
      for (const TriangularMismatch& mm : comp.mismatches)
        if (mm.claim == direction) {
          slot.violations.push_back({id, claim, {mm.s, mm.m, mm.t}});
          return;
        }
    };
    first_mismatch("left_conditions_imply_zd", "left_conditions_imply_left_zd");
    first_mismatch("right_conditions_imply_zd",
                   "right_conditions_imply_right_zd");
    first_mismatch("right_dual_conditions_imply_zd",
                   "right_dual_conditions_imply_right_zd");

    // Transfer of eversibility down to the corners, under module sides whose
    // only degenerate scalar is zero.  A one-element module never qualifies:
    // its side sets are empty rather than {0}.
    bool zs_trivial = bm.module_order >= 2, zt_trivial = bm.module_order >= 2;
    for (ElementId a = 1; a < cs.order && zs_trivial; ++a)
      for (ElementId mm = 1; mm < bm.module_order; ++mm)
        if (bm.act_left(a, mm) == 0) {
          zs_trivial = false;
          break;
        }
    for (ElementId a = 1; a < ct.order && zt_trivial; ++a)
      for (ElementId mm = 1; mm < bm.module_order; ++mm)
        if (bm.act_right(mm, a) == 0) {
          zt_trivial = false;
          break;
        }
    if (zs_trivial && zt_trivial) {
      TriOracle oracle = tri_oracle(cs, bm, ct);
      bool ev_tri = true;
      for (std::size_t e = 0; e < oracle.left.size() && ev_tri; ++e)
        ev_tri = oracle.left[e] == oracle.right[e];
      if (ev_tri) {
        slot.transfer_applicable = true;
        PropertyReport es = is_eversible(cs);
        PropertyReport et = is_eversible(ct);
        if (!es.holds() || !et.holds()) {
          const PropertyReport& bad = es.holds() ? et : es;
          std::vector<std::int64_t> w;
          w.push_back(es.holds() ? 1 : 0);
          for (std::int64_t v : witness_of(bad)) w.push_back(v);
          slot.violations.push_back(
              {id, "eversible_triangular_forces_eversible_components", w});
        }
      }
    }
  });

  std::array<std::array<std::uint64_t, 4>, 6> agg{};
  std::uint64_t applicable = 0;
  for (Slot& slot : slots) {
    if (slot.transfer_applicable) ++applicable;
    for (std::size_t d = 0; d < 6; ++d)
      for (std::size_t k = 0; k < 4; ++k) agg[d][k] += slot.tallies[d][k];
    for (auto& v : slot.violations) rep.violations.push_back(std::move(v));
  }
  json dirs = json::array();
  for (std::size_t d = 0; d < 6; ++d) {
    TriangularAgreement a;
    a.direction = kTriDirections[d];
    a.checked = agg[d][0];
    a.agreed = agg[d][1];
    a.checked_m_nonzero = agg[d][2];
    a.agreed_m_nonzero = agg[d][3];
    dirs.push_back(agreement_json(a));
  }
  rep.data["directions"] = dirs;
  rep.data["candidates"] = candidates;
  rep.data["component_pool"] = pool.size();
  rep.data["module_tables"] = mods.size();
  rep.data["transfer_applicable"] = applicable;
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<const char*, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<const char*, SuiteFn>> table = {
      {"reversible-equivalences", suite_reversible_equivalences},
      {"symmetric-chain", suite_symmetric_chain},
      {"cohn", suite_cohn},
      {"eversible-criterion", suite_eversible_criterion},
      {"expectation", suite_expectation},
      {"armendariz", suite_armendariz},
      {"poly-reversible", suite_poly_reversible},
      {"localization", suite_localization},
      {"laurent", suite_laurent},
      {"graph", suite_graph},
      {"triangular", suite_triangular},
  };
  return table;
}

// --------------------------------------------------------- hunt expressions

class ExprParser {
 public:
  using Pred = std::function<bool(const FiniteStructure&)>;

  explicit ExprParser(const std::string& text) {
    std::size_t i = 0;
    auto word_char = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
             c == '-';
    };
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '(' || c == ')') {
        toks_.push_back(std::string(1, c));
        ++i;
        continue;
      }
      if (word_char(c)) {
        std::size_t j = i;
        while (j < text.size() && word_char(text[j])) ++j;
        toks_.push_back(text.substr(i, j - i));
        i = j;
        continue;
      }
      throw input_error(std::string("unexpected character '") + c +
                        "' in expression");
    }
    if (toks_.empty()) throw input_error("empty expression");
  }

  Pred parse() {
    Pred p = parse_or();
    if (pos_ != toks_.size())
      throw input_error("unexpected token \"" + toks_[pos_] + "\"");
    return p;
  }

 private:
  bool at(const char* t) const {
    return pos_ < toks_.size() && toks_[pos_] == t;
  }

  Pred parse_or() {
    Pred l = parse_and();
    while (at("or")) {
      ++pos_;
      Pred r = parse_and();
      Pred prev = l;
      l = [prev, r](const FiniteStructure& s) { return prev(s) || r(s); };
    }
    return l;
  }

  Pred parse_and() {
    Pred l = parse_atom();
    while (at("and")) {
      ++pos_;
      Pred r = parse_atom();
      Pred prev = l;
      l = [prev, r](const FiniteStructure& s) { return prev(s) && r(s); };
    }
    return l;
  }

  Pred parse_atom() {
    if (at("not")) {
      ++pos_;
      Pred inner = parse_atom();
      return [inner](const FiniteStructure& s) { return !inner(s); };
    }
    if (at("(")) {
      ++pos_;
      Pred e = parse_or();
      if (!at(")")) throw input_error("expected ')' in expression");
      ++pos_;
      return e;
    }
    if (pos_ >= toks_.size()) throw input_error("expression ends early");
    std::string name = toks_[pos_];
    if (name == "and" || name == "or" || name == ")")
      throw input_error("unexpected token \"" + name + "\"");
    if (!property_registry().count(name))
      throw input_error("unknown property \"" + name + "\"");
    ++pos_;
    return [name](const FiniteStructure& s) {
      return evaluate_property(s, name).holds();
    };
  }

  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

json to_json(const SuiteReport& r) {
  json vs = json::array();
  for (const SuiteViolation& v : r.violations) {
    json jv;
    jv["structure"] = v.structure;
    jv["claim"] = v.claim;
    jv["witness"] = v.witness;
    vs.push_back(jv);
  }
  json j;
  j["suite"] = r.suite;
  j["structures_checked"] = r.structures_checked;
  j["violations"] = vs;
  j["data"] = r.data;
  return j;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& entry : suite_table()) out.push_back(entry.first);
  return out;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  for (const auto& entry : suite_table())
    if (name == entry.first) {
      auto start = std::chrono::steady_clock::now();
      SuiteReport rep = entry.second(opt);
      rep.elapsed_seconds = std::chrono::duration<double>(
                                std::chrono::steady_clock::now() - start)
                                .count();
      return rep;
    }
  throw input_error("unknown suite \"" + name + "\"");
}

HuntResult find_counterexample(const std::string& expression, Kind kind,
                               std::uint32_t max_order) {
  ExprParser parser(expression);
  ExprParser::Pred pred = parser.parse();
  if (max_order < 2) throw input_error("max order must be at least 2");
  HuntResult res;
  for (std::uint32_t n = 2; n <= max_order && !res.found; ++n) {
    EnumerationSpec spec;
    spec.kind = kind;
    spec.order = n;
    spec.up_to_iso = true;
    spec.allow_big = true;
    for_each_structure(spec, [&](const FiniteStructure& s) {
      ++res.scanned;
      if (pred(s)) {
        res.found = s;
        res.found_order = n;
        return false;
      }
      return true;
    });
  }
  return res;
}

json to_json(const HuntResult& r) {
  json j;
  j["found"] = r.found.has_value();
  j["scanned"] = r.scanned;
  j["order"] = r.found ? json(r.found_order) : json(nullptr);
  j["structure"] = r.found ? to_json(*r.found) : json(nullptr);
  return j;
}

}  // namespace zdlab
