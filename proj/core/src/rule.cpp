#include "zdlab/rule.hpp"

#include <map>

namespace zdlab {

std::vector<RuleZdEntry> rule_zero_divisor_scan(const RuleStructure& s,
                                                std::uint32_t bound) {
  auto elems = s.enumerate(bound);
  if (elems.empty() || elems.front() != s.zero)
    throw input_error("rule enumerator must list zero first");

  std::vector<RuleZdEntry> out;
  out.reserve(elems.size());
  for (const auto& e : elems) {
    RuleZdEntry entry;
    entry.element = e;
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (!entry.left_witness && s.mul(e, elems[i]) == s.zero)
        entry.left_witness = elems[i];
      if (!entry.right_witness && s.mul(elems[i], e) == s.zero)
        entry.right_witness = elems[i];
      if (entry.left_witness && entry.right_witness) break;
    }
    entry.left = entry.left_witness ? Membership::yes : Membership::unknown;
    entry.right = entry.right_witness ? Membership::yes : Membership::unknown;
    // A witness is definitive; hooks only get to settle the open cases.
    if (entry.left == Membership::unknown && s.left_zd_hook)
      if (auto v = s.left_zd_hook(e))
        entry.left = *v ? Membership::yes : Membership::no;
    if (entry.right == Membership::unknown && s.right_zd_hook)
      if (auto v = s.right_zd_hook(e))
        entry.right = *v ? Membership::yes : Membership::no;
    out.push_back(std::move(entry));
  }
  return out;
}

PropertyReport is_eversible(const RuleStructure& s, std::uint32_t bound) {
  PropertyReport r;
  r.property = "eversible";
  r.bound = bound;
  for (const auto& e : rule_zero_divisor_scan(s, bound)) {
    bool one_sided = (e.left == Membership::yes && e.right == Membership::no) ||
                     (e.left == Membership::no && e.right == Membership::yes);
    if (one_sided) {
      r.verdict = Verdict::fails;
      r.witness = e.element;
      return r;
    }
  }
  r.verdict = Verdict::unknown_at_bound;
  return r;
}

PropertyReport is_reversible(const RuleStructure& s, std::uint32_t bound) {
  PropertyReport r;
  r.property = "reversible";
  r.bound = bound;
  auto elems = s.enumerate(bound);
  for (const auto& a : elems)
    for (const auto& b : elems)
      if (s.mul(a, b) == s.zero && s.mul(b, a) != s.zero) {
        r.verdict = Verdict::fails;
        r.witness.emplace();
        r.witness->insert(r.witness->end(), a.begin(), a.end());
        r.witness->insert(r.witness->end(), b.begin(), b.end());
        return r;
      }
  r.verdict = Verdict::unknown_at_bound;
  return r;
}

namespace {

// Upper triangular 2x2 matrices [[a, b], [0, c]] with a a non-negative
// integer and b, c residues mod 2, under matrix multiplication.  Encoded as
// (a, b, c).  The interesting feature: multiplying the top-left entry happens
// in the naturals, where x a = 0 forces x = 0 whenever a != 0, while the
// mod-2 entries can still swallow even contributions.  That makes some
// elements left zero-divisors without being right zero-divisors.
RuleStructure make_tri2_n0_z2() {
  using Elem = RuleStructure::Elem;
  RuleStructure s;
  s.name = "tri2-n0-z2";
  s.zero = {0, 0, 0};
  s.one = {1, 0, 1};
  s.mul = [](const Elem& x, const Elem& y) -> Elem {
    return {x[0] * y[0], ((x[0] % 2) * y[1] + x[1] * y[2]) % 2, x[2] * y[2]};
  };
  s.enumerate = [](std::uint32_t bound) {
    std::vector<Elem> out;
    out.reserve(static_cast<std::size_t>(bound + 1) * 4);
    for (std::int64_t a = 0; a <= bound; ++a)
      for (std::int64_t b = 0; b <= 1; ++b)
        for (std::int64_t c = 0; c <= 1; ++c) out.push_back({a, b, c});
    return out;
  };
  // x [[a,b],[0,c]] = 0 reads [[x a, x b + y c], [0, z c]] = 0 entrywise.
  // With a != 0, x a = 0 forces x = 0 in the naturals; with c != 0, z c = 0
  // then y c = 0 force z = y = 0 mod 2.  So no nonzero left factor exists
  // and the element is conclusively not a right zero-divisor.  When a = 0 or
  // c = 0 a witness does exist, and the scan will find it on its own.
  s.right_zd_hook = [](const Elem& e) -> std::optional<bool> {
    if (e[0] != 0 && e[2] != 0) return false;
    return std::nullopt;
  };
  return s;
}

}  // namespace

std::vector<std::string> rule_carrier_names() { return {"tri2-n0-z2"}; }

const RuleStructure& rule_carrier(const std::string& name) {
  static const std::map<std::string, RuleStructure> reg = [] {
    std::map<std::string, RuleStructure> m;
    m["tri2-n0-z2"] = make_tri2_n0_z2();
    return m;
  }();
  auto it = reg.find(name);
  if (it == reg.end())
    throw input_error("unknown rule carrier \"" + name + "\"");
  return it->second;
}

}  // namespace zdlab
