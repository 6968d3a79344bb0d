#include "zdlab/structure.hpp"

#include <algorithm>

namespace zdlab {

OpTable OpTable::from_rows(const std::vector<std::vector<ElementId>>& rows) {
  OpTable t(static_cast<std::uint32_t>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw input_error("table is not square");
    for (std::size_t j = 0; j < rows.size(); ++j)
      t.set(static_cast<ElementId>(i), static_cast<ElementId>(j), rows[i][j]);
  }
  return t;
}

bool OpTable::well_formed() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [this](ElementId v) { return v < order_; });
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::semigroup_with_zero: return "semigroup_with_zero";
    case Kind::monoid_with_zero: return "monoid_with_zero";
    case Kind::pn_semiring_right: return "pn_semiring_right";
    case Kind::pn_semiring_left: return "pn_semiring_left";
    case Kind::pn_semiring_distributive: return "pn_semiring_distributive";
    case Kind::semiring: return "semiring";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  for (Kind k : {Kind::semigroup_with_zero, Kind::monoid_with_zero,
                 Kind::pn_semiring_right, Kind::pn_semiring_left,
                 Kind::pn_semiring_distributive, Kind::semiring})
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

bool kind_has_add(Kind k) {
  return k != Kind::semigroup_with_zero && k != Kind::monoid_with_zero;
}

bool kind_has_one(Kind k) { return k != Kind::semigroup_with_zero; }

void FiniteStructure::check_well_formed() const {
  if (order < 2) throw input_error("order must be at least 2");
  if (order > kMaxTableOrder)
    throw resource_error("order " + std::to_string(order) +
                         " exceeds the table cap of " +
                         std::to_string(kMaxTableOrder));
  if (zero != 0) throw input_error("normal form requires zero at index 0");
  if (kind_has_one(kind)) {
    if (!one || *one != 1)
      throw input_error("normal form requires one at index 1");
  } else if (one) {
    throw input_error(std::string(kind_name(kind)) + " carries no one");
  }
  if (kind_has_add(kind) != has_add())
    throw input_error(std::string("kind ") + kind_name(kind) +
                      (kind_has_add(kind) ? " requires" : " forbids") +
                      " an addition table");
  if (mul.order() != order || !mul.well_formed())
    throw input_error("malformed multiplication table");
  if (add && (add->order() != order || !add->well_formed()))
    throw input_error("malformed addition table");
  if (!labels.empty() && labels.size() != order)
    throw input_error("label list length disagrees with order");
}

bool FiniteStructure::same_tables(const FiniteStructure& other) const {
  return kind == other.kind && order == other.order && mul == other.mul &&
         add == other.add;
}

FiniteStructure substructure(const FiniteStructure& s,
                             const std::vector<ElementId>& subset) {
  s.check_well_formed();
  std::vector<ElementId> elems = subset;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || elems.front() != 0)
    throw input_error("subset must contain the zero element");
  for (ElementId e : elems)
    if (e >= s.order) throw input_error("subset element out of range");
  if (elems.size() < 2)
    throw input_error("subset must keep at least two elements");

  bool keep_one = s.has_one() && std::binary_search(elems.begin(), elems.end(),
                                                    ElementId{1});
  Kind kind = keep_one ? s.kind : Kind::semigroup_with_zero;
  bool keep_add = kind_has_add(kind);

  std::vector<ElementId> back(s.order, 0);
  for (std::size_t i = 0; i < elems.size(); ++i)
    back[elems[i]] = static_cast<ElementId>(i);
  auto member = [&](ElementId v) {
    return std::binary_search(elems.begin(), elems.end(), v);
  };

  auto restrict_table = [&](const OpTable& t, const char* op) {
    OpTable r(static_cast<std::uint32_t>(elems.size()));
    for (ElementId a : elems)
      for (ElementId b : elems) {
        ElementId v = t(a, b);
        if (!member(v))
          throw closure_error(std::string("subset is not closed under ") + op +
                                  ": (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") maps outside",
                              a, b);
        r.set(back[a], back[b], back[v]);
      }
    return r;
  };

  FiniteStructure out;
  out.kind = kind;
  out.order = static_cast<std::uint32_t>(elems.size());
  out.zero = 0;
  if (kind_has_one(kind)) out.one = 1;
  out.mul = restrict_table(s.mul, "multiplication");
  if (keep_add) out.add = restrict_table(*s.add, "addition");
  if (!s.labels.empty())
    for (ElementId e : elems) out.labels.push_back(s.labels[e]);
  return out;
}

}  // namespace zdlab
