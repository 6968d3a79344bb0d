#pragma once

#include <filesystem>

#include <json.hpp>

#include "zdlab/structure.hpp"

namespace zdlab {

// Rectangular lookup table for scalar actions.
struct ActionTable {
  std::uint32_t rows = 0, cols = 0;
  std::vector<ElementId> cells;

  ActionTable() = default;
  ActionTable(std::uint32_t r, std::uint32_t c, ElementId fill = 0)
      : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, fill) {}

  ElementId operator()(std::uint32_t r, std::uint32_t c) const {
    return cells[static_cast<std::size_t>(r) * cols + c];
  }
  void set(std::uint32_t r, std::uint32_t c, ElementId v) {
    cells[static_cast<std::size_t>(r) * cols + c] = v;
  }

  friend auto operator<=>(const ActionTable&, const ActionTable&) = default;
};

// Commutative additive monoid M (neutral element at index 0) together with a
// left action of a semiring S (rows = S elements) and a right action of a
// semiring T (cols = T elements), written m |-> s m and m |-> m t.
struct Bisemimodule {
  std::uint32_t module_order = 0;
  OpTable module_add;
  ActionTable left_action;   // |S| x |M| -> M
  ActionTable right_action;  // |M| x |T| -> M

  ElementId plus(ElementId m, ElementId n) const { return module_add(m, n); }
  ElementId act_left(ElementId s, ElementId m) const {
    return left_action(s, m);
  }
  ElementId act_right(ElementId m, ElementId t) const {
    return right_action(m, t);
  }
};

// Checks the additive monoid axioms, both unit/zero/associativity laws of
// each action, additivity in each argument, and the mixed associativity
// (s m) t = s (m t).  Scalar structures must be valid semirings themselves;
// that is the caller's business.
ValidationReport validate_bisemimodule(const FiniteStructure& s,
                                       const Bisemimodule& m,
                                       const FiniteStructure& t);

// S viewed as an (S, S)-bisemimodule over itself.
Bisemimodule regular_bisemimodule(const FiniteStructure& s);

nlohmann::json to_json(const Bisemimodule& m);
Bisemimodule bisemimodule_from_json(const nlohmann::json& j);
Bisemimodule load_bisemimodule(const std::filesystem::path& file);

// All valid left actions of `s` on the additive monoid `add` (respectively
// right actions of `t`), in lexicographic cell order.  Rows for scalars 0
// and 1 are forced by the axioms, so the search space is tiny.
std::vector<ActionTable> enumerate_left_actions(const FiniteStructure& s,
                                                const OpTable& add);
std::vector<ActionTable> enumerate_right_actions(const FiniteStructure& t,
                                                 const OpTable& add);

}  // namespace zdlab
