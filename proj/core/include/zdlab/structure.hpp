#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zdlab {

using ElementId = std::uint16_t;

// Largest carrier we are willing to materialize as explicit tables.
inline constexpr std::uint32_t kMaxTableOrder = 4096;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad tables, bad files, bad arguments).
struct input_error : error {
  using error::error;
};

// A requested computation exceeds the supported size/effort envelope.
struct resource_error : error {
  using error::error;
};

// A subset or operation escapes its carrier; carries the first escaping pair.
struct closure_error : input_error {
  closure_error(const std::string& what, ElementId a, ElementId b)
      : input_error(what), a(a), b(b) {}
  ElementId a, b;
};

// Square Cayley table, row-major: entry(i, j) is the product/sum of i and j
// in that order.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::uint32_t order, ElementId fill = 0)
      : order_(order), cells_(static_cast<std::size_t>(order) * order, fill) {}

  static OpTable from_rows(const std::vector<std::vector<ElementId>>& rows);

  std::uint32_t order() const { return order_; }

  ElementId operator()(ElementId i, ElementId j) const {
    return cells_[static_cast<std::size_t>(i) * order_ + j];
  }
  void set(ElementId i, ElementId j, ElementId v) {
    cells_[static_cast<std::size_t>(i) * order_ + j] = v;
  }

  // True when every cell is a valid element index.
  bool well_formed() const;

  const std::vector<ElementId>& cells() const { return cells_; }

  friend auto operator<=>(const OpTable&, const OpTable&) = default;

 private:
  std::uint32_t order_ = 0;
  std::vector<ElementId> cells_;
};

enum class Kind {
  semigroup_with_zero,
  monoid_with_zero,
  pn_semiring_right,
  pn_semiring_left,
  pn_semiring_distributive,
  semiring,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

// Whether carriers of this kind come with an addition table / a designated one.
bool kind_has_add(Kind k);
bool kind_has_one(Kind k);

// A finite algebraic carrier in normal form: element 0 is the designated
// zero and, for kinds that have one, element 1 is the designated one.  The
// loader permutes arbitrary input files into this form so the rest of the
// code never has to look at the `zero`/`one` fields to find them.
struct FiniteStructure {
  Kind kind = Kind::semigroup_with_zero;
  std::uint32_t order = 0;
  ElementId zero = 0;
  std::optional<ElementId> one;
  std::optional<OpTable> add;
  OpTable mul;

  // Optional human-readable element names (constructions fill these in;
  // enumerated structures leave them empty).
  std::vector<std::string> labels;

  bool has_add() const { return add.has_value(); }
  bool has_one() const { return one.has_value(); }

  ElementId times(ElementId a, ElementId b) const { return mul(a, b); }
  ElementId plus(ElementId a, ElementId b) const { return (*add)(a, b); }

  // Shape sanity: order bounds, table sizes, cell ranges, normal form.
  // Throws input_error on violation; does not check any algebraic axiom.
  void check_well_formed() const;

  // Tables-only comparison (labels are metadata).
  bool same_tables(const FiniteStructure& other) const;
};

struct AxiomFailure {
  std::string axiom;
  // Meaning depends on the axiom: associativity/distributivity use all three
  // slots, binary axioms use the first two, unary ones the first.
  std::array<ElementId, 3> witness{0, 0, 0};
};

struct ValidationReport {
  bool valid = true;
  std::vector<AxiomFailure> failures;  // lexicographically first witness per axiom
};

// Subalgebra on `subset` (which must contain 0), re-indexed in increasing
// order of the old ids.  If the structure's one is absent from the subset the
// result is demoted to a plain multiplicative semigroup with zero; closure is
// required only for the operations the result retains.
FiniteStructure substructure(const FiniteStructure& s,
                             const std::vector<ElementId>& subset);

}  // namespace zdlab
