#include "zdlab/bisemimodule.hpp"

#include <fstream>

namespace zdlab {

using nlohmann::json;

namespace {

struct Collector {
  ValidationReport report;
  bool fail(const char* axiom, ElementId a, ElementId b = 0, ElementId c = 0) {
    report.valid = false;
    report.failures.push_back({axiom, {a, b, c}});
    return false;
  }
};

}  // namespace

ValidationReport validate_bisemimodule(const FiniteStructure& s,
                                       const Bisemimodule& m,
                                       const FiniteStructure& t) {
  s.check_well_formed();
  t.check_well_formed();
  if (!s.has_add() || !t.has_add())
    throw input_error("scalar structures must carry addition");
  const std::uint32_t M = m.module_order;
  if (M < 1 || m.module_add.order() != M || !m.module_add.well_formed())
    throw input_error("malformed module addition table");
  if (m.left_action.rows != s.order || m.left_action.cols != M)
    throw input_error("left action has the wrong shape");
  if (m.right_action.rows != M || m.right_action.cols != t.order)
    throw input_error("right action has the wrong shape");
  for (ElementId v : m.left_action.cells)
    if (v >= M) throw input_error("left action cell out of range");
  for (ElementId v : m.right_action.cells)
    if (v >= M) throw input_error("right action cell out of range");

  Collector col;
  auto& rep = col.report;

  for (ElementId a = 0; a < M && rep.valid; ++a)
    for (ElementId b = 0; b < M && rep.valid; ++b)
      for (ElementId c = 0; c < M; ++c)
        if (m.plus(m.plus(a, b), c) != m.plus(a, m.plus(b, c))) {
          col.fail("module_add_associative", a, b, c);
          break;
        }
  for (ElementId a = 0; a < M && rep.valid; ++a)
    for (ElementId b = static_cast<ElementId>(a + 1); b < M; ++b)
      if (m.plus(a, b) != m.plus(b, a)) {
        col.fail("module_add_commutative", a, b);
        break;
      }
  for (ElementId a = 0; a < M; ++a)
    if (m.plus(0, a) != a || m.plus(a, 0) != a) {
      col.fail("module_add_neutral", a);
      break;
    }
  if (!rep.valid) return rep;

  // Left action laws.
  for (ElementId x = 0; x < s.order; ++x) {
    if (m.act_left(x, 0) != 0) return col.fail("left_action_zero_module", x), rep;
  }
  for (ElementId a = 0; a < M; ++a) {
    if (m.act_left(0, a) != 0) return col.fail("left_action_zero_scalar", a), rep;
    if (m.act_left(1, a) != a) return col.fail("left_action_one", a), rep;
  }
  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId a = 0; a < M; ++a)
      for (ElementId b = 0; b < M; ++b)
        if (m.act_left(x, m.plus(a, b)) !=
            m.plus(m.act_left(x, a), m.act_left(x, b)))
          return col.fail("left_action_additive_in_module", x, a, b), rep;
  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId y = 0; y < s.order; ++y) {
      for (ElementId a = 0; a < M; ++a) {
        if (m.act_left(s.plus(x, y), a) !=
            m.plus(m.act_left(x, a), m.act_left(y, a)))
          return col.fail("left_action_additive_in_scalar", x, y, a), rep;
        if (m.act_left(s.times(x, y), a) != m.act_left(x, m.act_left(y, a)))
          return col.fail("left_action_mul_compat", x, y, a), rep;
      }
    }

  // Right action laws (mirror image).
  for (ElementId x = 0; x < t.order; ++x) {
    if (m.act_right(0, x) != 0) return col.fail("right_action_zero_module", x), rep;
  }
  for (ElementId a = 0; a < M; ++a) {
    if (m.act_right(a, 0) != 0) return col.fail("right_action_zero_scalar", a), rep;
    if (m.act_right(a, 1) != a) return col.fail("right_action_one", a), rep;
  }
  for (ElementId a = 0; a < M; ++a)
    for (ElementId b = 0; b < M; ++b)
      for (ElementId x = 0; x < t.order; ++x)
        if (m.act_right(m.plus(a, b), x) !=
            m.plus(m.act_right(a, x), m.act_right(b, x)))
          return col.fail("right_action_additive_in_module", a, b, x), rep;
  for (ElementId a = 0; a < M; ++a)
    for (ElementId x = 0; x < t.order; ++x)
      for (ElementId y = 0; y < t.order; ++y) {
        if (m.act_right(a, t.plus(x, y)) !=
            m.plus(m.act_right(a, x), m.act_right(a, y)))
          return col.fail("right_action_additive_in_scalar", a, x, y), rep;
        if (m.act_right(a, t.times(x, y)) !=
            m.act_right(m.act_right(a, x), y))
          return col.fail("right_action_mul_compat", a, x, y), rep;
      }

  // The two actions must associate through the middle.
  for (ElementId x = 0; x < s.order; ++x)
    for (ElementId a = 0; a < M; ++a)
      for (ElementId y = 0; y < t.order; ++y)
        if (m.act_right(m.act_left(x, a), y) !=
            m.act_left(x, m.act_right(a, y)))
          return col.fail("action_compatibility", x, a, y), rep;

  return rep;
}

Bisemimodule regular_bisemimodule(const FiniteStructure& s) {
  s.check_well_formed();
  if (!s.has_add())
    throw input_error("regular bisemimodule needs an additive structure");
  Bisemimodule m;
  m.module_order = s.order;
  m.module_add = *s.add;
  m.left_action = ActionTable(s.order, s.order);
  m.right_action = ActionTable(s.order, s.order);
  for (ElementId a = 0; a < s.order; ++a)
    for (ElementId b = 0; b < s.order; ++b) {
      m.left_action.set(a, b, s.times(a, b));
      m.right_action.set(a, b, s.times(a, b));
    }
  return m;
}

json to_json(const Bisemimodule& m) {
  auto rect = [](const ActionTable& t) {
    json rows = json::array();
    for (std::uint32_t r = 0; r < t.rows; ++r) {
      json row = json::array();
      for (std::uint32_t c = 0; c < t.cols; ++c) row.push_back(t(r, c));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  json add = json::array();
  for (ElementId i = 0; i < m.module_add.order(); ++i) {
    json row = json::array();
    for (ElementId j = 0; j < m.module_add.order(); ++j)
      row.push_back(m.module_add(i, j));
    add.push_back(std::move(row));
  }
  return {{"module_order", m.module_order},
          {"module_add", add},
          {"left_action", rect(m.left_action)},
          {"right_action", rect(m.right_action)}};
}

Bisemimodule bisemimodule_from_json(const json& j) {
  Bisemimodule m;
  try {
    m.module_order = j.at("module_order").get<std::uint32_t>();
    if (m.module_order < 1 || m.module_order > kMaxTableOrder)
      throw input_error("module_order out of range");
    auto read_rect = [&](const json& rows, const char* what) {
      if (!rows.is_array() || rows.empty())
        throw input_error(std::string(what) + " must be a non-empty matrix");
      ActionTable t(static_cast<std::uint32_t>(rows.size()),
                    static_cast<std::uint32_t>(rows[0].size()));
      for (std::uint32_t r = 0; r < t.rows; ++r) {
        if (!rows[r].is_array() || rows[r].size() != t.cols)
          throw input_error(std::string(what) + " is ragged");
        for (std::uint32_t c = 0; c < t.cols; ++c) {
          auto v = rows[r][c].get<std::int64_t>();
          if (v < 0 || v >= static_cast<std::int64_t>(m.module_order))
            throw input_error(std::string(what) + " cell out of range");
          t.set(r, c, static_cast<ElementId>(v));
        }
      }
      return t;
    };
    const json& add = j.at("module_add");
    if (!add.is_array() || add.size() != m.module_order)
      throw input_error("module_add must be square of module_order");
    m.module_add = OpTable(m.module_order);
    for (std::uint32_t r = 0; r < m.module_order; ++r) {
      if (!add[r].is_array() || add[r].size() != m.module_order)
        throw input_error("module_add is ragged");
      for (std::uint32_t c = 0; c < m.module_order; ++c) {
        auto v = add[r][c].get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(m.module_order))
          throw input_error("module_add cell out of range");
        m.module_add.set(static_cast<ElementId>(r), static_cast<ElementId>(c),
                         static_cast<ElementId>(v));
      }
    }
    m.left_action = read_rect(j.at("left_action"), "left_action");
    m.right_action = read_rect(j.at("right_action"), "right_action");
  } catch (const json::exception& e) {
    throw input_error(std::string("bad bisemimodule file: ") + e.what());
  }
  return m;
}

Bisemimodule load_bisemimodule(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw input_error("cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(file.string() + ": " + e.what());
  }
  return bisemimodule_from_json(j);
}

namespace {

// Shared odometer over the free rows/cols of an action candidate.
template <typename Emit>
void scan_actions(std::uint32_t scalar_order, std::uint32_t module_order,
                  Emit&& emit) {
  std::uint32_t free_scalars = scalar_order - 2;
  std::size_t cells = static_cast<std::size_t>(free_scalars) * module_order;
  std::vector<ElementId> v(cells, 0);
  for (;;) {
    emit(v);
    std::size_t i = cells;
    while (i-- > 0) {
      if (++v[i] < module_order) break;
      v[i] = 0;
      if (i == 0) return;
    }
    if (cells == 0) return;
  }
}

}  // namespace

std::vector<ActionTable> enumerate_left_actions(const FiniteStructure& s,
                                                const OpTable& add) {
  s.check_well_formed();
  if (!s.has_add()) throw input_error("scalar structure must carry addition");
  const std::uint32_t M = add.order();
  std::vector<ActionTable> out;
  scan_actions(s.order, M, [&](const std::vector<ElementId>& free_cells) {
    ActionTable t(s.order, M);
    for (ElementId a = 0; a < M; ++a) t.set(1, a, a);  // 1 m = m; 0 m = 0
    std::size_t k = 0;
    for (std::uint32_t x = 2; x < s.order; ++x)
      for (ElementId a = 0; a < M; ++a) t.set(x, a, free_cells[k++]);

    for (std::uint32_t x = 0; x < s.order; ++x)
      if (t(x, 0) != 0) return;
    for (std::uint32_t x = 0; x < s.order; ++x)
      for (ElementId a = 0; a < M; ++a)
        for (ElementId b = 0; b < M; ++b)
          if (t(x, add(a, b)) != add(t(x, a), t(x, b))) return;
    for (std::uint32_t x = 0; x < s.order; ++x)
      for (std::uint32_t y = 0; y < s.order; ++y)
        for (ElementId a = 0; a < M; ++a) {
          if (t(s.plus(static_cast<ElementId>(x), static_cast<ElementId>(y)),
                a) != add(t(x, a), t(y, a)))
            return;
          if (t(s.times(static_cast<ElementId>(x), static_cast<ElementId>(y)),
                a) != t(x, t(y, a)))
            return;
        }
    out.push_back(std::move(t));
  });
  return out;
}

std::vector<ActionTable> enumerate_right_actions(const FiniteStructure& t,
                                                 const OpTable& add) {
  t.check_well_formed();
  if (!t.has_add()) throw input_error("scalar structure must carry addition");
  const std::uint32_t M = add.order();
  std::vector<ActionTable> out;
  scan_actions(t.order, M, [&](const std::vector<ElementId>& free_cells) {
    ActionTable a(M, t.order);
    for (ElementId m = 0; m < M; ++m) a.set(m, 1, m);  // m 1 = m; m 0 = 0
    std::size_t k = 0;
    for (std::uint32_t x = 2; x < t.order; ++x)
      for (ElementId m = 0; m < M; ++m) a.set(m, x, free_cells[k++]);

    for (std::uint32_t x = 0; x < t.order; ++x)
      if (a(0, x) != 0) return;
    for (ElementId m = 0; m < M; ++m)
      for (ElementId n = 0; n < M; ++n)
        for (std::uint32_t x = 0; x < t.order; ++x)
          if (a(add(m, n), x) != add(a(m, x), a(n, x))) return;
    for (ElementId m = 0; m < M; ++m)
      for (std::uint32_t x = 0; x < t.order; ++x)
        for (std::uint32_t y = 0; y < t.order; ++y) {
          if (a(m, t.plus(static_cast<ElementId>(x),
                          static_cast<ElementId>(y))) !=
              add(a(m, x), a(m, y)))
            return;
          if (a(m, t.times(static_cast<ElementId>(x),
                           static_cast<ElementId>(y))) != a(a(m, x), y))
            return;
        }
    out.push_back(std::move(a));
  });
  return out;
}

}  // namespace zdlab
