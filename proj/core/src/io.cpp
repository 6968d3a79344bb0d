#include "zdlab/io.hpp"

#include <fstream>

namespace zdlab {

using nlohmann::json;

namespace {

json table_to_json(const OpTable& t) {
  json rows = json::array();
  for (ElementId i = 0; i < t.order(); ++i) {
    json row = json::array();
    for (ElementId j = 0; j < t.order(); ++j) row.push_back(t(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

OpTable table_from_json(const json& j, std::uint32_t order, const char* op) {
  if (!j.is_array() || j.size() != order)
    throw input_error(std::string(op) + " table must have one row per element");
  OpTable t(order);
  for (std::uint32_t i = 0; i < order; ++i) {
    const json& row = j[i];
    if (!row.is_array() || row.size() != order)
      throw input_error(std::string(op) + " table row " + std::to_string(i) +
                        " has the wrong length");
    for (std::uint32_t j2 = 0; j2 < order; ++j2) {
      const json& cell = row[j2];
      if (!cell.is_number_integer())
        throw input_error(std::string(op) + " table holds a non-integer cell");
      auto v = cell.get<std::int64_t>();
      if (v < 0 || v >= static_cast<std::int64_t>(order))
        throw input_error(std::string(op) + " table cell (" +
                          std::to_string(i) + ", " + std::to_string(j2) +
                          ") = " + std::to_string(v) + " is out of range");
      t.set(static_cast<ElementId>(i), static_cast<ElementId>(j2),
            static_cast<ElementId>(v));
    }
  }
  return t;
}

}  // namespace

json to_json(const FiniteStructure& s) {
  json j;
  j["kind"] = kind_name(s.kind);
  j["order"] = s.order;
  j["zero"] = s.zero;
  if (s.one) j["one"] = *s.one;
  if (s.add) j["add"] = table_to_json(*s.add);
  j["mul"] = table_to_json(s.mul);
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

json to_json(const ValidationReport& r) {
  json j;
  j["valid"] = r.valid;
  json fs = json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"axiom", f.axiom},
                  {"witness", {f.witness[0], f.witness[1], f.witness[2]}}});
  j["failures"] = std::move(fs);
  return j;
}

FiniteStructure relabel(const FiniteStructure& s,
                        const std::vector<ElementId>& perm) {
  FiniteStructure out;
  out.kind = s.kind;
  out.order = s.order;
  auto map_table = [&](const OpTable& t) {
    OpTable r(t.order());
    for (ElementId i = 0; i < t.order(); ++i)
      for (ElementId j = 0; j < t.order(); ++j)
        r.set(perm[i], perm[j], perm[t(i, j)]);
    return r;
  };
  out.mul = map_table(s.mul);
  if (s.add) out.add = map_table(*s.add);
  out.zero = perm[s.zero];
  if (s.one) out.one = perm[*s.one];
  if (!s.labels.empty()) {
    out.labels.resize(s.order);
    for (ElementId i = 0; i < s.order; ++i) out.labels[perm[i]] = s.labels[i];
  }
  return out;
}

std::vector<ElementId> normalizing_permutation(std::uint32_t order,
                                               ElementId zero,
                                               std::optional<ElementId> one) {
  if (zero >= order) throw input_error("zero index out of range");
  if (one && (*one >= order || *one == zero))
    throw input_error("one index out of range or equal to zero");
  std::vector<ElementId> perm(order);
  ElementId next = (one ? 2 : 1);
  for (std::uint32_t i = 0; i < order; ++i) {
    if (i == zero)
      perm[i] = 0;
    else if (one && i == *one)
      perm[i] = 1;
    else
      perm[i] = next++;
  }
  return perm;
}

FiniteStructure normalize(const FiniteStructure& s, ElementId zero,
                          std::optional<ElementId> one) {
  auto perm = normalizing_permutation(s.order, zero, one);
  FiniteStructure raw = s;
  raw.zero = zero;
  raw.one = one;
  return relabel(raw, perm);
}

FiniteStructure structure_from_json(const json& j) {
  if (!j.is_object()) throw input_error("structure file must hold an object");
  std::string kind_str;
  std::uint32_t order = 0;
  try {
    kind_str = j.at("kind").get<std::string>();
    order = j.at("order").get<std::uint32_t>();
  } catch (const json::exception& e) {
    throw input_error(std::string("bad structure file: ") + e.what());
  }
  auto kind = kind_from_name(kind_str);
  if (!kind) throw input_error("unknown kind \"" + kind_str + "\"");
  if (order < 2 || order > kMaxTableOrder)
    throw input_error("order " + std::to_string(order) + " is out of range");

  FiniteStructure raw;
  raw.kind = *kind;
  raw.order = order;
  raw.mul = table_from_json(j.at("mul"), order, "mul");
  if (kind_has_add(*kind)) {
    if (!j.contains("add"))
      throw input_error(kind_str + " requires an add table");
    raw.add = table_from_json(j.at("add"), order, "add");
  } else if (j.contains("add")) {
    throw input_error(kind_str + " must not carry an add table");
  }

  ElementId zero = 0;
  std::optional<ElementId> one;
  try {
    auto z = j.at("zero").get<std::int64_t>();
    if (z < 0 || z >= static_cast<std::int64_t>(order))
      throw input_error("zero index out of range");
    zero = static_cast<ElementId>(z);
    if (kind_has_one(*kind)) {
      auto o = j.at("one").get<std::int64_t>();
      if (o < 0 || o >= static_cast<std::int64_t>(order))
        throw input_error("one index out of range");
      one = static_cast<ElementId>(o);
    } else if (j.contains("one")) {
      throw input_error(kind_str + " must not declare a one");
    }
  } catch (const json::exception& e) {
    throw input_error(std::string("bad structure file: ") + e.what());
  }
  if (one && *one == zero) throw input_error("zero and one must differ");

  if (j.contains("labels")) {
    try {
      raw.labels = j.at("labels").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
      throw input_error(std::string("bad labels: ") + e.what());
    }
    if (raw.labels.size() != order)
      throw input_error("label list length disagrees with order");
  }

  FiniteStructure s = normalize(raw, zero, one);
  s.check_well_formed();
  return s;
}

FiniteStructure load_structure(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw input_error("cannot open " + file.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw input_error(file.string() + ": " + e.what());
  }
  return structure_from_json(j);
}

void save_structure(const std::filesystem::path& file,
                    const FiniteStructure& s) {
  std::ofstream out(file);
  if (!out) throw input_error("cannot write " + file.string());
  out << to_json(s).dump(2) << '\n';
}

namespace {

std::vector<std::string> digit_labels(std::uint32_t n) {
  std::vector<std::string> l;
  for (std::uint32_t i = 0; i < n; ++i) l.push_back(std::to_string(i));
  return l;
}

FiniteStructure make_mod_semiring(std::uint32_t n) {
  FiniteStructure s;
  s.kind = Kind::semiring;
  s.order = n;
  s.one = 1;
  s.add = OpTable(n);
  s.mul = OpTable(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      s.add->set(i, j, static_cast<ElementId>((i + j) % n));
      s.mul.set(i, j, static_cast<ElementId>((i * j) % n));
    }
  s.labels = digit_labels(n);
  return s;
}

FiniteStructure make_boolean() {
  FiniteStructure s;
  s.kind = Kind::semiring;
  s.order = 2;
  s.one = 1;
  s.add = OpTable::from_rows({{0, 1}, {1, 1}});
  s.mul = OpTable::from_rows({{0, 0}, {0, 1}});
  s.labels = digit_labels(2);
  return s;
}

FiniteStructure make_capped_naturals(std::uint32_t cap) {
  // {0, 1, ..., cap} with saturating arithmetic.
  std::uint32_t n = cap + 1;
  FiniteStructure s;
  s.kind = Kind::semiring;
  s.order = n;
  s.one = 1;
  s.add = OpTable(n);
  s.mul = OpTable(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      s.add->set(i, j, static_cast<ElementId>(std::min(i + j, cap)));
      s.mul.set(i, j, static_cast<ElementId>(std::min(i * j, cap)));
    }
  s.labels = digit_labels(n);
  return s;
}

FiniteStructure make_null_semigroup(std::uint32_t n) {
  FiniteStructure s;
  s.kind = Kind::semigroup_with_zero;
  s.order = n;
  s.mul = OpTable(n, 0);
  s.labels = digit_labels(n);
  return s;
}

FiniteStructure make_mod_mul_monoid(std::uint32_t n) {
  FiniteStructure s;
  s.kind = Kind::monoid_with_zero;
  s.order = n;
  s.one = 1;
  s.mul = OpTable(n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      s.mul.set(i, j, static_cast<ElementId>((i * j) % n));
  s.labels = digit_labels(n);
  return s;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"b", "z2", "z3", "z4", "z6", "n2", "n3", "null2", "null3", "z4mul",
          "z6mul"};
}

FiniteStructure builtin_structure(const std::string& name) {
  if (name == "b") return make_boolean();
  if (name == "z2") return make_mod_semiring(2);
  if (name == "z3") return make_mod_semiring(3);
  if (name == "z4") return make_mod_semiring(4);
  if (name == "z6") return make_mod_semiring(6);
  if (name == "n2") return make_capped_naturals(2);
  if (name == "n3") return make_capped_naturals(3);
  if (name == "null2") return make_null_semigroup(2);
  if (name == "null3") return make_null_semigroup(3);
  if (name == "z4mul") return make_mod_mul_monoid(4);
  if (name == "z6mul") return make_mod_mul_monoid(6);
  throw input_error("unknown builtin \"" + name + "\"");
}

}  // namespace zdlab
