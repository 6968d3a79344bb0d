#include "zdlab/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "zdlab/canonical.hpp"
#include "zdlab/properties.hpp"
#include "zdlab/validate.hpp"

namespace zdlab {

namespace {

constexpr ElementId kUnset = 0xFFFF;

// Multiplication tables are searched cell by cell; a placement survives only
// if every fully-determined associativity triple that touches it holds, so
// dead branches die at the first bad cell.
class MulSearch {
 public:
  MulSearch(std::uint32_t n, bool with_one) : n_(n), t_(n, kUnset) {
    for (ElementId x = 0; x < n; ++x) {
      t_.set(0, x, 0);
      t_.set(x, 0, 0);
    }
    if (with_one)
      for (ElementId x = 0; x < n; ++x) {
        t_.set(1, x, x);
        t_.set(x, 1, x);
      }
    ElementId first = with_one ? 2 : 1;
    for (ElementId i = first; i < n; ++i)
      for (ElementId j = first; j < n; ++j) free_.push_back({i, j});
  }

  void run(const std::function<bool(const OpTable&)>& emit) {
    stop_ = false;
    emit_ = &emit;
    descend(0);
  }

 private:
  bool known(ElementId i, ElementId j) const { return t_(i, j) != kUnset; }

  bool consistent_after(ElementId ci, ElementId cj) const {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b) {
        if (!known(a, b)) continue;
        ElementId ab = t_(a, b);
        for (ElementId c = 0; c < n_; ++c) {
          if (!known(b, c) || !known(ab, c)) continue;
          ElementId bc = t_(b, c);
          if (!known(a, bc)) continue;
          bool touches = (a == ci && b == cj) || (b == ci && c == cj) ||
                         (ab == ci && c == cj) || (a == ci && bc == cj);
          if (touches && t_(ab, c) != t_(a, bc)) return false;
        }
      }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == free_.size()) {
      if (!(*emit_)(t_)) stop_ = true;
      return;
    }
    auto [i, j] = free_[depth];
    for (ElementId v = 0; v < n_; ++v) {
      t_.set(i, j, v);
      if (consistent_after(i, j)) descend(depth + 1);
      if (stop_) break;
    }
    t_.set(i, j, kUnset);
  }

  std::uint32_t n_;
  OpTable t_;
  std::vector<std::pair<ElementId, ElementId>> free_;
  const std::function<bool(const OpTable&)>* emit_ = nullptr;
  bool stop_ = false;
};

// Commutative monoid tables (neutral 0): search the upper triangle, mirror
// as cells land, prune on determined associativity triples.
class AddMonoidSearch {
 public:
  explicit AddMonoidSearch(std::uint32_t n) : n_(n), t_(n, kUnset) {
    for (ElementId x = 0; x < n; ++x) {
      t_.set(0, x, x);
      t_.set(x, 0, x);
    }
    for (ElementId i = 1; i < n; ++i)
      for (ElementId j = i; j < n; ++j) free_.push_back({i, j});
  }

  void run(const std::function<bool(const OpTable&)>& emit) {
    stop_ = false;
    emit_ = &emit;
    descend(0);
  }

 private:
  bool known(ElementId i, ElementId j) const { return t_(i, j) != kUnset; }

  bool consistent() const {
    for (ElementId a = 0; a < n_; ++a)
      for (ElementId b = 0; b < n_; ++b) {
        if (!known(a, b)) continue;
        ElementId ab = t_(a, b);
        for (ElementId c = 0; c < n_; ++c) {
          if (!known(b, c) || !known(ab, c)) continue;
          if (!known(a, t_(b, c))) continue;
          if (t_(ab, c) != t_(a, t_(b, c))) return false;
        }
      }
    return true;
  }

  void descend(std::size_t depth) {
    if (stop_) return;
    if (depth == free_.size()) {
      if (!(*emit_)(t_)) stop_ = true;
      return;
    }
    auto [i, j] = free_[depth];
    for (ElementId v = 0; v < n_; ++v) {
      t_.set(i, j, v);
      t_.set(j, i, v);
      if (consistent()) descend(depth + 1);
      if (stop_) break;
    }
    t_.set(i, j, kUnset);
    t_.set(j, i, kUnset);
  }

  std::uint32_t n_;
  OpTable t_;
  std::vector<std::pair<ElementId, ElementId>> free_;
  const std::function<bool(const OpTable&)>* emit_ = nullptr;
  bool stop_ = false;
};

bool right_distributive(const OpTable& add, const OpTable& mul) {
  const std::uint32_t n = add.order();
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = 0; v < n; ++v)
      for (ElementId w = 0; w < n; ++w)
        if (mul(add(u, v), w) != add(mul(u, w), mul(v, w))) return false;
  return true;
}

bool left_distributive(const OpTable& add, const OpTable& mul) {
  const std::uint32_t n = add.order();
  for (ElementId u = 0; u < n; ++u)
    for (ElementId v = 0; v < n; ++v)
      for (ElementId w = 0; w < n; ++w)
        if (mul(u, add(v, w)) != add(mul(u, v), mul(u, w))) return false;
  return true;
}

void check_caps(const EnumerationSpec& spec) {
  if (spec.order < 2) throw input_error("order must be at least 2");
  bool mul_only = !kind_has_add(spec.kind);
  std::uint32_t cap = mul_only ? (spec.allow_big ? 5u : 4u) : 4u;
  if (spec.order > cap)
    throw resource_error("exhaustive enumeration capped at order " +
                         std::to_string(cap) + " for this kind");
}

bool passes_filters(const FiniteStructure& s,
                    const std::vector<std::string>& filters) {
  EvalOptions opt;
  for (const auto& name : filters)
    if (!evaluate_property(s, name, opt).holds()) return false;
  return true;
}

}  // namespace

void for_each_structure(
    const EnumerationSpec& spec,
    const std::function<bool(const FiniteStructure&)>& visit) {
  check_caps(spec);
  for (const auto& f : spec.filters)  // unknown names fail fast
    if (!property_registry().count(f))
      throw input_error("unknown property: " + f);

  std::set<std::vector<ElementId>> seen;  // canonical keys for up_to_iso
  auto offer = [&](FiniteStructure&& s) {
    if (spec.up_to_iso) {
      auto key = table_key(canonical_form(s));
      if (!seen.insert(std::move(key)).second) return true;
    }
    if (!passes_filters(s, spec.filters)) return true;
    return visit(s);
  };

  const bool with_one = kind_has_one(spec.kind);
  if (!kind_has_add(spec.kind)) {
    MulSearch search(spec.order, with_one);
    search.run([&](const OpTable& mul) {
      FiniteStructure s;
      s.kind = spec.kind;
      s.order = spec.order;
      s.zero = 0;
      if (with_one) s.one = 1;
      s.mul = mul;
      return offer(std::move(s));
    });
    return;
  }

  // Two-table kinds: the multiplication candidates are few, so collect them
  // once and walk additions in the outer loop to keep the stream ascending
  // by (add, mul) bytes.
  std::vector<OpTable> muls;
  MulSearch mul_search(spec.order, true);
  mul_search.run([&](const OpTable& mul) {
    muls.push_back(mul);
    return true;
  });

  const bool need_left = spec.kind == Kind::pn_semiring_left ||
                         spec.kind == Kind::pn_semiring_distributive ||
                         spec.kind == Kind::semiring;
  const bool need_right = spec.kind == Kind::pn_semiring_right ||
                          spec.kind == Kind::pn_semiring_distributive ||
                          spec.kind == Kind::semiring;

  auto try_adds = [&](const OpTable& add) {
    for (const auto& mul : muls) {
      if (need_right && !right_distributive(add, mul)) continue;
      if (need_left && !left_distributive(add, mul)) continue;
      FiniteStructure s;
      s.kind = spec.kind;
      s.order = spec.order;
      s.zero = 0;
      s.one = 1;
      s.add = add;
      s.mul = mul;
      if (!offer(std::move(s))) return false;
    }
    return true;
  };

  if (spec.kind == Kind::semiring) {
    AddMonoidSearch add_search(spec.order);
    add_search.run(try_adds);
    return;
  }

  // PN additions: any table with 0 two-sided neutral; plain odometer over
  // the (n-1)^2 free cells.
  const std::uint32_t n = spec.order;
  OpTable add(n, 0);
  for (ElementId x = 0; x < n; ++x) {
    add.set(0, x, x);
    add.set(x, 0, x);
  }
  for (;;) {
    if (!try_adds(add)) return;
    ElementId i = static_cast<ElementId>(n - 1), j = static_cast<ElementId>(n);
    bool carried = true;
    while (carried) {
      if (j == 1) {
        if (i == 1) return;
        --i;
        j = static_cast<ElementId>(n);
        continue;
      }
      --j;
      ElementId v = add(i, j);
      if (v + 1u < n) {
        add.set(i, j, static_cast<ElementId>(v + 1));
        carried = false;
      } else {
        add.set(i, j, 0);
      }
    }
  }
}

std::vector<FiniteStructure> enumerate_structures(const EnumerationSpec& spec) {
  std::vector<FiniteStructure> out;
  for_each_structure(spec, [&](const FiniteStructure& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<OpTable> commutative_monoid_tables(std::uint32_t order) {
  if (order == 0) throw input_error("order must be positive");
  if (order > 6) throw resource_error("monoid table enumeration capped at order 6");
  std::vector<OpTable> out;
  AddMonoidSearch search(order);
  search.run([&](const OpTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

FiniteStructure random_structure(Kind kind, std::uint32_t order,
                                 std::uint64_t seed) {
  if (order < 2) throw input_error("order must be at least 2");
  if (order > 16) throw resource_error("sampling capped at order 16");
  std::mt19937_64 rng(seed);
  auto draw = [&] { return static_cast<ElementId>(rng() % order); };
  const bool with_one = kind_has_one(kind);
  const bool with_add = kind_has_add(kind);

  for (int attempt = 0; attempt < 200000; ++attempt) {
    FiniteStructure s;
    s.kind = kind;
    s.order = order;
    s.zero = 0;
    if (with_one) s.one = 1;
    s.mul = OpTable(order, 0);
    for (ElementId x = 0; x < order; ++x)
      if (with_one) {
        s.mul.set(1, x, x);
        s.mul.set(x, 1, x);
      }
    ElementId first = with_one ? 2 : 1;
    for (ElementId i = first; i < order; ++i)
      for (ElementId j = first; j < order; ++j) s.mul.set(i, j, draw());
    if (with_add) {
      s.add = OpTable(order, 0);
      for (ElementId x = 0; x < order; ++x) {
        s.add->set(0, x, x);
        s.add->set(x, 0, x);
      }
      if (kind == Kind::semiring) {
        for (ElementId i = 1; i < order; ++i)
          for (ElementId j = i; j < order; ++j) {
            ElementId v = draw();
            s.add->set(i, j, v);
            s.add->set(j, i, v);
          }
      } else {
        for (ElementId i = 1; i < order; ++i)
          for (ElementId j = 1; j < order; ++j) s.add->set(i, j, draw());
      }
    }
    if (validate_structure(s).valid) return s;
  }
  throw resource_error(
      "rejection sampling budget exhausted; try a smaller order");
}

}  // namespace zdlab
