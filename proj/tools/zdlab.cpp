// Command-line entry point.  Every subcommand prints one JSON report on
// stdout (or to -o PATH) and a short prose summary on stderr; timings only
// ever appear on stderr so identical invocations give byte-identical
// reports.
//
// Exit codes: 0 success, 1 a verify suite found violations, 2 bad input or
// failed validation, 3 resource limits.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdlab/bisemimodule.hpp"
#include "zdlab/constructions.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/parallel.hpp"
#include "zdlab/polynomial.hpp"
#include "zdlab/properties.hpp"
#include "zdlab/rule.hpp"
#include "zdlab/structure.hpp"
#include "zdlab/suites.hpp"
#include "zdlab/validate.hpp"
#include "zdlab/zdgraph.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zdlab;

namespace {

struct GlobalOpts {
  unsigned jobs = default_jobs();
  std::uint64_t seed = 0;
  std::uint32_t bound = 50;
  std::uint32_t degree = 2;
  bool no_validate = false;
  std::string out_path;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void note(const std::string& line, Clock::time_point t0) {
  std::fprintf(stderr, "%s (%.3f s)\n", line.c_str(), seconds_since(t0));
}

void emit(const json& j, const GlobalOpts& g) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (g.out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
  } else {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw input_error("cannot open output file " + g.out_path);
    f << text;
  }
}

// "builtin:<name>" or a structure file path.
FiniteStructure read_structure(const std::string& ref) {
  if (ref.rfind("builtin:", 0) == 0) return builtin_structure(ref.substr(8));
  return load_structure(ref);
}

FiniteStructure load_input(const std::string& ref, const GlobalOpts& g) {
  FiniteStructure s = read_structure(ref);
  if (!g.no_validate) {
    ValidationReport r = validate_structure(s);
    if (!r.valid) {
      std::string msg = "structure " + ref + " fails validation: ";
      msg += r.failures[0].axiom;
      throw input_error(msg);
    }
  }
  return s;
}

Kind parse_kind(const std::string& name) {
  std::optional<Kind> k = kind_from_name(name);
  if (!k) throw input_error("unknown kind \"" + name + "\"");
  return *k;
}

std::vector<std::string> default_props(Kind kind) {
  std::vector<std::string> names = {"reversible", "eversible",     "entire",
                                    "prime",      "semiprime",     "nilpotent_free",
                                    "symmetric",  "commutative"};
  if (kind_has_add(kind)) {
    names.push_back("zerosumfree");
    names.push_back("armendariz");
  }
  return names;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::yes: return "yes";
    case Membership::no: return "no";
    default: return "unknown";
  }
}

json elem_json(const RuleStructure::Elem& e) { return json(e); }

// Raw tables of both table-backed kinds used for notion calibration.
std::vector<FiniteStructure> calibration_corpus(std::uint32_t max_order) {
  std::vector<FiniteStructure> out;
  for (Kind kind : {Kind::semigroup_with_zero, Kind::semiring})
    for (std::uint32_t n = 2; n <= max_order; ++n) {
      EnumerationSpec spec;
      spec.kind = kind;
      spec.order = n;
      for_each_structure(spec, [&](const FiniteStructure& s) {
        out.push_back(s);
        return true;
      });
    }
  return out;
}

std::vector<FiniteStructure> load_corpus_dir(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw input_error("corpus path is not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<FiniteStructure> out;
  out.reserve(files.size());
  for (const fs::path& f : files) out.push_back(load_structure(f));
  return out;
}

int run_cli(int argc, char** argv) {
  GlobalOpts g;
  int exit_code = 0;

  CLI::App app{
      "Verification workbench for zero-divisor structure in finite "
      "semigroups, pn-semirings and semirings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--jobs", g.jobs, "worker threads for suites and scans");
  app.add_option("--seed", g.seed, "seed for sampled generation");
  app.add_option("--bound", g.bound,
                 "element bound for rule-backed carrier scans");
  app.add_option("--degree", g.degree, "degree cap for polynomial checks");
  app.add_flag("--no-validate", g.no_validate,
               "accept structure files without checking their axioms");
  app.add_option("-o,--output", g.out_path,
                 "write the JSON report here (enumerate: output directory)");

  // ------------------------------------------------------------- validate
  auto* cmd_validate =
      app.add_subcommand("validate", "Check the axioms of structure files");
  std::vector<std::string> val_files;
  cmd_validate->add_option("files", val_files, "structure files or builtin:<name>")
      ->required();
  cmd_validate->callback([&] {
    auto t0 = Clock::now();
    std::uint64_t invalid = 0;
    json out;
    if (val_files.size() == 1) {
      ValidationReport r = validate_structure(read_structure(val_files[0]));
      if (!r.valid) ++invalid;
      out = to_json(r);
    } else {
      out = json::array();
      for (const std::string& f : val_files) {
        ValidationReport r = validate_structure(read_structure(f));
        if (!r.valid) ++invalid;
        json j = to_json(r);
        j["file"] = f;
        out.push_back(j);
      }
    }
    emit(out, g);
    note("validate: " + std::to_string(val_files.size()) + " structure(s), " +
             std::to_string(invalid) + " invalid",
         t0);
  });

  // ---------------------------------------------------------------- props
  auto* cmd_props = app.add_subcommand(
      "props", "Evaluate named properties, sets and consequence checks");
  std::string props_input;
  std::vector<std::string> props_list;
  bool props_sets = false, props_cohn = false, props_cond2 = false;
  std::string props_rule;
  cmd_props->add_option("input", props_input,
                        "structure file or builtin:<name>");
  cmd_props->add_option("--props", props_list, "property names")
      ->delimiter(',');
  cmd_props->add_flag("--sets", props_sets,
                      "include zero-divisor sets, nilpotents and annihilators");
  cmd_props->add_flag("--cohn", props_cohn,
                      "include the nil-ideal consequence checks");
  cmd_props->add_flag("--condition2", props_cond2,
                      "include the zero-product pair criterion reports");
  cmd_props->add_option("--rule", props_rule,
                        "scan a rule-backed carrier by name instead");
  cmd_props->callback([&] {
    auto t0 = Clock::now();
    json out;
    if (!props_rule.empty()) {
      if (!props_input.empty())
        throw input_error("give either a structure or --rule, not both");
      const RuleStructure& rs = rule_carrier(props_rule);
      std::vector<RuleZdEntry> entries = rule_zero_divisor_scan(rs, g.bound);
      json arr = json::array();
      for (const RuleZdEntry& e : entries) {
        json j;
        j["element"] = elem_json(e.element);
        j["left"] = membership_name(e.left);
        j["right"] = membership_name(e.right);
        j["left_witness"] =
            e.left_witness ? elem_json(*e.left_witness) : json(nullptr);
        j["right_witness"] =
            e.right_witness ? elem_json(*e.right_witness) : json(nullptr);
        arr.push_back(j);
      }
      out["carrier"] = rs.name;
      out["bound"] = g.bound;
      out["entries"] = arr;
      out["eversible"] = to_json(is_eversible(rs, g.bound));
      out["reversible"] = to_json(is_reversible(rs, g.bound));
      emit(out, g);
      note("props: rule carrier " + rs.name + ", " +
               std::to_string(entries.size()) + " elements at bound " +
               std::to_string(g.bound),
           t0);
      return;
    }
    if (props_input.empty())
      throw input_error("props needs a structure or --rule NAME");
    FiniteStructure s = load_input(props_input, g);
    std::vector<std::string> names =
        props_list.empty() ? default_props(s.kind) : props_list;
    EvalOptions eo;
    eo.degree = g.degree;
    json plist = json::array();
    for (const std::string& name : names)
      plist.push_back(to_json(evaluate_property(s, name, eo)));
    out["input"] = props_input;
    out["kind"] = kind_name(s.kind);
    out["order"] = s.order;
    out["properties"] = plist;
    if (props_sets) {
      ZeroDivisorSets zd = zero_divisor_sets(s);
      json sets;
      sets["left"] = zd.left;
      sets["right"] = zd.right;
      sets["all"] = zd.all;
      sets["proper"] = zd.proper;
      json nil = json::array();
      for (auto [e, k] : nilpotent_elements(s))
        nil.push_back(json{{"element", e}, {"index", k}});
      sets["nilpotent"] = nil;
      out["sets"] = sets;
    }
    if (props_cohn) {
      CohnReport cr = verify_cohn(s);
      json checks = json::array();
      for (const PropertyReport& c : cr.checks) checks.push_back(to_json(c));
      out["cohn"] = json{{"overall", to_json(cr.overall)}, {"checks", checks}};
    }
    if (props_cond2) {
      Condition2Report c2 = eversible_condition2(s);
      out["condition2"] = json{{"restricted", to_json(c2.restricted)},
                               {"literal", to_json(c2.literal)}};
    }
    emit(out, g);
    note("props: " + std::to_string(names.size()) + " properties on order-" +
             std::to_string(s.order) + " " + kind_name(s.kind),
         t0);
  });

  // ------------------------------------------------------------ construct
  auto* cmd_construct =
      app.add_subcommand("construct", "Build composite carriers");
  cmd_construct->require_subcommand(1);

  auto* c_product = cmd_construct->add_subcommand(
      "product", "Componentwise product of structures of one kind");
  std::vector<std::string> product_inputs;
  c_product->add_option("factors", product_inputs, "structure inputs")
      ->required()
      ->expected(-2);
  c_product->callback([&] {
    auto t0 = Clock::now();
    std::vector<FiniteStructure> factors;
    for (const std::string& f : product_inputs)
      factors.push_back(load_input(f, g));
    ProductStructure p = direct_product(factors);
    emit(to_json(p.structure), g);
    note("construct product: order " + std::to_string(p.structure.order), t0);
  });

  auto* c_matrix = cmd_construct->add_subcommand(
      "matrix", "n-by-n matrices over a semiring");
  std::string matrix_input;
  std::uint32_t matrix_n = 2;
  c_matrix->add_option("input", matrix_input, "scalar semiring")->required();
  c_matrix->add_option("--n", matrix_n, "matrix dimension");
  c_matrix->callback([&] {
    auto t0 = Clock::now();
    MatrixSemiring m = matrix_semiring(load_input(matrix_input, g), matrix_n);
    emit(to_json(m.structure), g);
    note("construct matrix: order " + std::to_string(m.structure.order), t0);
  });

  auto* c_triangular = cmd_construct->add_subcommand(
      "triangular", "Upper-triangular 2x2 matrices over (S, M, T)");
  std::string tri_left, tri_right, tri_module;
  c_triangular->add_option("left", tri_left, "left corner semiring")
      ->required();
  c_triangular->add_option("right", tri_right, "right corner semiring")
      ->required();
  c_triangular->add_option("--module", tri_module, "bisemimodule JSON file")
      ->required();
  c_triangular->callback([&] {
    auto t0 = Clock::now();
    FiniteStructure ls = load_input(tri_left, g);
    FiniteStructure rs = load_input(tri_right, g);
    Bisemimodule m = load_bisemimodule(tri_module);
    TriangularSemiring t = triangular_semiring(ls, m, rs);
    emit(to_json(t.structure), g);
    note("construct triangular: order " + std::to_string(t.structure.order),
         t0);
  });

  auto* c_expectation = cmd_construct->add_subcommand(
      "expectation", "Pairs over S with product (s1 s2, s1 m2 + m1 s2)");
  std::string exp_input;
  c_expectation->add_option("input", exp_input, "semiring")->required();
  c_expectation->callback([&] {
    auto t0 = Clock::now();
    ExpectationSemiring e = expectation_semiring(load_input(exp_input, g));
    emit(to_json(e.structure), g);
    note("construct expectation: order " + std::to_string(e.structure.order),
         t0);
  });

  auto* c_sigma = cmd_construct->add_subcommand(
      "sigma-expectation", "Pairs with the left factor twisted by sigma");
  std::string sigma_input;
  std::vector<std::uint32_t> sigma_map;
  c_sigma->add_option("input", sigma_input, "commutative semiring")
      ->required();
  c_sigma->add_option("--sigma", sigma_map, "image table of the endomorphism")
      ->delimiter(',')
      ->required();
  c_sigma->callback([&] {
    auto t0 = Clock::now();
    FiniteStructure s = load_input(sigma_input, g);
    Endomorphism sigma;
    for (std::uint32_t v : sigma_map) {
      if (v >= s.order) throw input_error("sigma image out of range");
      sigma.map.push_back(static_cast<ElementId>(v));
    }
    ExpectationSemiring e = sigma_expectation(s, sigma);
    emit(to_json(e.structure), g);
    note("construct sigma-expectation: order " +
             std::to_string(e.structure.order),
         t0);
  });

  auto* c_endopn = cmd_construct->add_subcommand(
      "endo-pn", "Zero-fixing additive self-maps under pointwise + and "
                 "composition");
  std::string endopn_input;
  c_endopn->add_option("input", endopn_input, "structure with an addition")
      ->required();
  c_endopn->callback([&] {
    auto t0 = Clock::now();
    EndoPnResult r = endomorphism_pn_semiring(load_input(endopn_input, g));
    json out;
    out["closed"] = r.closed();
    out["maps"] = r.maps.size();
    if (r.closed()) {
      out["structure"] = to_json(*r.structure);
      out["failure"] = nullptr;
    } else {
      out["structure"] = nullptr;
      json f;
      f["f"] = r.failure->f.map;
      f["g"] = r.failure->g.map;
      f["x"] = r.failure->x;
      f["y"] = r.failure->y;
      out["failure"] = f;
    }
    emit(out, g);
    note(std::string("construct endo-pn: ") +
             (r.closed() ? "closed, order " +
                               std::to_string(r.structure->order)
                         : "not closed under pointwise sum"),
         t0);
  });

  auto* c_polytrunc = cmd_construct->add_subcommand(
      "poly-trunc", "Truncated power series with k coefficient slots");
  std::string poly_input;
  std::uint32_t poly_terms = 3;
  c_polytrunc->add_option("input", poly_input, "semiring")->required();
  c_polytrunc->add_option("--terms", poly_terms, "coefficient slots");
  c_polytrunc->callback([&] {
    auto t0 = Clock::now();
    PowerSeriesSemiring p =
        power_series_truncated(load_input(poly_input, g), poly_terms);
    emit(to_json(p.structure), g);
    note("construct poly-trunc: order " + std::to_string(p.structure.order),
         t0);
  });

  auto* c_localize = cmd_construct->add_subcommand(
      "localize", "Classical fractions at central cancellable denominators");
  std::string loc_input;
  std::vector<std::uint32_t> loc_denoms;
  c_localize->add_option("input", loc_input, "commutative semiring")
      ->required();
  c_localize->add_option("--denoms", loc_denoms, "denominator element ids")
      ->delimiter(',')
      ->required();
  c_localize->callback([&] {
    auto t0 = Clock::now();
    FiniteStructure s = load_input(loc_input, g);
    std::vector<ElementId> denoms;
    for (std::uint32_t v : loc_denoms) {
      if (v >= s.order) throw input_error("denominator out of range");
      denoms.push_back(static_cast<ElementId>(v));
    }
    Localization loc = localize(s, denoms);
    emit(to_json(loc.structure), g);
    note("construct localize: order " + std::to_string(loc.structure.order),
         t0);
  });

  auto* c_oresets = cmd_construct->add_subcommand(
      "ore-sets", "List every admissible denominator set");
  std::string ore_input;
  c_oresets->add_option("input", ore_input, "semiring")->required();
  c_oresets->callback([&] {
    auto t0 = Clock::now();
    std::vector<std::vector<ElementId>> sets =
        ore_sets(load_input(ore_input, g));
    json out;
    out["sets"] = sets;
    emit(out, g);
    note("construct ore-sets: " + std::to_string(sets.size()) + " sets", t0);
  });

  auto* c_endos = cmd_construct->add_subcommand(
      "endomorphisms", "List every endomorphism of a semiring");
  std::string endos_input;
  c_endos->add_option("input", endos_input, "semiring")->required();
  c_endos->callback([&] {
    auto t0 = Clock::now();
    std::vector<Endomorphism> endos =
        semiring_endomorphisms(load_input(endos_input, g));
    json maps = json::array();
    for (const Endomorphism& e : endos) maps.push_back(e.map);
    json out;
    out["count"] = endos.size();
    out["maps"] = maps;
    emit(out, g);
    note("construct endomorphisms: " + std::to_string(endos.size()), t0);
  });

  // ---------------------------------------------------------------- graph
  auto* cmd_graph = app.add_subcommand(
      "graph", "Zero-divisor graph, connectivity and diameter");
  std::string graph_input, graph_dot;
  std::string graph_notion = "strong";
  bool graph_calibrate = false;
  std::uint32_t graph_order = 4;
  cmd_graph->add_option("input", graph_input,
                        "structure file or builtin:<name>");
  cmd_graph->add_option("--dot", graph_dot, "write DOT text to this path");
  cmd_graph->add_option("--notion", graph_notion,
                        "weak|semi|strong|calibrated");
  cmd_graph->add_flag("--calibrate", graph_calibrate,
                      "score the notions against eversibility and stop");
  cmd_graph->add_option("--order", graph_order,
                        "order cap of the calibration corpus");
  cmd_graph->callback([&] {
    auto t0 = Clock::now();
    if (graph_calibrate) {
      if (!graph_input.empty())
        throw input_error("give either a structure or --calibrate, not both");
      Calibration cal =
          calibrate_connectivity_notion(calibration_corpus(graph_order));
      emit(to_json(cal), g);
      note("graph: calibrated over " + std::to_string(cal.structures) +
               " structures, chosen " +
               (cal.chosen ? notion_name(*cal.chosen) : "none"),
           t0);
      return;
    }
    if (graph_input.empty())
      throw input_error("graph needs a structure or --calibrate");
    FiniteStructure s = load_input(graph_input, g);
    ZdGraph zg = build_graph(s);
    ConnectivityNotion notion;
    if (graph_notion == "calibrated") {
      Calibration cal =
          calibrate_connectivity_notion(calibration_corpus(graph_order));
      if (!cal.chosen)
        throw input_error("no notion tracks eversibility exactly over the "
                          "calibration corpus");
      notion = *cal.chosen;
    } else {
      std::optional<ConnectivityNotion> n = notion_from_name(graph_notion);
      if (!n) throw input_error("unknown notion \"" + graph_notion + "\"");
      notion = *n;
    }
    bool connected = connectivity(zg, notion);
    Diameter d = diameter(zg, notion);
    json edges = json::array();
    for (std::size_t i = 0; i < zg.size(); ++i)
      for (std::size_t j = 0; j < zg.size(); ++j)
        if (zg.adj[i][j])
          edges.push_back(json::array({zg.vertices[i], zg.vertices[j]}));
    json out;
    out["input"] = graph_input;
    out["vertices"] = zg.vertices;
    out["edges"] = edges;
    out["notion"] = notion_name(notion);
    out["connected"] = connected;
    out["diameter"] = d.finite ? json(d.value) : json(nullptr);
    if (!graph_dot.empty()) {
      std::ofstream f(graph_dot, std::ios::binary);
      if (!f) throw input_error("cannot open DOT output " + graph_dot);
      f << to_dot(zg);
    }
    emit(out, g);
    note("graph: " + std::to_string(zg.size()) + " vertices, " +
             std::to_string(edges.size()) + " edges, " + notion_name(notion) +
             (connected ? " connected" : " disconnected"),
         t0);
  });

  // ------------------------------------------------------------ enumerate
  auto* cmd_enum = app.add_subcommand(
      "enumerate", "Generate all structures of a kind and order");
  std::string enum_kind;
  std::uint32_t enum_order = 2;
  bool enum_iso = false, enum_big = false, enum_random = false;
  std::vector<std::string> enum_filters;
  cmd_enum->add_option("--kind", enum_kind, "structure kind")->required();
  cmd_enum->add_option("--order", enum_order, "carrier size");
  cmd_enum->add_flag("--up-to-iso", enum_iso,
                     "emit one representative per isomorphism class");
  cmd_enum->add_flag("--allow-big", enum_big,
                     "lift the order cap for multiplication-only kinds to 5");
  cmd_enum->add_flag("--random", enum_random,
                     "emit one seeded random structure instead");
  cmd_enum->add_option("--filter", enum_filters,
                       "property names every structure must satisfy")
      ->delimiter(',');
  cmd_enum->callback([&] {
    auto t0 = Clock::now();
    Kind kind = parse_kind(enum_kind);
    if (enum_random) {
      FiniteStructure s = random_structure(kind, enum_order, g.seed);
      emit(to_json(s), g);
      note("enumerate: random order-" + std::to_string(enum_order) + " " +
               kind_name(kind) + " from seed " + std::to_string(g.seed),
           t0);
      return;
    }
    EnumerationSpec spec;
    spec.kind = kind;
    spec.order = enum_order;
    spec.up_to_iso = enum_iso;
    spec.filters = enum_filters;
    spec.allow_big = enum_big;
    std::uint64_t count = 0;
    json out;
    if (g.out_path.empty()) {
      json arr = json::array();
      for_each_structure(spec, [&](const FiniteStructure& s) {
        ++count;
        arr.push_back(to_json(s));
        return true;
      });
      out["kind"] = kind_name(kind);
      out["order"] = enum_order;
      out["count"] = count;
      out["structures"] = arr;
      std::string text = out.dump(2);
      text.push_back('\n');
      std::fwrite(text.data(), 1, text.size(), stdout);
      std::fflush(stdout);
    } else {
      fs::create_directories(g.out_path);
      for_each_structure(spec, [&](const FiniteStructure& s) {
        char name[96];
        std::snprintf(name, sizeof name, "%s_%u_%05llu.json", kind_name(kind),
                      enum_order, static_cast<unsigned long long>(count));
        ++count;
        save_structure(fs::path(g.out_path) / name, s);
        return true;
      });
      out["kind"] = kind_name(kind);
      out["order"] = enum_order;
      out["count"] = count;
      out["dir"] = g.out_path;
      std::string text = out.dump(2);
      text.push_back('\n');
      std::fwrite(text.data(), 1, text.size(), stdout);
      std::fflush(stdout);
    }
    note("enumerate: " + std::to_string(count) + " structures", t0);
  });

  // --------------------------------------------------------------- verify
  auto* cmd_verify =
      app.add_subcommand("verify", "Run a named verification suite");
  std::string verify_suite, verify_corpus;
  std::uint32_t verify_order = 0;
  cmd_verify->add_option("--suite", verify_suite, "suite name")->required();
  auto* vorder = cmd_verify->add_option("--order", verify_order,
                                        "override the suite's order cap");
  cmd_verify->add_option("--corpus", verify_corpus,
                         "run over the structure files in this directory")
      ->excludes(vorder);
  cmd_verify->callback([&] {
    SuiteOptions so;
    so.order = verify_order;
    so.degree = g.degree;
    so.jobs = g.jobs;
    if (!verify_corpus.empty()) so.corpus = load_corpus_dir(verify_corpus);
    SuiteReport rep = run_suite(verify_suite, so);
    emit(to_json(rep), g);
    std::fprintf(stderr, "verify %s: %llu structures, %llu violations (%.3f s)\n",
                 rep.suite.c_str(),
                 static_cast<unsigned long long>(rep.structures_checked),
                 static_cast<unsigned long long>(rep.violations.size()),
                 rep.elapsed_seconds);
    if (!rep.violations.empty()) exit_code = 1;
  });

  // ----------------------------------------------------------------- hunt
  auto* cmd_hunt = app.add_subcommand(
      "hunt", "Search small structures for a property combination");
  std::string hunt_expr, hunt_kind;
  std::uint32_t hunt_max = 4;
  cmd_hunt->add_option("--expr", hunt_expr,
                       "boolean expression over property names")
      ->required();
  cmd_hunt->add_option("--kind", hunt_kind, "structure kind")->required();
  cmd_hunt->add_option("--max-order", hunt_max, "largest order to scan");
  cmd_hunt->callback([&] {
    auto t0 = Clock::now();
    HuntResult r = find_counterexample(hunt_expr, parse_kind(hunt_kind),
                                       hunt_max);
    emit(to_json(r), g);
    note("hunt: scanned " + std::to_string(r.scanned) +
             (r.found ? ", found at order " + std::to_string(r.found_order)
                      : ", nothing found"),
         t0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const input_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const resource_error& e) {
    std::fprintf(stderr, "resource limit: %s\n", e.what());
    return 3;
  } catch (const error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
