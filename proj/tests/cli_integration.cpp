#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "zdlab/bisemimodule.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/validate.hpp"

using json = nlohmann::json;
using namespace zdlab;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* binary() {
  const char* bin = std::getenv("ZDLAB_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "ZDLAB_BIN must point at the cli binary");
  return bin;
}

RunResult run(const std::string& args) {
  std::string cmd = std::string(binary()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args, int expect_code = 0) {
  RunResult r = run(args);
  CHECK(r.exit_code == expect_code);
  return json::parse(r.out);
}

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "zdlab_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("validate reports a verdict per file") {
  fs::path dir = scratch_dir();
  fs::path good = dir / "good.json";
  save_structure(good, builtin_structure("b"));

  json single = run_json("validate " + good.string());
  CHECK(single["valid"] == true);
  CHECK(single["failures"].empty());

  // break associativity: in z6, redefine 2 * 3 as 1
  FiniteStructure z6 = builtin_structure("z6");
  z6.mul.set(2, 3, 1);
  fs::path bad = dir / "bad.json";
  save_structure(bad, z6);

  json pair = run_json("validate " + good.string() + " " + bad.string());
  REQUIRE(pair.is_array());
  REQUIRE(pair.size() == 2);
  CHECK(pair[0]["file"] == good.string());
  CHECK(pair[0]["valid"] == true);
  CHECK(pair[1]["valid"] == false);
  CHECK(!pair[1]["failures"].empty());

  json b = run_json("validate builtin:z4mul");
  CHECK(b["valid"] == true);
}

TEST_CASE("validate rejects unreadable input with exit two") {
  CHECK(run("validate /no/such/file.json").exit_code == 2);

  fs::path junk = scratch_dir() / "junk.json";
  std::ofstream(junk) << "{ not json";
  CHECK(run("validate " + junk.string()).exit_code == 2);

  fs::path ragged = scratch_dir() / "ragged.json";
  std::ofstream(ragged)
      << R"({"kind":"semigroup_with_zero","order":2,"zero":0,"mul":[[0,0],[0]]})";
  CHECK(run("validate " + ragged.string()).exit_code == 2);

  CHECK(run("validate builtin:nope").exit_code == 2);
}

TEST_CASE("props reports the requested properties") {
  json r = run_json("props builtin:z6 --props reversible,zerosumfree");
  CHECK(r["input"] == "builtin:z6");
  CHECK(r["kind"] == "semiring");
  CHECK(r["order"] == 6);
  REQUIRE(r["properties"].size() == 2);
  CHECK(r["properties"][0]["property"] == "reversible");
  CHECK(r["properties"][0]["verdict"] == "holds");
  CHECK(r["properties"][1]["property"] == "zerosumfree");

  // multiplicative kinds default to the multiplicative property list
  json m = run_json("props builtin:z6mul");
  CHECK(m["kind"] == "monoid_with_zero");
  for (const json& p : m["properties"])
    CHECK(p["property"] != "zerosumfree");

  json sets = run_json("props builtin:z6 --sets");
  CHECK(sets["sets"]["proper"] == json::array({2, 3, 4}));
  CHECK(sets["sets"]["left"] == json::array({0, 2, 3, 4}));

  json cohn = run_json("props builtin:z6 --cohn");
  CHECK(cohn["cohn"]["overall"]["property"] == "cohn");
  CHECK(cohn["cohn"]["checks"].size() == 7);

  json c2 = run_json("props builtin:b --condition2");
  CHECK(c2["condition2"]["restricted"]["verdict"] == "holds");
  CHECK(c2["condition2"].contains("literal"));

  CHECK(run("props builtin:z6 --props no_such").exit_code == 2);
  CHECK(run("props builtin:z6mul --condition2").exit_code == 2);
}

TEST_CASE("props scans rule carriers against their hooks") {
  json r = run_json("props --rule tri2-n0-z2 --bound 6");
  CHECK(r["carrier"] == "tri2-n0-z2");
  CHECK(r["bound"] == 6);
  REQUIRE(r["entries"].is_array());
  CHECK(!r["entries"].empty());
  for (const json& e : r["entries"]) {
    CHECK(e.contains("element"));
    CHECK((e["left"] == "yes" || e["left"] == "no" || e["left"] == "unknown"));
    CHECK((e["right"] == "yes" || e["right"] == "no" ||
           e["right"] == "unknown"));
  }
  CHECK(r["eversible"].contains("verdict"));
  CHECK(r["reversible"].contains("verdict"));

  CHECK(run("props --rule no-such-carrier").exit_code == 2);
}

TEST_CASE("enumerate counts structures and can write them out") {
  json inline_out = run_json("enumerate --kind semigroup_with_zero --order 3");
  CHECK(inline_out["kind"] == "semigroup_with_zero");
  CHECK(inline_out["order"] == 3);
  CHECK(inline_out["count"] == 20);
  REQUIRE(inline_out["structures"].size() == 20);
  for (const json& js : inline_out["structures"]) {
    FiniteStructure s = structure_from_json(js);
    CHECK(validate_structure(s).valid);
  }

  json iso = run_json("enumerate --kind semigroup_with_zero --order 3 --up-to-iso");
  CHECK(iso["count"].get<std::uint64_t>() < 20);

  EnumerationSpec spec;
  spec.order = 3;
  spec.filters = {"reversible", "entire"};
  json filtered = run_json(
      "enumerate --kind semigroup_with_zero --order 3 --filter reversible,entire");
  CHECK(filtered["count"].get<std::size_t>() ==
        enumerate_structures(spec).size());

  fs::path dir = scratch_dir() / "corpus_sg3";
  fs::remove_all(dir);
  json written = run_json("enumerate --kind semigroup_with_zero --order 3 -o " +
                          dir.string());
  CHECK(written["count"] == 20);
  CHECK(written["dir"] == dir.string());
  std::size_t files = 0;
  for (auto& e : fs::directory_iterator(dir)) {
    ++files;
    CHECK(validate_structure(load_structure(e.path())).valid);
  }
  CHECK(files == 20);
  CHECK(fs::exists(dir / "semigroup_with_zero_3_00000.json"));
  CHECK(fs::exists(dir / "semigroup_with_zero_3_00019.json"));

  json rnd1 = run_json("enumerate --kind semiring --order 3 --random --seed 11");
  json rnd2 = run_json("enumerate --kind semiring --order 3 --random --seed 11");
  CHECK(rnd1 == rnd2);
  CHECK(validate_structure(structure_from_json(rnd1)).valid);
}

TEST_CASE("enumerate maps limit breaches to exit three") {
  CHECK(run("enumerate --kind semigroup_with_zero --order 6").exit_code == 3);
  CHECK(run("enumerate --kind semiring --order 5").exit_code == 3);
  CHECK(run("enumerate --kind semigroup_with_zero --order 1").exit_code == 2);
  CHECK(run("enumerate --kind wibble --order 3").exit_code == 2);
}

TEST_CASE("verify exits one exactly when violations appear") {
  RunResult clean = run("verify --suite cohn --order 3");
  CHECK(clean.exit_code == 0);
  json creport = json::parse(clean.out);
  CHECK(creport["suite"] == "cohn");
  CHECK(creport["violations"].empty());

  RunResult red = run("verify --suite cohn --order 4");
  CHECK(red.exit_code == 1);
  json rreport = json::parse(red.out);
  REQUIRE(rreport["violations"].size() == 6);
  for (const json& v : rreport["violations"])
    CHECK(v["claim"] == "cohn.right_closure_is_left_ideal");

  RunResult again = run("verify --suite cohn --order 4");
  CHECK(again.out == red.out);

  CHECK(run("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("verify reads structure files from a corpus directory") {
  fs::path dir = scratch_dir() / "corpus_sr2";
  fs::remove_all(dir);
  run_json("enumerate --kind semiring --order 2 -o " + dir.string());

  json rep = run_json("verify --suite cohn --corpus " + dir.string());
  CHECK(rep["structures_checked"] == 2);
  CHECK(rep["violations"].empty());

  // a multiplicative corpus cannot feed an additive suite
  fs::path muls = scratch_dir() / "corpus_mul3";
  fs::remove_all(muls);
  run_json("enumerate --kind monoid_with_zero --order 3 -o " + muls.string());
  CHECK(run("verify --suite localization --corpus " + muls.string())
            .exit_code == 2);
}

TEST_CASE("worker count never changes the report bytes") {
  RunResult one = run("verify --suite triangular --order 2 --jobs 1");
  RunResult four = run("verify --suite triangular --order 2 --jobs 4");
  CHECK(one.exit_code == four.exit_code);
  CHECK(one.out == four.out);
  CHECK(!one.out.empty());
}

TEST_CASE("graph reports adjacency and diameter") {
  fs::path dot = scratch_dir() / "z6.dot";
  json g = run_json("graph builtin:z6 --dot " + dot.string());
  CHECK(g["input"] == "builtin:z6");
  CHECK(g["vertices"] == json::array({2, 3, 4}));
  CHECK(g["notion"] == "strong");
  CHECK(g["connected"] == true);
  CHECK(g["diameter"] == 2);
  REQUIRE(g["edges"].size() == 4);

  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  CHECK(text.rfind("digraph zd {", 0) == 0);

  json weak = run_json("graph builtin:z6 --notion weak");
  CHECK(weak["notion"] == "weak");
  CHECK(run("graph builtin:z6 --notion sideways").exit_code == 2);

  // entire structures have an empty graph, connected by convention
  json empty = run_json("graph builtin:b");
  CHECK(empty["vertices"].empty());
  CHECK(empty["connected"] == true);
  CHECK(empty["diameter"] == 0);
}

TEST_CASE("graph calibration picks the strictest exact notion") {
  json cal = run_json("graph --calibrate --order 3");
  CHECK(cal["structures"] == 30);  // semigroups and semirings up to order 3
  REQUIRE(cal["rows"].size() == 3);
  CHECK(cal["rows"][0]["notion"] == "weak");
  CHECK(cal["rows"][2]["notion"] == "strong");
  CHECK(cal["chosen"] == "strong");
  for (const json& row : cal["rows"])
    CHECK(row["both"].get<std::uint64_t>() +
              row["neither"].get<std::uint64_t>() +
              row["connected_only"].get<std::uint64_t>() +
              row["eversible_only"].get<std::uint64_t>() ==
          30);
}

TEST_CASE("hunt reports hits and exhaustion") {
  json hit = run_json(
      "hunt --expr \"not reversible\" --kind semigroup_with_zero --max-order 3");
  CHECK(hit["found"] == true);
  CHECK(hit["order"] == 3);
  REQUIRE(hit["structure"].is_object());
  CHECK(validate_structure(structure_from_json(hit["structure"])).valid);

  json miss = run_json(
      "hunt --expr \"reversible and not eversible\" --kind "
      "semigroup_with_zero --max-order 4");
  CHECK(miss["found"] == false);
  CHECK(miss["order"].is_null());
  CHECK(miss["structure"].is_null());
  CHECK(miss["scanned"].get<std::uint64_t>() > 0);

  CHECK(run("hunt --expr \"reversible and\" --kind semigroup_with_zero")
            .exit_code == 2);
  CHECK(run("hunt --expr reversible --kind wibble").exit_code == 2);
}

TEST_CASE("construct subcommands emit normalized structures") {
  json prod = run_json("construct product builtin:b builtin:b");
  FiniteStructure ps = structure_from_json(prod);
  CHECK(ps.kind == Kind::semiring);
  CHECK(ps.order == 4);
  CHECK(validate_structure(ps).valid);

  json mat = run_json("construct matrix builtin:b --n 2");
  CHECK(structure_from_json(mat).order == 16);

  fs::path module = scratch_dir() / "module.json";
  std::ofstream(module) << to_json(regular_bisemimodule(builtin_structure("b")))
                               .dump(2);
  json tri = run_json("construct triangular builtin:b builtin:b --module " +
                      module.string());
  FiniteStructure ts = structure_from_json(tri);
  CHECK(ts.order == 8);
  CHECK(validate_structure(ts).valid);

  json expc = run_json("construct expectation builtin:z6");
  CHECK(structure_from_json(expc).order == 36);

  json sig = run_json("construct sigma-expectation builtin:z6 --sigma 0,1,2,3,4,5");
  CHECK(sig == expc);

  json endo = run_json("construct endo-pn builtin:n3");
  CHECK(endo["closed"] == true);
  CHECK(endo["maps"] == 4);
  CHECK(endo["failure"].is_null());
  CHECK(structure_from_json(endo["structure"]).order == 4);

  json pt = run_json("construct poly-trunc builtin:z2 --terms 3");
  CHECK(structure_from_json(pt).order == 8);

  json loc = run_json("construct localize builtin:z6 --denoms 1,5");
  CHECK(structure_from_json(loc).order == 6);

  json ore = run_json("construct ore-sets builtin:z6");
  REQUIRE(ore["sets"].is_array());
  CHECK(ore["sets"][0] == json::array({1}));

  json ends = run_json("construct endomorphisms builtin:z6");
  CHECK(ends["count"] == 1);

  CHECK(run("construct matrix builtin:z6mul --n 2").exit_code == 2);
  CHECK(run("construct localize builtin:z6 --denoms 1,2").exit_code == 2);
  CHECK(run("construct matrix builtin:z6 --n 3").exit_code == 3);
  CHECK(run("construct").exit_code == 2);
}

TEST_CASE("reports can be routed to a file") {
  fs::path out = scratch_dir() / "report.json";
  fs::remove(out);
  RunResult r = run("props builtin:b -o " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream in(out);
  json j = json::parse(in);
  CHECK(j["input"] == "builtin:b");
}

TEST_CASE("bad invocations exit with code two") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("props").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("enumerate --order 3").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("props --help").exit_code == 0);
}
