#include <benchmark/benchmark.h>

#include "zdlab/canonical.hpp"
#include "zdlab/constructions.hpp"
#include "zdlab/enumerate.hpp"
#include "zdlab/io.hpp"
#include "zdlab/properties.hpp"
#include "zdlab/suites.hpp"
#include "zdlab/zdgraph.hpp"

using namespace zdlab;

static void BM_EnumerateSemigroups(benchmark::State& state) {
  EnumerationSpec spec;
  spec.kind = Kind::semigroup_with_zero;
  spec.order = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto out = enumerate_structures(spec);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_EnumerateSemigroups)->Arg(3)->Arg(4);

static void BM_EnumerateSemirings(benchmark::State& state) {
  EnumerationSpec spec;
  spec.kind = Kind::semiring;
  spec.order = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto out = enumerate_structures(spec);
    benchmark::DoNotOptimize(out.size());
  }
}
BENCHMARK(BM_EnumerateSemirings)->Arg(3)->Arg(4);

static void BM_ReversibleMatrixSemiring(benchmark::State& state) {
  MatrixSemiring m = matrix_semiring(builtin_structure("b"), 2);
  for (auto _ : state) {
    PropertyReport rep = is_reversible(m.structure);
    benchmark::DoNotOptimize(rep.verdict);
  }
}
BENCHMARK(BM_ReversibleMatrixSemiring);

static void BM_CanonicalForm(benchmark::State& state) {
  FiniteStructure s = builtin_structure("z6");
  for (auto _ : state) {
    FiniteStructure c = canonical_form(s);
    benchmark::DoNotOptimize(c.order);
  }
}
BENCHMARK(BM_CanonicalForm);

static void BM_GraphDiameter(benchmark::State& state) {
  FiniteStructure s = builtin_structure("z6");
  for (auto _ : state) {
    ZdGraph g = build_graph(s);
    Diameter d = diameter(g, ConnectivityNotion::strong);
    benchmark::DoNotOptimize(d.finite);
  }
}
BENCHMARK(BM_GraphDiameter);

static void BM_SuiteTriangular(benchmark::State& state) {
  for (auto _ : state) {
    SuiteReport rep = run_suite("triangular");
    benchmark::DoNotOptimize(rep.violations.size());
  }
}
BENCHMARK(BM_SuiteTriangular);

static void BM_SuiteCohn(benchmark::State& state) {
  for (auto _ : state) {
    SuiteReport rep = run_suite("cohn");
    benchmark::DoNotOptimize(rep.structures_checked);
  }
}
BENCHMARK(BM_SuiteCohn);

BENCHMARK_MAIN();
