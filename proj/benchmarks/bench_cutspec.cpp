#include <benchmark/benchmark.h>

#include "cutspec/fixtures.hpp"
#include "cutspec/quasival.hpp"
#include "cutspec/spectrum.hpp"

using namespace cutspec;

static void BM_AddCut(benchmark::State& state) {
    Cut a = Cut::prefix({3, 5, -2});
    Cut b = Cut::prefix({1, -4});
    for (auto _ : state) benchmark::DoNotOptimize(add_cut(a, b));
}
BENCHMARK(BM_AddCut);

static void BM_CmpCut(benchmark::State& state) {
    Cut a = Cut::prefix({3, 5, -2});
    Cut b = Cut::prefix({3, 5});
    for (auto _ : state) benchmark::DoNotOptimize(cmp_cut(a, b));
}
BENCHMARK(BM_CmpCut);

static void BM_FilterValue(benchmark::State& state) {
    Instance inst = load_fixture("m2_ov");
    auto elems = sample_elements(inst.alg, 64, 7);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(filter_value(inst.alg, elems[i % elems.size()]));
        ++i;
    }
}
BENCHMARK(BM_FilterValue);

static void BM_MinFormula(benchmark::State& state) {
    Instance inst = load_fixture("m2_ov");
    MinimalBasis basis = minimal_generators(inst.alg);
    QuasiValuation w = min_formula_qv(inst.alg, basis);
    auto elems = sample_elements(inst.alg, 64, 7);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(w.eval(elems[i % elems.size()]));
        ++i;
    }
}
BENCHMARK(BM_MinFormula);

static void BM_EnumerateSpec(benchmark::State& state) {
    Instance inst = load_fixture("m2_ov", static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_spec(inst.alg));
}
BENCHMARK(BM_EnumerateSpec)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();
