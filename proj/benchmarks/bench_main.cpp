#include <benchmark/benchmark.h>

#include "semrd/decomposition.hpp"
#include "semrd/distortion.hpp"
#include "semrd/generators.hpp"
#include "semrd/rates.hpp"

using namespace semrd;

namespace {

void BM_closure_supply_chain(benchmark::State& state) {
    int locations = static_cast<int>(state.range(0));
    DeductiveSource src = gen_supply_chain(locations, locations / 4 + 1, locations / 3 + 1,
                                           0.15, 0.0, 7);
    FactSet base = src.stored_set();
    for (auto _ : state) {
        FactSet cl = src.engine().closure_naive(base);
        benchmark::DoNotOptimize(cl.count());
    }
    state.SetComplexityN(locations);
}
BENCHMARK(BM_closure_supply_chain)->Arg(8)->Arg(16)->Arg(32)->Complexity();

void BM_extract_core(benchmark::State& state) {
    DeductiveSource src =
        gen_supply_chain(static_cast<int>(state.range(0)), 4, 6, 0.15, 0.5, 7);
    for (auto _ : state) {
        CoreDecomposition atom = extract_core(src);
        benchmark::DoNotOptimize(atom.core.size());
    }
}
BENCHMARK(BM_extract_core)->Arg(8)->Arg(16)->Arg(32);

void BM_distortion_matrix(benchmark::State& state) {
    DeductiveSource src = gen_tag_seeded(static_cast<int>(state.range(0)), 2, 5);
    for (auto _ : state) {
        DistortionMatrix m = distortion_matrix(src, DistortionKind::Closure);
        benchmark::DoNotOptimize(m.values.data());
    }
}
BENCHMARK(BM_distortion_matrix)->Arg(2)->Arg(4)->Arg(8);

void BM_rd_curve(benchmark::State& state) {
    DeductiveSource src = gen_tag_seeded(3, 2, 11);
    for (auto _ : state) {
        RDCurve c = rd_curve(src);
        benchmark::DoNotOptimize(c.points.size());
    }
}
BENCHMARK(BM_rd_curve);

void BM_zero_rate_general(benchmark::State& state) {
    DeductiveSource src = gen_example("EX_CONF");
    for (auto _ : state) {
        RateReport r = zero_rate_general(src);
        benchmark::DoNotOptimize(r.value_bits);
    }
}
BENCHMARK(BM_zero_rate_general);

} // namespace

BENCHMARK_MAIN();
