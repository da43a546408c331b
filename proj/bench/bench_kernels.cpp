// Parallel kernels against their serial reference implementations.

#include <benchmark/benchmark.h>

#include "mcc/code.hpp"
#include "mcc/distance.hpp"
#include "mcc/enumerate.hpp"
#include "mcc/params.hpp"
#include "mcc/search.hpp"

namespace {

using namespace mcc;

const GroupParams& heavy() {
    static const GroupParams p = validate(2, 19, 2, 18, Regime::Counting);
    return p;
}

const GroupParams& medium() {
    static const GroupParams p = validate(2, 13, 3, 3, Regime::Counting);
    return p;
}

const MetacyclicCode& heavy_code() {
    static const MetacyclicCode code = [] {
        const auto a1s = enumerate_valid(heavy());
        return build_code(heavy(), a1s[a1s.size() / 2]);
    }();
    return code;
}

}  // namespace

static void BM_distance_serial(benchmark::State& state) {
    const auto& code = heavy_code();
    for (auto _ : state) benchmark::DoNotOptimize(min_distance_serial(code).d_min);
}
BENCHMARK(BM_distance_serial)->Unit(benchmark::kMillisecond);

static void BM_distance_gray(benchmark::State& state) {
    const auto& code = heavy_code();
    DistanceOptions opts;
    opts.threads = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(min_distance(code, opts).d_min);
}
BENCHMARK(BM_distance_gray)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_enumerate_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bruteforce_serial(heavy()).size());
}
BENCHMARK(BM_enumerate_serial)->Unit(benchmark::kMillisecond);

static void BM_enumerate_parallel(benchmark::State& state) {
    EnumerateOptions opts;
    opts.threads = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_bruteforce(heavy(), opts).size());
}
BENCHMARK(BM_enumerate_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_cover_serial(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(cover_multiplicity_serial(medium()).max_multiplicity);
}
BENCHMARK(BM_cover_serial)->Unit(benchmark::kMillisecond);

static void BM_cover_parallel(benchmark::State& state) {
    CoverOptions opts;
    opts.threads = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cover_multiplicity(medium(), opts).max_multiplicity);
}
BENCHMARK(BM_cover_parallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
