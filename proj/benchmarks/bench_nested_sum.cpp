#include <benchmark/benchmark.h>

#include "mhsum/nested_sum.hpp"
#include "mhsum/text_syntax.hpp"

namespace {

const mhsum::NestedSumSpec& depth3_spec() {
    static const auto spec = mhsum::parse_spec("2/7,4,-9/7", "1,1");
    return spec;
}

void BM_CDirect(benchmark::State& state) {
    const mhsum::Index n{static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mhsum::c_direct(depth3_spec(), n));
}

// Fresh memo per iteration so every run pays for the full linear pass.
void BM_CRecursive(benchmark::State& state) {
    const mhsum::Index n{static_cast<std::uint64_t>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(mhsum::c_recursive(depth3_spec(), n));
}

void BM_CDirectTwoIndex(benchmark::State& state) {
    static const auto spec = mhsum::parse_spec("1/2,1/3;2/3,-1", "1");
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mhsum::c_direct(spec, {k, k}));
}

}  // namespace

BENCHMARK(BM_CDirect)->Arg(10)->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(BM_CRecursive)->Arg(10)->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(BM_CDirectTwoIndex)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
