// Serial vs OpenMP timings for the exact solver kernels.

#include <benchmark/benchmark.h>

#include "rxc/solver.hpp"
#include "rxc/tableau_reduction.hpp"
#include "support/generators.hpp"
#include "support/machines.hpp"

using namespace rxc;
using namespace rxc::testing;

namespace {

// Many crosswords: every row and column avoids "aa".
Puzzle no_double_a() {
    const Alphabet a = letters(2);
    const Regex r = parse("(b|ab)*(a|_)", a);
    return Puzzle::uniform(r, r);
}

Puzzle demo_tableau() {
    const MarkerAlphabet markers(demo_machine());
    return Puzzle::uniform(build_row_expr(markers, demo_machine()->tape_from_names({"a"})),
                           build_col_expr(markers));
}

Execution mode(const benchmark::State& s) { return s.range(1) ? Execution::Parallel : Execution::Serial; }

void BM_Count(benchmark::State& state) {
    const Puzzle p = no_double_a();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count(p, n, n, mode(state)));
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_Enumerate(benchmark::State& state) {
    const Puzzle p = no_double_a();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(p, n, n, std::nullopt, mode(state)));
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_EnumerateTableau(benchmark::State& state) {
    const Puzzle p = demo_tableau();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate(p, 6, 4, std::nullopt, mode(state)));
    state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_Count)->ArgsProduct({{4, 5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateTableau)->ArgsProduct({{0}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
