#include "gwcount/invariants.hpp"
#include "gwcount/series.hpp"
#include "gwcount/strata.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace gwcount;

void BM_RecursionFill(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) {
        RecursionTable table;
        table.fill_to(d);
        benchmark::DoNotOptimize(table.at(d));
    }
}
BENCHMARK(BM_RecursionFill)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_EnumerateCollapsed(benchmark::State& state) {
    EnumerationOptions options;
    options.degree = 4;
    options.max_extra_vertices = static_cast<int>(state.range(0));
    options.include_circuits = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_shapes(options).size());
    }
}
BENCHMARK(BM_EnumerateCollapsed)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateFullSingleTail(benchmark::State& state) {
    EnumerationOptions options;
    options.degree = static_cast<int>(state.range(0));
    options.collapsed = false;
    options.filter = [d = options.degree](const Skeleton& s) {
        return s.kind == GraphKind::Tree && s.vertex_count() == 2 && s.weights[0] == 0 &&
               s.weights[1] == d;
    };
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_shapes(options).size());
    }
}
BENCHMARK(BM_EnumerateFullSingleTail)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_VanishingSequence(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::array<PolySeries::Coefficients, 3> rows;
    for (std::size_t r = 0; r < 3; ++r) {
        rows[r].assign(static_cast<std::size_t>(d) + 1, Rational(0));
        for (int i = 0; i <= d; ++i) {
            rows[r][static_cast<std::size_t>(i)] = Rational((i * 7 + static_cast<int>(r) * 3) % 11 - 5, i % 4 + 1);
        }
    }
    const PolySeries series(d, rows);
    const SeriesPoint point = SeriesPoint::finite(Rational(2, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vanishing_sequence(series, point));
    }
}
BENCHMARK(BM_VanishingSequence)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
