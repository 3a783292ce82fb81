#include "kronecker/hilbert.hpp"
#include "kronecker/io.hpp"
#include "kronecker/kronecker_cone.hpp"
#include "kronecker/matching_field.hpp"
#include "kronecker/mirror.hpp"

#include <benchmark/benchmark.h>

using namespace kronecker;

namespace {

QuiverSpec spec_for(const benchmark::State& state) { return QuiverSpec(static_cast<int>(state.range(0)), 2, 3); }

void BM_DoubleDescription(benchmark::State& state) {
    const Cone h = kronecker_halfspaces(spec_for(state));
    for (auto _ : state) benchmark::DoNotOptimize(double_description(h));
}
BENCHMARK(BM_DoubleDescription)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_LatticePointsHeightOne(benchmark::State& state) {
    const QuiverSpec s = spec_for(state);
    const Cone c = double_description(kronecker_halfspaces(s));
    for (auto _ : state) benchmark::DoNotOptimize(lattice_points_at_height(c, 1, kronecker_height(s)));
}
BENCHMARK(BM_LatticePointsHeightOne)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_HilbertBasisK323(benchmark::State& state) {
    const QuiverSpec s(3, 2, 3);
    const Cone c = double_description(kronecker_halfspaces(s));
    HilbertOptions o;
    o.max_degree = static_cast<int>(state.range(0));
    o.certify_window = 0;
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(c, kronecker_height(s), o));
}
BENCHMARK(BM_HilbertBasisK323)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ExpandDegreeOne(benchmark::State& state) {
    const QuiverSpec s(3, 2, 3);
    const auto p = build_linked_pair(parse_tableau("21 21 | 22 31 | 32 32"), parse_tableau("21 21 32 | 22 33 33"), s);
    ExpandOptions o;
    o.factorized = state.range(0) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(expand(*p, s, o));
}
BENCHMARK(BM_ExpandDegreeOne)->Arg(0)->Arg(1);

LaurentPolynomial k323_mirror() {
    const QuiverSpec s(3, 2, 3);
    const PipelineReport rep = sagbi_pipeline(s, grading_c2(s));
    return *laurent_from_rays(*rep.fan).polynomial;
}

void BM_PeriodMeetInTheMiddle(benchmark::State& state) {
    const LaurentPolynomial f = k323_mirror();
    for (auto _ : state) benchmark::DoNotOptimize(classical_period(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PeriodMeetInTheMiddle)->Arg(9)->Arg(15)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_PeriodDirect(benchmark::State& state) {
    const LaurentPolynomial f = k323_mirror();
    for (auto _ : state) benchmark::DoNotOptimize(classical_period_direct(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PeriodDirect)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
