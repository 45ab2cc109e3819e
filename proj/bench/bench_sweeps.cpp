// Serial reference against the OpenMP kernels for the two grid sweeps.
#include <cmtrig/bounds.hpp>
#include <cmtrig/monotonicity.hpp>

#include <benchmark/benchmark.h>

using namespace cmtrig;

namespace
{

const Precision P128(128);

Execution mode(const benchmark::State &state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_verify_simplex(benchmark::State &state)
{
    const Execution exec = mode(state);
    const int density = static_cast<int>(state.range(1));
    for (auto _ : state) {
        GridReport r = verify_simplex(2, density, P128, exec);
        benchmark::DoNotOptimize(r.points_checked);
    }
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

void BM_check_monotonic(benchmark::State &state)
{
    const Execution exec = mode(state);
    const int density = static_cast<int>(state.range(1));
    FunctionSpec spec = standard_specs(FunctionId::g).front();
    spec.max_order = 12;
    for (auto _ : state) {
        GridReport r = check_monotonic(spec, density, P128, exec);
        benchmark::DoNotOptimize(r.points_checked);
    }
    state.SetLabel(exec == Execution::serial ? "serial" : "parallel");
}

} // namespace

BENCHMARK(BM_verify_simplex)->ArgsProduct({{0, 1}, {20, 60}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_monotonic)->ArgsProduct({{0, 1}, {20, 60}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
