#include <benchmark/benchmark.h>

#include "excidyn/integrator.hpp"
#include "excidyn/presets.hpp"

using namespace excidyn;

static void BM_PhononCoefficients(benchmark::State& state) {
    const PhononModel model(preset("fig7C"));
    double t = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.at(t));
        t += 0.05;
    }
}
BENCHMARK(BM_PhononCoefficients);

static void BM_GbarTable(benchmark::State& state) {
    const PhononModel model(preset("fig7C"));
    double t = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(model.gbar_at(t));
        t += 0.05;
    }
}
BENCHMARK(BM_GbarTable);

static void BM_Step(benchmark::State& state) {
    const char* name = state.range(0) == 0 ? "fig4" : state.range(0) == 1 ? "fig7C" : "fig12";
    const Propagator prop(preset(name));
    ExtendedState x = prop.initial();
    double t = 0.0;
    for (auto _ : state) {
        x = prop.step(x, t, 0.05);
        t += 0.05;
        benchmark::DoNotOptimize(x);
    }
    state.SetLabel(name);
}
BENCHMARK(BM_Step)->Arg(0)->Arg(1)->Arg(2);

static void BM_PresetRun(benchmark::State& state) {
    const auto s = preset("fig5C");
    for (auto _ : state) benchmark::DoNotOptimize(integrate(s));
}
BENCHMARK(BM_PresetRun)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
