#include "intcol/edge_coloring.hpp"
#include "intcol/generators.hpp"
#include "intcol/oracles.hpp"
#include "intcol/thickness.hpp"
#include "intcol/verify.hpp"

#include <benchmark/benchmark.h>

using namespace intcol;

namespace {

Multigraph make(const std::string& spec) { return generate(FamilySpec::parse(spec, 7)).graph; }

void verify_checker(benchmark::State& state, bool parallel)
{
    const Multigraph g = make("random_simple:n=" + std::to_string(state.range(0)) + ",p=0.05");
    const EdgeColoring c = vizing_color(g);
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? verify(g, c, VerifyMode::interval) : verify_serial(g, c, VerifyMode::interval));
}

void subset_enumeration(benchmark::State& state, bool parallel)
{
    const Multigraph g = make("random_simple:n=" + std::to_string(state.range(0)) + ",p=0.4");
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? nash_williams_arboricity(g) : nash_williams_arboricity_serial(g));
}

void dispatcher(benchmark::State& state, bool parallel)
{
    const Multigraph g = make("random_simple:n=" + std::to_string(state.range(0)) + ",p=0.2");
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? dispatch_theta_upper(g) : dispatch_theta_upper_serial(g));
}

}  // namespace

BENCHMARK_CAPTURE(verify_checker, serial, false)->Arg(200)->Arg(800);
BENCHMARK_CAPTURE(verify_checker, parallel, true)->Arg(200)->Arg(800);
BENCHMARK_CAPTURE(subset_enumeration, serial, false)->Arg(12)->Arg(14);
BENCHMARK_CAPTURE(subset_enumeration, parallel, true)->Arg(12)->Arg(14);
BENCHMARK_CAPTURE(dispatcher, serial, false)->Arg(12)->Arg(30);
BENCHMARK_CAPTURE(dispatcher, parallel, true)->Arg(12)->Arg(30);

BENCHMARK_MAIN();
