#include <benchmark/benchmark.h>

#include <kgv/census.hpp>
#include <kgv/checks.hpp>
#include <kgv/fuzz.hpp>

namespace {

kgv::KGraphPtr twoByOneLoops() {
    auto g = kgv::ColoredGraph::make(
        2, {"v"}, {{"a", 1, "v", "v"}, {"b", 1, "v", "v"}, {"f", 2, "v", "v"}});
    return kgv::KGraph::build(std::move(g), {{"a", "f", "f", "b"}, {"b", "f", "f", "a"}});
}

kgv::KGraphPtr denseLoops(int edgesPerColor) {
    kgv::FuzzParams params;
    params.k = 2;
    params.vertices = 1;
    params.edgesPerColor = {edgesPerColor, edgesPerColor};
    params.count = 1;
    params.seed = 16;
    return kgv::fuzzGraphs(params).front().build();
}

void BM_PathEnumeration(benchmark::State& state) {
    auto kg = denseLoops(3);
    kgv::MultiDegree n({static_cast<int>(state.range(0)), static_cast<int>(state.range(0))});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kg->pathsOfDegree(n));
    }
}
BENCHMARK(BM_PathEnumeration)->Arg(1)->Arg(2)->Arg(3);

void BM_Factorize(benchmark::State& state) {
    auto kg = denseLoops(3);
    kgv::MultiDegree n({3, 3});
    auto paths = kg->pathsOfDegree(n);
    kgv::MultiDegree m({0, 3});
    kgv::MultiDegree rest = n - m;
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kg->factorize(paths[i++ % paths.size()], m, rest));
    }
}
BENCHMARK(BM_Factorize);

void BM_KpMultiply(benchmark::State& state) {
    auto kg = twoByOneLoops();
    kgv::ElementFuzzer gen(kg, 5, 2);
    auto x = gen.randomElement();
    auto y = gen.randomElement();
    for (auto _ : state) {
        benchmark::DoNotOptimize(x * y);
    }
}
BENCHMARK(BM_KpMultiply);

void BM_KpEquals(benchmark::State& state) {
    auto kg = twoByOneLoops();
    auto pv = kgv::KPElement::vertex(kg, 0);
    auto expanded = pv.expand(kg->zeroDegree(), kgv::MultiDegree({2, 2}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pv.equals(expanded));
    }
}
BENCHMARK(BM_KpEquals);

void BM_RepresentationSuite(benchmark::State& state) {
    auto kg = twoByOneLoops();
    kgv::Ladder lad(kg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kgv::checkRepresentation(lad, 1, 1));
    }
}
BENCHMARK(BM_RepresentationSuite);

void BM_Census(benchmark::State& state) {
    auto kg = twoByOneLoops();
    kgv::Ladder lad(kg);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kgv::census(lad, 1, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_Census)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
