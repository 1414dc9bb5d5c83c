#include <benchmark/benchmark.h>

#include "hyperchrome/coloring.hpp"
#include "hyperchrome/constructions.hpp"
#include "hyperchrome/containment.hpp"
#include "hyperchrome/exact.hpp"
#include "hyperchrome/extremal.hpp"

using namespace hyperchrome;

namespace {

void BM_ContainsFano(benchmark::State& state) {
    auto host = random_3graph(static_cast<std::size_t>(state.range(0)), 3 * state.range(0), RngSeed{1});
    const auto fano = named("fano");
    for (auto _ : state) benchmark::DoNotOptimize(contains(host, fano));
}
BENCHMARK(BM_ContainsFano)->Arg(10)->Arg(14)->Arg(18);

void BM_ChromaticComplete(benchmark::State& state) {
    auto g = complete(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticComplete)->DenseRange(5, 9, 2);

void BM_ChromaticRandom(benchmark::State& state) {
    auto g = random_3graph(static_cast<std::size_t>(state.range(0)), 4 * state.range(0), RngSeed{7});
    for (auto _ : state) benchmark::DoNotOptimize(chromatic_number(g));
}
BENCHMARK(BM_ChromaticRandom)->Arg(12)->Arg(16)->Arg(20);

void BM_CanonicalForm(benchmark::State& state) {
    auto g = random_3graph(static_cast<std::size_t>(state.range(0)), 2 * state.range(0), RngSeed{3});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_CanonicalGq(benchmark::State& state) {
    auto g = gq(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalGq)->Arg(2);

void BM_LllColor(benchmark::State& state) {
    const auto edges = static_cast<std::size_t>(state.range(0));
    std::vector<std::vector<Vertex>> matching;
    for (std::size_t i = 0; i < edges; ++i)
        matching.push_back({static_cast<Vertex>(3 * i), static_cast<Vertex>(3 * i + 1), static_cast<Vertex>(3 * i + 2)});
    const Hypergraph g(3 * edges, 3, matching);
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lll_color(g, 3, RngSeed{++seed}));
}
BENCHMARK(BM_LllColor)->Arg(100)->Arg(1000);

void BM_TuranLinearPair(benchmark::State& state) {
    const auto pair = named("linear_pair");
    for (auto _ : state) benchmark::DoNotOptimize(turan_ex(static_cast<std::size_t>(state.range(0)), pair));
}
BENCHMARK(BM_TuranLinearPair)->DenseRange(5, 7);

}  // namespace

BENCHMARK_MAIN();
