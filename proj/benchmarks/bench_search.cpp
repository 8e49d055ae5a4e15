#include <benchmark/benchmark.h>

#include <surfskew/surfskew.hpp>

using namespace surfskew;

namespace {

Graph complete(int n) { return generate(family::Complete{n}); }

void BM_Genus(benchmark::State& state) {
    Graph g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(min_genus_exact(g).outcome.lower);
}
BENCHMARK(BM_Genus)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_GenusNoHalving(benchmark::State& state) {
    Graph g = complete(static_cast<int>(state.range(0)));
    GenusOptions off;
    off.reflection_halving = false;
    for (auto _ : state) benchmark::DoNotOptimize(min_genus_exact(g, {}, off).outcome.lower);
}
BENCHMARK(BM_GenusNoHalving)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Skewness(benchmark::State& state) {
    Graph g = generate(family::Cube{static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(skewness_exact(g, 0).outcome.lower);
}
BENCHMARK(BM_Skewness)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Crossing(benchmark::State& state) {
    Graph g = generate(family::CompleteBipartite{5, 3});
    for (auto _ : state) benchmark::DoNotOptimize(crossing_number_plane_exact(g, 6).outcome.lower);
}
BENCHMARK(BM_Crossing)->Unit(benchmark::kMillisecond);

void BM_CubeEmbedding(benchmark::State& state) {
    int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(euler_genus(cube_genus_embedding(d).rs));
}
BENCHMARK(BM_CubeEmbedding)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_FaceTrace(benchmark::State& state) {
    RotationSystem rs = cube_genus_embedding(static_cast<int>(state.range(0))).rs;
    for (auto _ : state) benchmark::DoNotOptimize(face_count(rs));
}
BENCHMARK(BM_FaceTrace)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
