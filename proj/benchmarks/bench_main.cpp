#include <benchmark/benchmark.h>

#include <random>

#include "generators.hpp"
#include "hvortho/angle_flow.hpp"
#include "hvortho/oracle.hpp"
#include "hvortho/ortho_layout.hpp"
#include "hvortho/outerplanar.hpp"

using namespace hvortho;
using namespace testing_support;

namespace {

PlaneInstance plane(int side) {
  std::mt19937 rng(static_cast<unsigned>(side));
  return grid_instance(side, side, 0.35, rng);
}

void BM_AngleFlow(benchmark::State& state) {
  auto inst = plane(static_cast<int>(state.range(0)));
  FaceSet faces = faces_from_rotation(inst.graph, inst.rot);
  for (auto _ : state) benchmark::DoNotOptimize(admissible_assignment(inst.graph, faces));
  state.SetComplexityN(inst.graph.vertex_count());
}
BENCHMARK(BM_AngleFlow)->RangeMultiplier(2)->Range(8, 128)->Complexity()->Unit(benchmark::kMillisecond);

void BM_DrawPlane(benchmark::State& state) {
  auto inst = plane(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(draw_plane(inst.graph, inst.rot));
  state.SetComplexityN(inst.graph.vertex_count());
}
BENCHMARK(BM_DrawPlane)->RangeMultiplier(2)->Range(8, 128)->Complexity()->Unit(benchmark::kMillisecond);

void BM_DecideOuterplanar(benchmark::State& state) {
  std::mt19937 rng(5);
  auto g = random_glued(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(g));
  state.SetComplexityN(g.vertex_count());
}
BENCHMARK(BM_DecideOuterplanar)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_DrawOuterplanar(benchmark::State& state) {
  std::mt19937 rng(5);
  auto g = random_glued(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(draw_outerplanar(g));
  state.SetComplexityN(g.vertex_count());
}
BENCHMARK(BM_DrawOuterplanar)->RangeMultiplier(4)->Range(4, 256)->Complexity();

void BM_DrawLadder(benchmark::State& state) {
  auto g = ladder(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(draw_outerplanar(g));
  state.SetComplexityN(g.vertex_count());
}
BENCHMARK(BM_DrawLadder)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_GridOracle(benchmark::State& state) {
  auto g = ladder(static_cast<int>(state.range(0)));
  OracleBudget budget{20, 16};
  for (auto _ : state) benchmark::DoNotOptimize(grid_search_drawing(g, budget));
}
BENCHMARK(BM_GridOracle)->DenseRange(1, 3);

}  // namespace
BENCHMARK_MAIN();
