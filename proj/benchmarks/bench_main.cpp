#include <benchmark/benchmark.h>

#include "fourfold/catalog.hpp"
#include "fourfold/expression.hpp"
#include "fourfold/geography.hpp"
#include "fourfold/monopole.hpp"
#include "fourfold/reproduce.hpp"

namespace {

using namespace fourfold;

SymplecticPiece piece(std::string_view name, std::vector<std::int64_t> params) {
  return Catalog::builtin().get(name, params).pieces.at(0);
}

void BM_ParseAndEvaluate(benchmark::State& state) {
  const std::string text = "Z(8) # R22 # Y(3) # 32*CP2bar";
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(text));
}
BENCHMARK(BM_ParseAndEvaluate);

void BM_AxisBandwidth(benchmark::State& state) {
  const MonopoleSet s = bauer_monopole_set({piece("Z", {4}), piece("Y", {2})}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bandwidth(s));
}
BENCHMARK(BM_AxisBandwidth)->Arg(4)->Arg(16)->Arg(64);

void BM_PairwiseBandwidth(benchmark::State& state) {
  const MonopoleSet s = bauer_monopole_set({piece("Z", {4}), piece("Y", {2})}, state.range(0));
  const auto classes = s.classes();
  for (auto _ : state) benchmark::DoNotOptimize(bandwidth(classes));
}
BENCHMARK(BM_PairwiseBandwidth)->Arg(2)->Arg(4)->Arg(6);

void BM_Witness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(witness(21, 91, RegionTheorem::Lots, 3));
}
BENCHMARK(BM_Witness);

void BM_ScanCertify(benchmark::State& state) {
  const std::int64_t side = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(scan({1, side}, {1, 4 * side}, {true, 1}));
  state.SetItemsProcessed(state.iterations() * side * 4 * side);
}
BENCHMARK(BM_ScanCertify)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ReproduceAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_reproduce());
}
BENCHMARK(BM_ReproduceAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
