// Benchmarks of the main engines: building orbit categories, the stable
// module catalog, cones, mutation, the subcategory calculus and the full
// equivalence verification.
#include <benchmark/benchmark.h>

#include "rmw/modcat.hpp"
#include "rmw/presets.hpp"
#include "rmw/rigid.hpp"
#include "rmw/stable.hpp"
#include "rmw/subcat.hpp"
#include "rmw/suites.hpp"

namespace {

using namespace rmw;

const std::vector<OrbitSpec> kSpecs{{3, -1, 1}, {4, -1, 1}, {9, 3, 1}, {5, -2, 1}};

void BM_BuildMeshCategory(benchmark::State& state) {
  const OrbitSpec s = kSpecs[static_cast<size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(make_category(build_mesh_category(s)));
  state.SetLabel(s.str());
}
BENCHMARK(BM_BuildMeshCategory)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_StableCatalogPreprojectiveA3(benchmark::State& state) {
  const auto A = preprojective_A(3);
  for (auto _ : state) benchmark::DoNotOptimize(StableCategory(A).size());
}
BENCHMARK(BM_StableCatalogPreprojectiveA3)->Unit(benchmark::kMillisecond);

void BM_StableCatalogNakayama(benchmark::State& state) {
  const auto A = nakayama_cyclic(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(StableCategory(A).size());
}
BENCHMARK(BM_StableCatalogNakayama)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ConesOfBasisMaps(benchmark::State& state) {
  const auto P = load_preset("A9_t3s1");
  const FinCat& C = P->cat();
  std::vector<Morph> maps;
  for (int x = 0; x < C.size(); ++x)
    for (int y = 0; y < C.size(); ++y)
      for (const Morph& f : hom_basis(C, {x}, {y})) maps.push_back(f);
  for (auto _ : state)
    for (const Morph& f : maps) benchmark::DoNotOptimize(cone(C, f).Z.size());
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * maps.size()));
}
BENCHMARK(BM_ConesOfBasisMaps)->Unit(benchmark::kMillisecond);

void BM_Mutate(benchmark::State& state) {
  const auto P = load_preset("A9_t3s1");
  const Obj T = P->resolve_list("a,b,c"), R = P->resolve_list("c");
  for (auto _ : state) benchmark::DoNotOptimize(mutate(P->cat(), T, R).Tprime.size());
}
BENCHMARK(BM_Mutate)->Unit(benchmark::kMicrosecond);

void BM_EnumerateBasicRigid(benchmark::State& state) {
  const auto P = load_preset(state.range(0) == 0 ? "A3_tm1s1" : "A4_tm1s1");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_basic_rigid(P->cat()).size());
}
BENCHMARK(BM_EnumerateBasicRigid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CbarT(benchmark::State& state) {
  const auto P = load_preset("A9_t3s1");
  const Obj T = P->resolve_list("a,b,c");
  const Obj Tbar = P->resolve_list("a,b");
  for (auto _ : state) benchmark::DoNotOptimize(cbar_T(P->cat(), T, Tbar).size());
}
BENCHMARK(BM_CbarT)->Unit(benchmark::kMillisecond);

void BM_VerifyMainEquivalence(benchmark::State& state) {
  const auto P = load_preset("A9_t3s1");
  const Obj T = P->resolve_list("a,b,c"), R = P->resolve_list("c");
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_equivalence(P->cat(), T, R).pass);
}
BENCHMARK(BM_VerifyMainEquivalence)->Unit(benchmark::kMillisecond);

void BM_VerifyTheoremFbar(benchmark::State& state) {
  const auto P = load_preset("A9_t3s1");
  const Obj T = P->resolve_list("a,c"), R = P->resolve_list("c");
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_fbar(P->cat(), T, R).pass);
}
BENCHMARK(BM_VerifyTheoremFbar)->Unit(benchmark::kMillisecond);

void BM_PerpSuiteClusterA3(benchmark::State& state) {
  const auto P = load_preset("A3_tm1s1");
  const auto splits = all_splits(enumerate_basic_rigid(P->cat()));
  for (auto _ : state) benchmark::DoNotOptimize(perp_suite(P->cat(), splits).tested);
}
BENCHMARK(BM_PerpSuiteClusterA3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
