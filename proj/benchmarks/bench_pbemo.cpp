#include <vector>

#include <benchmark/benchmark.h>

#include "pbemo/pbemo.hpp"

using namespace pbemo;

namespace {

auto RandomObjs(std::size_t n, std::size_t m, std::uint64_t seed) -> std::vector<ObjectiveVector>
{
    RandomEngine rng(seed);
    std::vector<ObjectiveVector> out(n, ObjectiveVector(m));
    for (auto& f : out) {
        for (auto& v : f) {
            v = rng.Uniform01();
        }
    }
    return out;
}

void BM_NondominatedSort(benchmark::State& state)
{
    auto const objs = RandomObjs(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(NondominatedSort(objs));
    }
}
BENCHMARK(BM_NondominatedSort)->Args({200, 2})->Args({200, 6})->Args({1000, 3});

void BM_BoundedArchive(benchmark::State& state)
{
    auto const m = static_cast<std::size_t>(state.range(0));
    auto const batch = RandomObjs(100, m, 2);
    auto const archive = UpdateBoundedArchive({}, RandomObjs(100, m, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(UpdateBoundedArchive(archive, batch));
    }
}
BENCHMARK(BM_BoundedArchive)->Arg(2)->Arg(4)->Arg(6);

void BM_IgdPlusC(benchmark::State& state)
{
    auto const problem = MakeProblem("dtlz2", 3);
    RandomEngine rng(4);
    auto const samples = problem.SamplePf(10000, rng);
    TrueScaler const scaler(problem.Ideal(), problem.Nadir());
    auto const roi = BuildRoiReferenceSet(samples, ObjectiveVector{0.8, 0.6, 0.6}, 0.1, scaler);
    auto const sols = problem.SamplePf(100, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(IgdPlusC(sols, roi, scaler));
    }
}
BENCHMARK(BM_IgdPlusC);

void BM_PfSample(benchmark::State& state)
{
    auto const problem = MakeProblem(state.range(0) == 0 ? "dtlz2" : "dtlz7", 3);
    for (auto _ : state) {
        RandomEngine rng(5);
        benchmark::DoNotOptimize(problem.SamplePf(2000, rng));
    }
}
BENCHMARK(BM_PfSample)->Arg(0)->Arg(1);

void BM_OptimizerStep(benchmark::State& state)
{
    auto const problem = MakeProblem("dtlz2", 3);
    AlgorithmConfig cfg;
    cfg.kind = static_cast<AlgorithmKind>(state.range(0));
    cfg.reference_point = {0.8, 0.6, 0.6};
    Optimizer opt(problem, cfg, NormalizationKind::BA, 6);
    opt.Initialize();
    for (auto _ : state) {
        opt.Step();
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(cfg.mu));
}
BENCHMARK(BM_OptimizerStep)
    ->Arg(static_cast<int>(AlgorithmKind::Nsga2))
    ->Arg(static_cast<int>(AlgorithmKind::Rnsga2))
    ->Arg(static_cast<int>(AlgorithmKind::R2nsga2))
    ->Arg(static_cast<int>(AlgorithmKind::MoeadNums));

} // namespace

BENCHMARK_MAIN();
