// Serial reference against the OpenMP kernel on real verification workloads.

#include "grasspack/construct.hpp"
#include "grasspack/pairwise.hpp"
#include "grasspack/simplexpack.hpp"

#include <benchmark/benchmark.h>

using namespace grasspack;

namespace {

const GroupPacking& group_workload() {
    static const GroupPacking gp = theorem1(3, 0);
    return gp;
}

const Packing& float_workload() {
    static const Packing packing = theorem3(23);
    return packing;
}

void exact_kernel(benchmark::State& state, bool parallel) {
    const auto& gp = group_workload();
    const OrthogonalSpace space(gp.i);
    const ExactPairFn d2 = [&](std::uint64_t a, std::uint64_t b) { return pair_distance(space, gp.planes[a], gp.planes[b]); };
    for (auto _ : state) {
        auto stats = parallel ? exact_pairs_parallel(gp.planes.size(), {}, d2, static_cast<int>(state.range(0)))
                              : exact_pairs_serial(gp.planes.size(), {}, d2);
        benchmark::DoNotOptimize(stats);
    }
    state.SetItemsProcessed(state.iterations() * gp.planes.size() * (gp.planes.size() - 1) / 2);
}

void float_kernel(benchmark::State& state, bool parallel) {
    const auto& packing = float_workload();
    std::vector<Eigen::MatrixXd> bases;
    for (const auto& p : packing.planes) bases.push_back(p.basis());
    const double n = packing.n;
    const FloatPairFn d2 = [&](std::uint64_t a, std::uint64_t b) {
        return n - (bases[a] * bases[b].transpose()).squaredNorm();
    };
    for (auto _ : state) {
        auto stats = parallel ? float_pairs_parallel(bases.size(), {}, d2, static_cast<int>(state.range(0)))
                              : float_pairs_serial(bases.size(), {}, d2);
        benchmark::DoNotOptimize(stats);
    }
    state.SetItemsProcessed(state.iterations() * bases.size() * (bases.size() - 1) / 2);
}

void BM_ExactSerial(benchmark::State& state) { exact_kernel(state, false); }
void BM_ExactParallel(benchmark::State& state) { exact_kernel(state, true); }
void BM_FloatSerial(benchmark::State& state) { float_kernel(state, false); }
void BM_FloatParallel(benchmark::State& state) { float_kernel(state, true); }

}  // namespace

BENCHMARK(BM_ExactSerial)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExactParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FloatSerial)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FloatParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
