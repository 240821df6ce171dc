// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <benchmark/benchmark.h>

#include <netfair/alpha.hpp>
#include <netfair/analytics.hpp>
#include <netfair/game/dominance.hpp>
#include <netfair/game/msne.hpp>
#include <netfair/sim/simulator.hpp>

using namespace netfair;

namespace {

void BM_FailProbability(benchmark::State& state)
{
    const auto params = NetworkParams::from_lambda(0.5);
    double phi = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fail_probability(params, phi, 11.0));
        phi = phi < 0.9 ? phi + 1e-6 : 0.1;
    }
}
BENCHMARK(BM_FailProbability);

void BM_PublishingFairness(benchmark::State& state)
{
    const auto params = NetworkParams::from_lambda(static_cast<double>(state.range(0)) / 600.0);
    const auto profile = linear_propagation_profile(5, 15);
    for (auto _ : state) {
        benchmark::DoNotOptimize(publishing_fairness(params, profile, 1e-12));
    }
}
BENCHMARK(BM_PublishingFairness)->Arg(1)->Arg(30)->Arg(300);

void BM_RunSimulation(benchmark::State& state)
{
    sim::SimConfig cfg;
    cfg.n = 10;
    cfg.fast_set = {0, 1, 2, 3, 4};
    cfg.rounds = static_cast<int>(state.range(0));
    cfg.lottery_rate = 0.05;
    cfg.max_block_size = 20.0;
    cfg.seed = 1;
    cfg.strategies.assign(10, sim::StrategyConfig::petty());
    for (int i = 5; i < 10; ++i) cfg.strategies[static_cast<size_t>(i)] = sim::StrategyConfig::major_undercutting(1.2);
    const sim::DistanceMatrix dist = sim::make_distance_matrix(10, cfg.fast_set, 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim::run_simulation(cfg, dist));
        ++cfg.seed;
    }
    state.SetItemsProcessed(state.iterations() * cfg.rounds);
}
BENCHMARK(BM_RunSimulation)->Arg(500)->Arg(2000)->Arg(8000);

void BM_MsneEnumerate(benchmark::State& state)
{
    game::PayoffMatrix matrix({"S1", "S2", "S3", "S4"}, {"S1", "S2", "S3", "S4"});
    std::uint64_t x = 88172645463325252ULL;
    const auto next = [&x] {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return static_cast<double>(x >> 11) * 0x1.0p-53 * 100.0;
    };
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) matrix.at(r, c) = game::PayoffCell{next(), next(), 0.0};
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(game::msne_enumerate(matrix, 1e-6));
    }
}
BENCHMARK(BM_MsneEnumerate);

void BM_RemoveDominated(benchmark::State& state)
{
    game::PayoffMatrix matrix({"S1", "S2", "S3", "S4"}, {"S1", "S2", "S3", "S4"});
    const double fast[4][4] = {{75.22, 71.72, 74.29, 73.75},
                               {75.22, 76.05, 72.17, 74.99},
                               {63.30, 63.35, 66.90, 74.02},
                               {63.41, 64.04, 56.66, 67.54}};
    const double slow[4][4] = {{19.13, 23.12, 21.54, 22.17},
                               {19.86, 19.56, 24.24, 21.74},
                               {33.17, 33.84, 30.68, 23.60},
                               {33.06, 33.29, 40.78, 30.26}};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) matrix.at(r, c) = game::PayoffCell{fast[r][c], slow[r][c], 0.0};
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(game::remove_dominated(matrix, 1.0));
    }
}
BENCHMARK(BM_RemoveDominated);

} // namespace

BENCHMARK_MAIN();
