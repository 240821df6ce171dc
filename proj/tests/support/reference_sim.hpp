// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_TESTS_SUPPORT_REFERENCE_SIM_HPP
#define NETFAIR_TESTS_SUPPORT_REFERENCE_SIM_HPP

#include <netfair/sim/simulator.hpp>
#include <netfair/sim/types.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace netfair::test {

//! Literal round-loop trace of the mining algorithm, kept deliberately
//! naive: full visible-set scan every win, no height index, no incremental
//! state. Consumes the documented RNG streams (lottery: one draw per node
//! per round; tie stream: one rng() % k draw per k>=2 tie) so its DAG must
//! match the engine's block for block.
inline std::vector<sim::Block> reference_simulate(const sim::SimConfig& cfg,
                                                  const sim::DistanceMatrix& dist)
{
    std::mt19937_64 lottery_rng(cfg.seed);
    std::mt19937_64 tie_rng(cfg.seed ^ sim::kTieStreamSalt);
    std::vector<sim::Block> blocks;
    blocks.push_back(sim::Block{});

    const auto delay = [&](const sim::Block& b, int node) {
        return b.miner == sim::kGenesisMiner ? 0 : dist.at(b.miner, node);
    };
    const auto claim = [](const sim::Block& b, int round) {
        return static_cast<double>(round - b.round) + b.leftover;
    };

    for (int r = 1; r <= cfg.rounds; ++r) {
        for (int i = 0; i < cfg.n; ++i) {
            const double u = static_cast<double>(lottery_rng() >> 11) * 0x1.0p-53;
            if (u >= cfg.lottery_rate) continue;

            std::vector<int> visible;
            for (const sim::Block& b : blocks) {
                if (r - b.round >= delay(b, i)) visible.push_back(b.id);
            }
            int maxh = 0;
            for (int id : visible) maxh = std::max(maxh, blocks[static_cast<size_t>(id)].height);

            const sim::StrategyConfig& strat = cfg.strategies[static_cast<size_t>(i)];
            std::vector<int> candidates;
            for (int id : visible) {
                if (blocks[static_cast<size_t>(id)].height == maxh) candidates.push_back(id);
            }

            std::vector<int> tied;
            if (strat.kind == sim::StrategyKind::first_seen) {
                int best_seen = INT32_MAX;
                for (int id : candidates) {
                    const sim::Block& b = blocks[static_cast<size_t>(id)];
                    best_seen = std::min(best_seen, b.round + delay(b, i));
                }
                for (int id : candidates) {
                    const sim::Block& b = blocks[static_cast<size_t>(id)];
                    if (b.round + delay(b, i) == best_seen) tied.push_back(id);
                }
            } else {
                const bool undercutter = strat.kind == sim::StrategyKind::minor_undercut ||
                                         strat.kind == sim::StrategyKind::major_undercut;
                if (undercutter) {
                    double best_tip = 0.0;
                    for (int id : candidates) best_tip = std::max(best_tip, claim(blocks[static_cast<size_t>(id)], r));
                    if (best_tip < strat.threshold && maxh >= 1) {
                        for (int id : visible) {
                            if (blocks[static_cast<size_t>(id)].height == maxh - 1) candidates.push_back(id);
                        }
                    }
                }
                double best = -1.0;
                for (int id : candidates) best = std::max(best, claim(blocks[static_cast<size_t>(id)], r));
                for (int id : candidates) {
                    if (claim(blocks[static_cast<size_t>(id)], r) == best) tied.push_back(id);
                }
            }
            const int parent =
                tied.size() > 1 ? tied[static_cast<size_t>(tie_rng() % tied.size())] : tied.front();

            double policy_leftover = 0.0;
            if (strat.kind == sim::StrategyKind::major_undercut) policy_leftover = strat.kappa;
            if (strat.kind == sim::StrategyKind::minor_undercut) policy_leftover = strat.minor_d;

            const sim::Block& p = blocks[static_cast<size_t>(parent)];
            const double raw = std::min(claim(p, r), cfg.max_block_size);
            const double leftover = std::min(policy_leftover, raw);
            sim::Block nb;
            nb.id = static_cast<int>(blocks.size());
            nb.parent = parent;
            nb.miner = i;
            nb.round = r;
            nb.height = p.height + 1;
            nb.reward = raw - leftover;
            nb.leftover = leftover;
            blocks.push_back(nb);
        }
    }
    return blocks;
}

} // namespace netfair::test

#endif // NETFAIR_TESTS_SUPPORT_REFERENCE_SIM_HPP
