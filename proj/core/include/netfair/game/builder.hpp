// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_GAME_BUILDER_HPP
#define NETFAIR_GAME_BUILDER_HPP

#include <netfair/game/payoff.hpp>
#include <netfair/sim/simulator.hpp>

#include <string>
#include <vector>

namespace netfair::game {

//! One payoff cell: fast nodes all play `fast_strategy`, slow nodes all play
//! `slow_strategy`, group shares averaged over `runs` simulations seeded
//! template.seed + 0 .. template.seed + runs-1 (the same seed sequence for
//! every cell). std_error is the larger of the two group standard errors.
PayoffCell simulate_payoff_cell(const sim::SimConfig& sim_template, const sim::DistanceMatrix& dist,
                                const sim::StrategyConfig& fast_strategy,
                                const sim::StrategyConfig& slow_strategy, int runs);

//! Full strategy-grid payoff matrix (rows = fast player, cols = slow
//! player). Cells are independent; n_threads > 1 dispatches them
//! concurrently, with results identical to the serial order.
PayoffMatrix build_payoff_matrix(const std::vector<std::string>& labels,
                                 const std::vector<sim::StrategyConfig>& strategy_defs,
                                 const sim::SimConfig& sim_template, const sim::DistanceMatrix& dist,
                                 int runs, int n_threads = 1);

} // namespace netfair::game

#endif // NETFAIR_GAME_BUILDER_HPP
