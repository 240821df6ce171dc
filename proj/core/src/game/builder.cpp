// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/game/builder.hpp>

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace netfair::game {

PayoffCell simulate_payoff_cell(const sim::SimConfig& sim_template, const sim::DistanceMatrix& dist,
                                const sim::StrategyConfig& fast_strategy,
                                const sim::StrategyConfig& slow_strategy, int runs)
{
    if (runs < 1) throw std::invalid_argument("simulate_payoff_cell: need at least one run");

    sim::SimConfig cfg = sim_template;
    std::vector<bool> fast(static_cast<size_t>(cfg.n), false);
    for (int idx : cfg.fast_set) fast[static_cast<size_t>(idx)] = true;
    cfg.strategies.assign(static_cast<size_t>(cfg.n), slow_strategy);
    for (int i = 0; i < cfg.n; ++i) {
        if (fast[static_cast<size_t>(i)]) cfg.strategies[static_cast<size_t>(i)] = fast_strategy;
    }

    double sum_fast = 0.0, sum_slow = 0.0, sq_fast = 0.0, sq_slow = 0.0;
    for (int run = 0; run < runs; ++run) {
        cfg.seed = sim_template.seed + static_cast<std::uint64_t>(run);
        const sim::SimOutcome outcome = sim::run_simulation(cfg, dist).outcome;
        sum_fast += outcome.group_share_fast;
        sum_slow += outcome.group_share_slow;
        sq_fast += outcome.group_share_fast * outcome.group_share_fast;
        sq_slow += outcome.group_share_slow * outcome.group_share_slow;
    }
    PayoffCell cell;
    cell.row = sum_fast / runs;
    cell.col = sum_slow / runs;
    if (runs > 1) {
        const double var_fast = std::max(0.0, (sq_fast - runs * cell.row * cell.row) / (runs - 1));
        const double var_slow = std::max(0.0, (sq_slow - runs * cell.col * cell.col) / (runs - 1));
        cell.std_error = std::sqrt(std::max(var_fast, var_slow) / runs);
    }
    return cell;
}

PayoffMatrix build_payoff_matrix(const std::vector<std::string>& labels,
                                 const std::vector<sim::StrategyConfig>& strategy_defs,
                                 const sim::SimConfig& sim_template, const sim::DistanceMatrix& dist,
                                 int runs, int n_threads)
{
    if (labels.size() != strategy_defs.size() || labels.empty()) {
        throw std::invalid_argument("build_payoff_matrix: labels and strategy definitions must match");
    }
    const int k = static_cast<int>(labels.size());
    PayoffMatrix matrix(labels, labels);

    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) cells.emplace_back(r, c);
    }

    if (n_threads <= 1) {
        for (const auto& [r, c] : cells) {
            matrix.at(r, c) = simulate_payoff_cell(sim_template, dist, strategy_defs[static_cast<size_t>(r)],
                                                   strategy_defs[static_cast<size_t>(c)], runs);
        }
        return matrix;
    }

    // Work-stealing over cells; every slot is written by exactly one thread
    // and read only after the join, so results match the serial order.
    std::vector<PayoffCell> results(cells.size());
    std::atomic<size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) return;
            const auto [r, c] = cells[idx];
            results[idx] = simulate_payoff_cell(sim_template, dist, strategy_defs[static_cast<size_t>(r)],
                                                strategy_defs[static_cast<size_t>(c)], runs);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    for (size_t idx = 0; idx < cells.size(); ++idx) {
        matrix.at(cells[idx].first, cells[idx].second) = results[idx];
    }
    return matrix;
}

} // namespace netfair::game
