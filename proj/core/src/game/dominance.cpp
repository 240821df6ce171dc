// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/game/dominance.hpp>

#include <stdexcept>

namespace netfair::game {

namespace {

// Payoff of `own` against `other` from `player`'s point of view.
double payoff_for(const PayoffMatrix& m, Player player, int own, int other)
{
    return player == Player::row ? m.at(own, other).row : m.at(other, own).col;
}

int strategy_count(const PayoffMatrix& m, Player player)
{
    return player == Player::row ? m.rows() : m.cols();
}

const std::vector<std::string>& labels(const PayoffMatrix& m, Player player)
{
    return player == Player::row ? m.row_labels() : m.col_labels();
}

struct DominanceCheck
{
    bool dominates = false;
    std::vector<std::string> forgiven;
};

// Does `a` dominate `b` for `player` under the tolerance rule?
DominanceCheck check_dominates(const PayoffMatrix& m, Player player, int a, int b, double tolerance)
{
    DominanceCheck result;
    const Player other_player = player == Player::row ? Player::col : Player::row;
    const int n_other = strategy_count(m, other_player);
    const std::vector<std::string>& other_labels = labels(m, other_player);
    bool strict_somewhere = false;
    for (int o = 0; o < n_other; ++o) {
        const double ua = payoff_for(m, player, a, o);
        const double ub = payoff_for(m, player, b, o);
        if (ua < ub - tolerance) return {};
        if (ua < ub) result.forgiven.push_back(other_labels[static_cast<size_t>(o)]);
        if (ua > ub) strict_somewhere = true;
    }
    result.dominates = strict_somewhere;
    return result;
}

// One dominance evaluation for `player` on `matrix`. Only strategies
// dominated by a strategy that is itself undominated are reported, so the
// surviving set can never be empty.
std::vector<Removal> evaluate_pass(const PayoffMatrix& matrix, Player player, double tolerance)
{
    std::vector<Removal> removals;
    const int count = strategy_count(matrix, player);
    if (count <= 1) return removals;

    std::vector<bool> dominated(static_cast<size_t>(count), false);
    for (int b = 0; b < count; ++b) {
        for (int a = 0; a < count && !dominated[static_cast<size_t>(b)]; ++a) {
            if (a != b) dominated[static_cast<size_t>(b)] = check_dominates(matrix, player, a, b, tolerance).dominates;
        }
    }

    for (int b = 0; b < count; ++b) {
        if (!dominated[static_cast<size_t>(b)]) continue;
        for (int a = 0; a < count; ++a) {
            if (a == b || dominated[static_cast<size_t>(a)]) continue;
            DominanceCheck check = check_dominates(matrix, player, a, b, tolerance);
            if (!check.dominates) continue;
            Removal removal;
            removal.player = player;
            removal.removed = labels(matrix, player)[static_cast<size_t>(b)];
            removal.dominator = labels(matrix, player)[static_cast<size_t>(a)];
            removal.forgiven_cells = std::move(check.forgiven);
            removals.push_back(std::move(removal));
            break;
        }
        // A strategy dominated only by dominated strategies stays.
    }
    return removals;
}

void apply_pass(PayoffMatrix& matrix, const std::vector<Removal>& removals, Player player)
{
    if (removals.empty()) return;
    std::vector<std::string> drop;
    for (const Removal& removal : removals) drop.push_back(removal.removed);
    matrix = player == Player::row ? matrix.without(drop, {}) : matrix.without({}, drop);
}

} // namespace

DominanceResult remove_dominated(const PayoffMatrix& matrix, double tolerance, RemovalMode mode)
{
    if (tolerance < 0.0) throw std::invalid_argument("remove_dominated: tolerance must be >= 0");
    matrix.validate();

    DominanceResult result{matrix, {}};

    if (mode == RemovalMode::single_pass) {
        // Both players evaluated against the full matrix, then both applied.
        std::vector<Removal> row_removals = evaluate_pass(matrix, Player::row, tolerance);
        std::vector<Removal> col_removals = evaluate_pass(matrix, Player::col, tolerance);
        apply_pass(result.reduced, row_removals, Player::row);
        apply_pass(result.reduced, col_removals, Player::col);
        for (auto& r : row_removals) result.log.push_back(std::move(r));
        for (auto& r : col_removals) result.log.push_back(std::move(r));
        return result;
    }

    bool removed_any = true;
    while (removed_any) {
        removed_any = false;
        for (Player player : {Player::row, Player::col}) {
            std::vector<Removal> removals = evaluate_pass(result.reduced, player, tolerance);
            apply_pass(result.reduced, removals, player);
            removed_any = removed_any || !removals.empty();
            for (auto& r : removals) result.log.push_back(std::move(r));
        }
    }
    return result;
}

PayoffMatrix apply_removals(const PayoffMatrix& matrix, const std::vector<Removal>& log)
{
    PayoffMatrix out = matrix;
    for (const Removal& removal : log) {
        out = removal.player == Player::row ? out.without({removal.removed}, {})
                                            : out.without({}, {removal.removed});
    }
    return out;
}

} // namespace netfair::game
