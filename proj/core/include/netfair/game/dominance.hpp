// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_GAME_DOMINANCE_HPP
#define NETFAIR_GAME_DOMINANCE_HPP

#include <netfair/game/payoff.hpp>

#include <string>
#include <vector>

namespace netfair::game {

enum class Player { row, col };

enum class RemovalMode {
    iterated,    //!< alternate players (row first) until no removal fires
    single_pass, //!< one dominance evaluation per player on the full matrix
};

//! One logged elimination: `removed` lost to `dominator` for `player`, with
//! the opposing strategies where the dominator was behind by at most the
//! tolerance listed in `forgiven_cells`.
struct Removal
{
    Player player = Player::row;
    std::string removed;
    std::string dominator;
    std::vector<std::string> forgiven_cells;
};

struct DominanceResult
{
    PayoffMatrix reduced;
    std::vector<Removal> log;
};

//! Iterated removal of weakly dominated strategies with tolerance.
//!
//! A strategy s is dominated by s' when u(s',o) >= u(s,o) - tolerance for
//! every opposing strategy o, with u(s',o) > u(s,o) strictly for at least
//! one o. Each pass removes every strategy of the active player that is
//! dominated by a strategy not itself dominated in that pass, so a player's
//! strategy set can never empty. Weak-dominance elimination is
//! order-dependent; the log records every elimination in order and replaying
//! it against the original matrix reproduces `reduced` exactly.
DominanceResult remove_dominated(const PayoffMatrix& matrix, double tolerance,
                                 RemovalMode mode = RemovalMode::iterated);

//! Re-apply a removal log to a matrix (the replay check for the log).
PayoffMatrix apply_removals(const PayoffMatrix& matrix, const std::vector<Removal>& log);

} // namespace netfair::game

#endif // NETFAIR_GAME_DOMINANCE_HPP
