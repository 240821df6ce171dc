// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_GAME_MSNE_HPP
#define NETFAIR_GAME_MSNE_HPP

#include <netfair/game/payoff.hpp>

#include <string>
#include <utility>
#include <vector>

namespace netfair::game {

//! Largest gain available from a unilateral pure deviation, per player.
//! An exact equilibrium has regrets <= 0 (up to rounding).
std::pair<double, double> best_response_regret(const PayoffMatrix& matrix, const MixedProfile& profile);

struct Equilibrium
{
    MixedProfile profile;
    double row_regret = 0.0;
    double col_regret = 0.0;
};

struct MsneResult
{
    std::vector<Equilibrium> equilibria;
    //! Support pairs whose indifference system was singular; equilibria on
    //! those supports may form a continuum and are not enumerated.
    std::vector<std::string> degenerate_supports;
};

//! Enumerate mixed equilibria by support enumeration over all support pairs.
//! For each pair the indifference system is solved by least squares; a
//! candidate is kept only when the solve is consistent, mixes are
//! non-negative, and the independent best_response_regret check passes at
//! epsilon. Duplicate profiles are reported once.
MsneResult msne_enumerate(const PayoffMatrix& matrix, double epsilon);

} // namespace netfair::game

#endif // NETFAIR_GAME_MSNE_HPP
