// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_SIM_SIMULATOR_HPP
#define NETFAIR_SIM_SIMULATOR_HPP

#include <netfair/sim/types.hpp>

#include <random>
#include <span>
#include <vector>

namespace netfair::sim {

//! Simulation randomness comes from two decoupled mt19937_64 streams with a
//! fixed, documented draw order, so runs are reproducible across platforms,
//! independent of container iteration order, and the lottery schedule is
//! unaffected by strategy parameters:
//!   - lottery stream, seeded with cfg.seed: for every round r = 1..R, for
//!     every node i = 0..n-1 in index order, one draw
//!     u = (rng() >> 11) * 2^-53, a win iff u < rate;
//!   - tie stream, seeded with cfg.seed ^ kTieStreamSalt: parent selection
//!     draws rng() % k once iff it has k >= 2 tied candidates (no draw for
//!     a unique candidate).
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kTieStreamSalt = 0x9e3779b97f4a7c15ULL;

inline double next_uniform(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

//! Blocks of `store` visible to `node` at `round`: round - b.round >=
//! D[b.miner][node], with the genesis treated as distance 0 from everyone.
std::vector<BlockId> visible_blocks(const BlockStore& store, int node, int round,
                                    const DistanceMatrix& dist);

struct ParentChoice
{
    BlockId parent = 0;
    double policy_leftover = 0.0; //!< leftover the strategy wants; clamped to the claim later
    bool forked = false;          //!< parent was below the visible maximal height
};

//! Pick a parent among the visible blocks per the node's strategy.
//!
//! Petty (and the undercutters when no fork triggers) take the visible
//! maximal-height block with the largest claimable fees
//! round - b.round + b.leftover; undercutters additionally consider parents
//! one below the maximal height once every maximal-height candidate's
//! claimable fees fall below their threshold. first_seen takes the
//! earliest-seen maximal-height block. Ties take one rng() % k draw.
//! policy_leftover carries the undercut bribe (kappa or minor_d) when the
//! choice forks a tip; an honest extension claims everything.
ParentChoice select_parent(const BlockStore& store, std::span<const BlockId> visible,
                           const StrategyConfig& strategy, int node, int round,
                           const DistanceMatrix& dist, Rng& rng);

//! All genesis-to-leaf chains whose leaf sits at the maximal height.
std::vector<std::vector<BlockId>> maximal_chains(const BlockStore& store);

//! Result of a full run, plus the final DAG for callers that want it.
struct SimResult
{
    SimOutcome outcome;
    BlockStore store;
};

//! Execute the round loop: every node independently wins a per-round lottery,
//! winners append one block chosen per their strategy, and rewards are
//! averaged over all maximal-height chains. Pure function of (cfg, dist):
//! identical inputs give bit-identical outcomes.
SimResult run_simulation(const SimConfig& cfg, const DistanceMatrix& dist);

//! Smallest eta such that every node with positive compute share earned at
//! least (1 - eta) * share of the winning chain's blocks; clamped to [0,1].
//! Nodes with zero compute share are excluded.
double eta_fairness_violation(const SimOutcome& outcome, std::span<const double> compute_shares);

} // namespace netfair::sim

#endif // NETFAIR_SIM_SIMULATOR_HPP
