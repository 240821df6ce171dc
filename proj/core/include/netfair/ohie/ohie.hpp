// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_OHIE_OHIE_HPP
#define NETFAIR_OHIE_OHIE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace netfair::ohie {

//! A block on one of the k parallel chains. rank/next_rank are the labels
//! that merge the chains into one total ordering; next_rank is chosen by the
//! miner and becomes the rank of the chain's next block.
struct OhieBlock
{
    int chain_id = 0;
    int rank = 0;
    int next_rank = 1;
    double fee_value = 0.0;
    int position = 0; //!< index within its chain
};

//! Reference to a block by chain and rank.
struct BlockRef
{
    int chain_id = 0;
    int rank = 0;

    friend bool operator==(const BlockRef&, const BlockRef&) = default;
};

//! k parallel chains, each starting at a genesis block of rank 0.
class OhieChainState
{
public:
    explicit OhieChainState(std::vector<std::vector<OhieBlock>> chains);

    //! Parse a plain text description, one block per line:
    //! `chain_id rank next_rank fee_value` (comma or whitespace separated,
    //! '#' starts a comment). Blocks may appear in any order.
    static OhieChainState from_text(std::istream& in);

    int k() const { return static_cast<int>(m_chains.size()); }
    const std::vector<std::vector<OhieBlock>>& chains() const { return m_chains; }
    const std::vector<OhieBlock>& chain(int chain_id) const;
    const OhieBlock& tip(int chain_id) const;

    //! Find a block; throws when the reference does not exist.
    const OhieBlock& block(const BlockRef& ref) const;

private:
    std::vector<std::vector<OhieBlock>> m_chains;
};

//! All blocks in increasing rank order, ties broken by lower chain id.
std::vector<OhieBlock> total_block_ordering(const OhieChainState& state);

//! Does position (rank_a, chain_a) precede (rank_b, chain_b) in the total
//! block ordering?
inline bool precedes_in_tbo(int rank_a, int chain_a, int rank_b, int chain_b)
{
    return rank_a != rank_b ? rank_a < rank_b : chain_a < chain_b;
}

//! Outcome of appending a block with the given next_rank at each chain tip.
struct FrontrunAnalysis
{
    double probability = 0.0;      //!< success_chains / k
    int success_chains = 0;        //!< landings that precede the target in the total ordering
    std::vector<int> rejected_chains; //!< landings rejected for violating rank monotonicity
    std::vector<int> losing_chains;   //!< valid landings behind the target
};

//! Probability that a new block (landing uniformly on the k chains, at each
//! chain's tip) precedes `target` in the total block ordering. Chains where
//! candidate_next_rank <= the landing rank cannot host the block and
//! contribute 0 (recorded in rejected_chains).
FrontrunAnalysis frontrun_success_probability(const OhieChainState& state, int candidate_next_rank,
                                              const BlockRef& target);

//! E[reward] = success probability x reward.
double expected_frontrun_reward(double success_p, double reward);

enum class ChainCaseKind {
    extends,  //!< nothing dropped on this chain; the block extends the tip
    tie,      //!< equal-length fork; petty tie-break decides
    orphaned, //!< strictly shorter fork; always loses
};

struct ChainCase
{
    int chain_id = 0;
    ChainCaseKind kind = ChainCaseKind::extends;
    bool success = false;
};

struct UndercutDecision
{
    bool undercut = false;           //!< verdict: expected steal beats honest mining
    double success_probability = 0.0;
    double stealable = 0.0;          //!< total fee value of the dropped blocks
    double expected_undercut_reward = 0.0;
    double honest_reward = 0.0;
    double breakeven_factor = 0.0;   //!< steal must exceed honest x this (k / successes)
    int stealth_next_rank = 0;       //!< greatest next_rank among the kept chain tips
    std::vector<ChainCase> cases;
};

//! Evaluate forking out `drop_set` (a suffix of each touched chain) versus
//! extending honestly for `honest_reward`. Per landing chain: untouched
//! chains are extended (success); an equal-length fork wins only when the
//! majority is petty-compliant; a shorter fork is orphaned.
UndercutDecision undercut_decision(const OhieChainState& state, const std::vector<BlockRef>& drop_set,
                                   double honest_reward, bool petty_majority);

} // namespace netfair::ohie

#endif // NETFAIR_OHIE_OHIE_HPP
