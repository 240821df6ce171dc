// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_SIM_TYPES_HPP
#define NETFAIR_SIM_TYPES_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace netfair::sim {

using BlockId = int;
inline constexpr BlockId kNoBlock = -1;
inline constexpr int kGenesisMiner = -1;

//! A mined block. Fees accrue globally at one unit per round and a block
//! claims the accrual since its parent (plus the parent's leftover), capped
//! by the block size; `leftover` is the part deliberately left for the next
//! miner.
struct Block
{
    BlockId id = 0;
    BlockId parent = kNoBlock; //!< kNoBlock for genesis
    int miner = kGenesisMiner; //!< node index, kGenesisMiner for genesis
    int round = 0;
    int height = 0;
    double reward = 0.0;
    double leftover = 0.0;
};

//! Append-only block DAG rooted at a genesis block (id 0, height 0, round 0).
class BlockStore
{
public:
    BlockStore() { m_blocks.push_back(Block{}); }

    const Block& operator[](BlockId id) const { return m_blocks[static_cast<size_t>(id)]; }
    const std::vector<Block>& blocks() const { return m_blocks; }
    int size() const { return static_cast<int>(m_blocks.size()); }
    int max_height() const { return m_max_height; }

    //! Append a block; parent must exist and predate it.
    BlockId append(BlockId parent, int miner, int round, double reward, double leftover)
    {
        if (parent < 0 || parent >= size()) throw std::invalid_argument("BlockStore: unknown parent");
        const Block& p = m_blocks[static_cast<size_t>(parent)];
        if (round <= p.round) throw std::invalid_argument("BlockStore: block must postdate its parent");
        if (reward < 0.0 || leftover < 0.0) throw std::invalid_argument("BlockStore: negative fee value");
        Block b;
        b.id = size();
        b.parent = parent;
        b.miner = miner;
        b.round = round;
        b.height = p.height + 1;
        b.reward = reward;
        b.leftover = leftover;
        m_blocks.push_back(b);
        if (b.height > m_max_height) m_max_height = b.height;
        return b.id;
    }

    //! Newline-delimited dump (id,parent,miner,round,height,reward,leftover);
    //! the genesis parent field is left empty.
    void dump(std::ostream& out) const;

private:
    std::vector<Block> m_blocks;
    int m_max_height = 0;
};

//! Pairwise visibility delays in rounds: a block mined by `src` becomes
//! visible to `dst` once round - block.round >= D[src][dst].
class DistanceMatrix
{
public:
    explicit DistanceMatrix(int n) : m_n{n}, m_delays(static_cast<size_t>(n) * n, 1)
    {
        if (n < 1) throw std::invalid_argument("DistanceMatrix: need at least one node");
        for (int i = 0; i < n; ++i) set(i, i, 0);
    }

    int nodes() const { return m_n; }
    int at(int src, int dst) const { return m_delays[static_cast<size_t>(src) * m_n + dst]; }

    void set(int src, int dst, int delay)
    {
        if (src < 0 || src >= m_n || dst < 0 || dst >= m_n) {
            throw std::invalid_argument("DistanceMatrix: index out of range");
        }
        if (src == dst ? delay != 0 : delay < 1) {
            throw std::invalid_argument("DistanceMatrix: diagonal must be 0, off-diagonal >= 1");
        }
        m_delays[static_cast<size_t>(src) * m_n + dst] = delay;
    }

private:
    int m_n;
    std::vector<int> m_delays;
};

//! Build the fast/slow topology: messages to or from a fast node arrive the
//! next round, slow nodes within the same cluster reach each other the next
//! round, and slow nodes in different clusters see each other's blocks after
//! delta_slow rounds.
DistanceMatrix make_distance_matrix(int n, const std::vector<int>& fast_set, int delta_slow,
                                    int slow_clusters = 2);

enum class StrategyKind {
    petty,           //!< extend a longest-chain tip maximizing claimable fees
    minor_undercut,  //!< fork low-reward tips, leaving a small incentive
    major_undercut,  //!< fork low-reward tips, leaving kappa as incentive
    first_seen,      //!< baseline honest rule: earliest-seen longest-chain tip
};

const char* strategy_kind_name(StrategyKind kind);
StrategyKind strategy_kind_from_name(const std::string& name);

struct StrategyConfig
{
    StrategyKind kind = StrategyKind::petty;
    double kappa = 1.0;     //!< leftover for major undercutting (round-units of fees)
    double minor_d = 0.1;   //!< leftover for minor undercutting
    double threshold = 0.0; //!< fork when the best tip's claimable fees fall below this

    static StrategyConfig petty() { return {StrategyKind::petty, 1.0, 0.1, 0.0}; }
    static StrategyConfig first_seen() { return {StrategyKind::first_seen, 1.0, 0.1, 0.0}; }

    static StrategyConfig major_undercutting(double kappa, double threshold = -1.0)
    {
        StrategyConfig s{StrategyKind::major_undercut, kappa, 0.1, threshold};
        if (threshold < 0.0) s.threshold = kappa;
        return s;
    }

    static StrategyConfig minor_undercutting(double minor_d = 0.1, double threshold = -1.0)
    {
        StrategyConfig s{StrategyKind::minor_undercut, 10.0 * minor_d, minor_d, threshold};
        if (threshold < 0.0) s.threshold = 10.0 * minor_d;
        return s;
    }

    void validate() const
    {
        if (!(kappa > minor_d) || !(minor_d > 0.0)) {
            throw std::invalid_argument("StrategyConfig: need kappa > minor_d > 0");
        }
        if (threshold < 0.0) throw std::invalid_argument("StrategyConfig: threshold must be >= 0");
    }
};

struct SimConfig
{
    int n = 1;
    std::vector<int> fast_set;
    int rounds = 1;
    double lottery_rate = 0.01; //!< per-node per-round win probability
    double max_block_size = std::numeric_limits<double>::infinity(); //!< fee cap in round-units
    std::uint64_t seed = 0;
    std::vector<StrategyConfig> strategies; //!< one per node

    void validate() const;
};

struct SimOutcome
{
    std::vector<double> per_node_reward; //!< fee reward, averaged over maximal chains
    std::vector<double> per_node_blocks; //!< chain block count, averaged over maximal chains
    std::vector<std::int64_t> per_node_wins; //!< raw lottery wins (including orphaned blocks)
    double group_share_fast = 0.0;   //!< percent of total accrued fees won by the fast set
    double group_share_slow = 0.0;   //!< percent won by the slow set
    double chain_utilization = 0.0;  //!< percent of total fee mass on a maximal chain
    std::int64_t fork_count = 0;     //!< blocks with more than one child
    std::int64_t orphan_count = 0;   //!< non-genesis blocks outside every maximal chain
    int longest_height = 0;
    std::int64_t total_blocks = 0;   //!< blocks mined, genesis excluded
};

} // namespace netfair::sim

#endif // NETFAIR_SIM_TYPES_HPP
