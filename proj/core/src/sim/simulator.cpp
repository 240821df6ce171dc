// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/sim/simulator.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace netfair::sim {

void BlockStore::dump(std::ostream& out) const
{
    out << "id,parent,miner,round,height,reward,leftover\n";
    char buf[64];
    const auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string{buf};
    };
    for (const Block& b : m_blocks) {
        out << b.id << ',';
        if (b.parent != kNoBlock) out << b.parent;
        out << ',' << b.miner << ',' << b.round << ',' << b.height << ',' << fmt(b.reward) << ','
            << fmt(b.leftover) << '\n';
    }
}

const char* strategy_kind_name(StrategyKind kind)
{
    switch (kind) {
    case StrategyKind::petty: return "petty";
    case StrategyKind::minor_undercut: return "minor_undercut";
    case StrategyKind::major_undercut: return "major_undercut";
    case StrategyKind::first_seen: return "first_seen";
    }
    return "unknown";
}

StrategyKind strategy_kind_from_name(const std::string& name)
{
    if (name == "petty") return StrategyKind::petty;
    if (name == "minor_undercut") return StrategyKind::minor_undercut;
    if (name == "major_undercut") return StrategyKind::major_undercut;
    if (name == "first_seen") return StrategyKind::first_seen;
    throw std::invalid_argument("unknown strategy kind: " + name);
}

void SimConfig::validate() const
{
    if (n < 1) throw std::invalid_argument("SimConfig: need at least one node");
    if (rounds < 1) throw std::invalid_argument("SimConfig: need at least one round");
    // rate 1 is the degenerate every-node-wins-every-round case; the lottery
    // draw lives in [0,1), so it still behaves deterministically.
    if (!(lottery_rate > 0.0) || !(lottery_rate <= 1.0)) {
        throw std::invalid_argument("SimConfig: lottery rate must be in (0,1]");
    }
    if (!(max_block_size > 0.0)) throw std::invalid_argument("SimConfig: block size cap must be positive");
    if (strategies.size() != static_cast<size_t>(n)) {
        throw std::invalid_argument("SimConfig: every node needs a strategy");
    }
    for (const StrategyConfig& s : strategies) s.validate();
    if (fast_set.size() >= static_cast<size_t>(n)) {
        throw std::invalid_argument("SimConfig: fast set must be a strict subset of the nodes");
    }
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int idx : fast_set) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("SimConfig: fast set index out of range");
        if (seen[static_cast<size_t>(idx)]) throw std::invalid_argument("SimConfig: duplicate fast set index");
        seen[static_cast<size_t>(idx)] = true;
    }
}

DistanceMatrix make_distance_matrix(int n, const std::vector<int>& fast_set, int delta_slow,
                                    int slow_clusters)
{
    if (delta_slow < 1) throw std::invalid_argument("make_distance_matrix: delta_slow must be >= 1");
    if (slow_clusters < 1) throw std::invalid_argument("make_distance_matrix: need >= 1 slow cluster");
    DistanceMatrix dist(n);
    std::vector<bool> fast(static_cast<size_t>(n), false);
    for (int idx : fast_set) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("make_distance_matrix: fast index out of range");
        fast[static_cast<size_t>(idx)] = true;
    }
    // Slow nodes are assigned to clusters round-robin in index order.
    std::vector<int> cluster(static_cast<size_t>(n), -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        if (!fast[static_cast<size_t>(i)]) cluster[static_cast<size_t>(i)] = next++ % slow_clusters;
    }
    for (int src = 0; src < n; ++src) {
        for (int dst = 0; dst < n; ++dst) {
            if (src == dst) continue;
            const bool near = fast[static_cast<size_t>(src)] || fast[static_cast<size_t>(dst)] ||
                              cluster[static_cast<size_t>(src)] == cluster[static_cast<size_t>(dst)];
            dist.set(src, dst, near ? 1 : delta_slow);
        }
    }
    return dist;
}

namespace {

int visibility_delay(const Block& b, int node, const DistanceMatrix& dist)
{
    return b.miner == kGenesisMiner ? 0 : dist.at(b.miner, node);
}

double claimable(const Block& b, int round)
{
    return static_cast<double>(round - b.round) + b.leftover;
}

} // namespace

std::vector<BlockId> visible_blocks(const BlockStore& store, int node, int round,
                                    const DistanceMatrix& dist)
{
    std::vector<BlockId> out;
    for (const Block& b : store.blocks()) {
        if (round - b.round >= visibility_delay(b, node, dist)) out.push_back(b.id);
    }
    return out;
}

ParentChoice select_parent(const BlockStore& store, std::span<const BlockId> visible,
                           const StrategyConfig& strategy, int node, int round,
                           const DistanceMatrix& dist, Rng& rng)
{
    if (visible.empty()) throw std::invalid_argument("select_parent: visible set is empty");

    int maxh = 0;
    for (BlockId id : visible) maxh = std::max(maxh, store[id].height);

    std::vector<BlockId> candidates;
    for (BlockId id : visible) {
        if (store[id].height == maxh) candidates.push_back(id);
    }

    ParentChoice choice;
    std::vector<BlockId> tied;

    if (strategy.kind == StrategyKind::first_seen) {
        int best_seen = INT32_MAX;
        for (BlockId id : candidates) {
            const Block& b = store[id];
            best_seen = std::min(best_seen, b.round + visibility_delay(b, node, dist));
        }
        for (BlockId id : candidates) {
            const Block& b = store[id];
            if (b.round + visibility_delay(b, node, dist) == best_seen) tied.push_back(id);
        }
        choice.policy_leftover = 0.0;
    } else {
        const bool undercutter = strategy.kind == StrategyKind::minor_undercut ||
                                 strategy.kind == StrategyKind::major_undercut;
        if (undercutter) {
            double best_tip_claim = 0.0;
            for (BlockId id : candidates) best_tip_claim = std::max(best_tip_claim, claimable(store[id], round));
            if (best_tip_claim < strategy.threshold && maxh >= 1) {
                // Fee-stealing fork: also consider the tips' parents.
                for (BlockId id : visible) {
                    if (store[id].height == maxh - 1) candidates.push_back(id);
                }
            }
        }
        double best_claim = -1.0;
        for (BlockId id : candidates) best_claim = std::max(best_claim, claimable(store[id], round));
        for (BlockId id : candidates) {
            if (claimable(store[id], round) == best_claim) tied.push_back(id);
        }
    }

    choice.parent = tied.size() > 1 ? tied[static_cast<size_t>(rng() % tied.size())] : tied.front();
    choice.forked = store[choice.parent].height < maxh;
    // Undercutters advertise their leftover on every block they mine, fork
    // or not: besides funding fee-stealing forks, the standing bribe makes
    // petty miners prefer their blocks in races.
    if (strategy.kind == StrategyKind::major_undercut) {
        choice.policy_leftover = strategy.kappa;
    } else if (strategy.kind == StrategyKind::minor_undercut) {
        choice.policy_leftover = strategy.minor_d;
    }
    return choice;
}

std::vector<std::vector<BlockId>> maximal_chains(const BlockStore& store)
{
    std::vector<std::vector<BlockId>> chains;
    const int maxh = store.max_height();
    for (const Block& b : store.blocks()) {
        if (b.height != maxh) continue;
        std::vector<BlockId> chain;
        for (BlockId id = b.id; id != kNoBlock; id = store[id].parent) chain.push_back(id);
        std::reverse(chain.begin(), chain.end());
        chains.push_back(std::move(chain));
    }
    return chains;
}

SimResult run_simulation(const SimConfig& cfg, const DistanceMatrix& dist)
{
    cfg.validate();
    if (dist.nodes() != cfg.n) {
        throw std::invalid_argument("run_simulation: distance matrix size mismatch");
    }

    SimResult result;
    BlockStore& store = result.store;
    Rng lottery_rng(cfg.seed);
    Rng tie_rng(cfg.seed ^ kTieStreamSalt);

    // Blocks grouped by height so winners only scan the top of the DAG.
    std::vector<std::vector<BlockId>> by_height{{0}};
    std::vector<std::int64_t> wins(static_cast<size_t>(cfg.n), 0);

    std::vector<BlockId> slice;
    const auto append_visible_at = [&](int h, int node, int round) {
        for (BlockId id : by_height[static_cast<size_t>(h)]) {
            const Block& b = store[id];
            if (round - b.round >= visibility_delay(b, node, dist)) slice.push_back(id);
        }
    };

    for (int r = 1; r <= cfg.rounds; ++r) {
        for (int i = 0; i < cfg.n; ++i) {
            if (next_uniform(lottery_rng) >= cfg.lottery_rate) continue;
            ++wins[static_cast<size_t>(i)];

            // Visible blocks at the top visible height, plus one height below
            // for potential undercuts; select_parent sees exactly the
            // candidates it would pick from the full visible set.
            slice.clear();
            int top = -1;
            for (int h = store.max_height(); h >= 0; --h) {
                append_visible_at(h, i, r);
                if (!slice.empty()) {
                    top = h;
                    break;
                }
            }
            if (top >= 1) append_visible_at(top - 1, i, r);

            const ParentChoice choice =
                select_parent(store, slice, cfg.strategies[static_cast<size_t>(i)], i, r, dist, tie_rng);
            const Block& parent = store[choice.parent];
            const double raw = std::min(claimable(parent, r), cfg.max_block_size);
            const double leftover = std::min(choice.policy_leftover, raw);
            const BlockId id = store.append(choice.parent, i, r, raw - leftover, leftover);

            const auto h = static_cast<size_t>(store[id].height);
            if (h >= by_height.size()) by_height.resize(h + 1);
            by_height[h].push_back(id);
        }
    }

    // Reward accounting, averaged over every maximal-height chain.
    SimOutcome& out = result.outcome;
    const int n = cfg.n;
    out.per_node_reward.assign(static_cast<size_t>(n), 0.0);
    out.per_node_blocks.assign(static_cast<size_t>(n), 0.0);
    out.per_node_wins = wins;
    out.longest_height = store.max_height();
    out.total_blocks = store.size() - 1;

    std::vector<bool> on_chain(static_cast<size_t>(store.size()), false);
    on_chain[0] = true;
    const std::vector<BlockId>& leaves = by_height[static_cast<size_t>(store.max_height())];
    double chain_total = 0.0;
    for (BlockId leaf : leaves) {
        for (BlockId id = leaf; id != 0; id = store[id].parent) {
            const Block& b = store[id];
            on_chain[static_cast<size_t>(id)] = true;
            out.per_node_reward[static_cast<size_t>(b.miner)] += b.reward;
            out.per_node_blocks[static_cast<size_t>(b.miner)] += 1.0;
            chain_total += b.reward;
        }
    }
    const auto n_chains = static_cast<double>(leaves.size());
    for (int i = 0; i < n; ++i) {
        out.per_node_reward[static_cast<size_t>(i)] /= n_chains;
        out.per_node_blocks[static_cast<size_t>(i)] /= n_chains;
    }
    chain_total /= n_chains;

    std::vector<bool> fast(static_cast<size_t>(n), false);
    for (int idx : cfg.fast_set) fast[static_cast<size_t>(idx)] = true;
    const double total_fees = static_cast<double>(cfg.rounds);
    double fast_reward = 0.0;
    double slow_reward = 0.0;
    for (int i = 0; i < n; ++i) {
        (fast[static_cast<size_t>(i)] ? fast_reward : slow_reward) += out.per_node_reward[static_cast<size_t>(i)];
    }
    out.group_share_fast = 100.0 * fast_reward / total_fees;
    out.group_share_slow = 100.0 * slow_reward / total_fees;
    out.chain_utilization = 100.0 * chain_total / total_fees;

    std::vector<int> child_count(static_cast<size_t>(store.size()), 0);
    for (const Block& b : store.blocks()) {
        if (b.parent != kNoBlock) ++child_count[static_cast<size_t>(b.parent)];
    }
    out.fork_count = std::count_if(child_count.begin(), child_count.end(), [](int c) { return c > 1; });
    std::int64_t orphans = 0;
    for (const Block& b : store.blocks()) {
        if (b.parent != kNoBlock && !on_chain[static_cast<size_t>(b.id)]) ++orphans;
    }
    out.orphan_count = orphans;
    return result;
}

double eta_fairness_violation(const SimOutcome& outcome, std::span<const double> compute_shares)
{
    if (compute_shares.size() != outcome.per_node_blocks.size()) {
        throw std::invalid_argument("eta_fairness_violation: share vector size mismatch");
    }
    double total_share = 0.0;
    for (double s : compute_shares) {
        if (s < 0.0) throw std::invalid_argument("eta_fairness_violation: negative compute share");
        total_share += s;
    }
    if (std::abs(total_share - 1.0) > 1e-9) {
        throw std::invalid_argument("eta_fairness_violation: compute shares must sum to 1");
    }
    double chain_len = 0.0;
    for (double c : outcome.per_node_blocks) chain_len += c;
    if (chain_len <= 0.0) return 0.0;

    double eta = 0.0;
    for (size_t i = 0; i < compute_shares.size(); ++i) {
        if (compute_shares[i] <= 0.0) continue;
        const double block_share = outcome.per_node_blocks[i] / chain_len;
        eta = std::max(eta, 1.0 - block_share / compute_shares[i]);
    }
    return std::clamp(eta, 0.0, 1.0);
}

} // namespace netfair::sim
