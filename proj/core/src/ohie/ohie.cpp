// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/ohie/ohie.hpp>

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace netfair::ohie {

OhieChainState::OhieChainState(std::vector<std::vector<OhieBlock>> chains) : m_chains{std::move(chains)}
{
    if (m_chains.empty()) throw std::invalid_argument("OhieChainState: need at least one chain");
    for (size_t c = 0; c < m_chains.size(); ++c) {
        std::vector<OhieBlock>& chain = m_chains[c];
        if (chain.empty()) {
            throw std::invalid_argument("OhieChainState: chain " + std::to_string(c) + " is empty");
        }
        std::sort(chain.begin(), chain.end(),
                  [](const OhieBlock& a, const OhieBlock& b) { return a.rank < b.rank; });
        if (chain.front().rank != 0) {
            throw std::invalid_argument("OhieChainState: chain " + std::to_string(c) +
                                        " must begin at a genesis block of rank 0");
        }
        for (size_t i = 0; i < chain.size(); ++i) {
            OhieBlock& b = chain[i];
            b.position = static_cast<int>(i);
            if (b.chain_id != static_cast<int>(c)) {
                throw std::invalid_argument("OhieChainState: block chain_id mismatch");
            }
            if (b.next_rank <= b.rank) {
                throw std::invalid_argument("OhieChainState: next_rank must exceed rank");
            }
            if (i > 0) {
                if (chain[i - 1].rank == b.rank) {
                    throw std::invalid_argument("OhieChainState: duplicate rank within a chain");
                }
                if (chain[i - 1].next_rank != b.rank) {
                    throw std::invalid_argument("OhieChainState: next_rank must equal the successor's rank");
                }
            }
        }
    }
}

OhieChainState OhieChainState::from_text(std::istream& in)
{
    std::vector<OhieBlock> blocks;
    int max_chain = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        OhieBlock b;
        if (!(ss >> b.chain_id)) continue; // blank line
        if (!(ss >> b.rank >> b.next_rank >> b.fee_value)) {
            throw std::invalid_argument("OHIE state: malformed line " + std::to_string(line_no));
        }
        std::string extra;
        if (ss >> extra) {
            throw std::invalid_argument("OHIE state: trailing fields on line " + std::to_string(line_no));
        }
        if (b.chain_id < 0) throw std::invalid_argument("OHIE state: negative chain id");
        max_chain = std::max(max_chain, b.chain_id);
        blocks.push_back(b);
    }
    if (blocks.empty()) throw std::invalid_argument("OHIE state: no blocks");
    std::vector<std::vector<OhieBlock>> chains(static_cast<size_t>(max_chain) + 1);
    for (const OhieBlock& b : blocks) chains[static_cast<size_t>(b.chain_id)].push_back(b);
    return OhieChainState(std::move(chains));
}

const std::vector<OhieBlock>& OhieChainState::chain(int chain_id) const
{
    if (chain_id < 0 || chain_id >= k()) throw std::invalid_argument("OhieChainState: chain id out of range");
    return m_chains[static_cast<size_t>(chain_id)];
}

const OhieBlock& OhieChainState::tip(int chain_id) const
{
    return chain(chain_id).back();
}

const OhieBlock& OhieChainState::block(const BlockRef& ref) const
{
    for (const OhieBlock& b : chain(ref.chain_id)) {
        if (b.rank == ref.rank) return b;
    }
    throw std::invalid_argument("OhieChainState: no block of rank " + std::to_string(ref.rank) +
                                " on chain " + std::to_string(ref.chain_id));
}

std::vector<OhieBlock> total_block_ordering(const OhieChainState& state)
{
    std::vector<OhieBlock> ordered;
    for (const auto& chain : state.chains()) {
        ordered.insert(ordered.end(), chain.begin(), chain.end());
    }
    std::stable_sort(ordered.begin(), ordered.end(), [](const OhieBlock& a, const OhieBlock& b) {
        return precedes_in_tbo(a.rank, a.chain_id, b.rank, b.chain_id);
    });
    return ordered;
}

FrontrunAnalysis frontrun_success_probability(const OhieChainState& state, int candidate_next_rank,
                                              const BlockRef& target)
{
    const OhieBlock& target_block = state.block(target);
    FrontrunAnalysis analysis;
    for (int c = 0; c < state.k(); ++c) {
        // Landing on chain c puts the block at the tip with the tip's
        // advertised next_rank.
        const int landing_rank = state.tip(c).next_rank;
        if (candidate_next_rank <= landing_rank) {
            analysis.rejected_chains.push_back(c);
            continue;
        }
        if (precedes_in_tbo(landing_rank, c, target_block.rank, target_block.chain_id)) {
            ++analysis.success_chains;
        } else {
            analysis.losing_chains.push_back(c);
        }
    }
    analysis.probability = static_cast<double>(analysis.success_chains) / state.k();
    return analysis;
}

double expected_frontrun_reward(double success_p, double reward)
{
    if (!(success_p >= 0.0) || !(success_p <= 1.0)) {
        throw std::invalid_argument("expected_frontrun_reward: probability out of range");
    }
    if (!(reward >= 0.0)) throw std::invalid_argument("expected_frontrun_reward: negative reward");
    return success_p * reward;
}

UndercutDecision undercut_decision(const OhieChainState& state, const std::vector<BlockRef>& drop_set,
                                   double honest_reward, bool petty_majority)
{
    if (!(honest_reward >= 0.0)) throw std::invalid_argument("undercut_decision: negative honest reward");

    UndercutDecision decision;
    decision.honest_reward = honest_reward;

    if (drop_set.empty()) return decision; // nothing to steal

    // Dropped positions per chain; each must be a suffix of its chain, since
    // a fork cannot remove a block while keeping its descendants.
    std::vector<std::vector<bool>> dropped(static_cast<size_t>(state.k()));
    for (int c = 0; c < state.k(); ++c) {
        dropped[static_cast<size_t>(c)].assign(state.chain(c).size(), false);
    }
    for (const BlockRef& ref : drop_set) {
        const OhieBlock& b = state.block(ref);
        dropped[static_cast<size_t>(b.chain_id)][static_cast<size_t>(b.position)] = true;
        decision.stealable += b.fee_value;
    }

    int successes = 0;
    for (int c = 0; c < state.k(); ++c) {
        const auto& flags = dropped[static_cast<size_t>(c)];
        const size_t len = flags.size();
        size_t kept = 0;
        while (kept < len && !flags[kept]) ++kept;
        for (size_t i = kept; i < len; ++i) {
            if (!flags[i]) {
                throw std::invalid_argument("undercut_decision: dropped blocks on chain " +
                                            std::to_string(c) + " must form a chain suffix");
            }
        }
        if (kept == 0) {
            throw std::invalid_argument("undercut_decision: cannot drop a genesis block");
        }

        ChainCase chain_case;
        chain_case.chain_id = c;
        if (kept == len) {
            chain_case.kind = ChainCaseKind::extends;
            chain_case.success = true;
        } else if (kept + 1 == len) {
            chain_case.kind = ChainCaseKind::tie;
            chain_case.success = petty_majority;
        } else {
            chain_case.kind = ChainCaseKind::orphaned;
            chain_case.success = false;
        }
        if (chain_case.success) ++successes;
        decision.cases.push_back(chain_case);

        // Stealth next_rank: the deviating block points at each kept tip and
        // advertises the greatest next_rank among them.
        decision.stealth_next_rank =
            std::max(decision.stealth_next_rank, state.chain(c)[kept - 1].next_rank);
    }

    decision.success_probability = static_cast<double>(successes) / state.k();
    decision.expected_undercut_reward = decision.success_probability * decision.stealable;
    decision.breakeven_factor = successes > 0 ? static_cast<double>(state.k()) / successes
                                              : std::numeric_limits<double>::infinity();
    decision.undercut = decision.expected_undercut_reward > honest_reward;
    return decision;
}

} // namespace netfair::ohie
