// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_ALPHA_HPP
#define NETFAIR_ALPHA_HPP

#include <netfair/params.hpp>
#include <netfair/propagation.hpp>

#include <cstdint>
#include <optional>

namespace netfair {

//! Outcome of evaluating the publishing-fairness series for a two-block race.
struct AlphaResult
{
    double psi_a = 0.0;     //!< probability A's block is eventually accepted
    double psi_b = 0.0;     //!< probability B's block is eventually accepted
    double residual = 1.0;  //!< undecided probability mass at truncation
    double alpha_f = 1.0;   //!< fairness ratio psi_A / (1 - psi_A)
    std::int64_t rounds_evaluated = 0; //!< series terms summed (equivalent truncation round)
    bool converged = false; //!< false when the race cannot resolve (residual stuck at >= epsilon)
};

//! Evaluate the acceptance-probability series for both blocks.
//!
//! Round i resolves the race for A with probability
//! (1 - fail(phi_A^i)) * fail(phi_B^i) given that rounds 1..i-1 were
//! undecided; the undecided mass shrinks by the factor
//! u_i = (1 - fail(phi_A^i))(1 - fail(phi_B^i)) + fail(phi_A^i)fail(phi_B^i)
//! each round. Evaluation stops once the undecided mass drops below
//! epsilon (or at `horizon` rounds when given). Once the profile saturates
//! the per-round factors are constant, so the remaining terms are summed
//! with the exact partial-geometric closed form instead of one by one.
//!
//! When the saturated u is numerically 1 (no side ever mines, or both sides
//! always mine) the race cannot resolve; the result is returned with
//! converged = false and the residual as reached.
AlphaResult publishing_fairness(const NetworkParams& params, const PropagationProfile& profile,
                                double epsilon = 1e-12,
                                std::optional<std::int64_t> horizon = std::nullopt);

} // namespace netfair

#endif // NETFAIR_ALPHA_HPP
