// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_PROPAGATION_HPP
#define NETFAIR_PROPAGATION_HPP

#include <cstddef>
#include <vector>

namespace netfair {

//! Per-round acceptance fractions for a two-block race between node A
//! (full-network delay delta_A rounds) and node B (delta_B >= delta_A).
//!
//! phi_A[i] / phi_B[i] give the fraction of the network committed to each
//! block at round i (index 0 = the mining round itself). Both sequences are
//! non-decreasing, their sum never exceeds 1, and from round delta_B onward
//! the network is fully split: phi_A + phi_B = 1 with
//! phi_A = delta_B / (delta_A + delta_B).
struct PropagationProfile
{
    int delta_a = 1;
    int delta_b = 1;
    std::vector<double> phi_a; //!< indices 0..delta_b
    std::vector<double> phi_b;

    //! Fraction accepting A at round i; rounds past the stored range hold
    //! the saturated split.
    double phi_a_at(int round) const
    {
        if (round < 0) return 0.0;
        const auto idx = static_cast<size_t>(round);
        return idx < phi_a.size() ? phi_a[idx] : phi_a.back();
    }

    double phi_b_at(int round) const
    {
        if (round < 0) return 0.0;
        const auto idx = static_cast<size_t>(round);
        return idx < phi_b.size() ? phi_b[idx] : phi_b.back();
    }

    //! First round at and after which both fractions are constant.
    int saturation_round() const { return static_cast<int>(phi_a.size()) - 1; }

    //! Swap the roles of A and B.
    PropagationProfile swapped() const { return PropagationProfile{delta_b, delta_a, phi_b, phi_a}; }

    //! Throws std::invalid_argument when any structural invariant fails.
    void validate() const;
};

//! Build the linear-spread profile for the given full-network delays.
//! Requires 1 <= delta_a <= delta_b.
PropagationProfile linear_propagation_profile(int delta_a, int delta_b);

} // namespace netfair

#endif // NETFAIR_PROPAGATION_HPP
