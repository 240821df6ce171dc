// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/propagation.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netfair {

void PropagationProfile::validate() const
{
    // Profiles are usually built in the canonical delta_A <= delta_B
    // orientation, but a swapped() profile is equally valid; only the
    // structural invariants are orientation-free.
    if (delta_a < 1 || delta_b < 1) {
        throw std::invalid_argument("PropagationProfile: delays must be >= 1 round");
    }
    const size_t slowest = static_cast<size_t>(std::max(delta_a, delta_b));
    if (phi_a.size() != phi_b.size() || phi_a.size() < slowest + 1) {
        throw std::invalid_argument(
            "PropagationProfile: fraction sequences must cover rounds 0..max(delta_A, delta_B)");
    }
    const double split_a = static_cast<double>(delta_b) / (delta_a + delta_b);
    const double split_b = static_cast<double>(delta_a) / (delta_a + delta_b);
    for (size_t i = 0; i < phi_a.size(); ++i) {
        if (phi_a[i] < 0.0 || phi_a[i] > 1.0 || phi_b[i] < 0.0 || phi_b[i] > 1.0) {
            throw std::invalid_argument("PropagationProfile: fractions must lie in [0,1]");
        }
        if (i > 0 && (phi_a[i] < phi_a[i - 1] || phi_b[i] < phi_b[i - 1])) {
            throw std::invalid_argument("PropagationProfile: fractions must be non-decreasing");
        }
        if (phi_a[i] + phi_b[i] > 1.0 + 1e-12) {
            throw std::invalid_argument("PropagationProfile: fractions sum above 1");
        }
        if (i >= slowest) {
            if (std::abs(phi_a[i] + phi_b[i] - 1.0) > 1e-12 ||
                std::abs(phi_a[i] - split_a) > 1e-12 || std::abs(phi_b[i] - split_b) > 1e-12) {
                throw std::invalid_argument("PropagationProfile: saturated rounds must hold the final split");
            }
        }
    }
}

PropagationProfile linear_propagation_profile(int delta_a, int delta_b)
{
    if (delta_a < 1 || delta_b < delta_a) {
        throw std::invalid_argument("linear_propagation_profile: need 1 <= delta_A <= delta_B");
    }
    // Two wavefronts spreading linearly at rates 1/delta_A and 1/delta_B;
    // every node counts for whichever block reached it first, so the fronts
    // split the network where they meet:
    //   phi_A(i) = min(i/delta_A, delta_B/(delta_A+delta_B))
    //   phi_B(i) = min(i/delta_B, delta_A/(delta_A+delta_B))
    // The fronts meet at i* = delta_A*delta_B/(delta_A+delta_B) <= delta_B,
    // where phi_A + phi_B = 1 exactly at the advertised final split.
    PropagationProfile profile;
    profile.delta_a = delta_a;
    profile.delta_b = delta_b;
    const double split_a = static_cast<double>(delta_b) / (delta_a + delta_b);
    const double split_b = static_cast<double>(delta_a) / (delta_a + delta_b);
    profile.phi_a.reserve(delta_b + 1);
    profile.phi_b.reserve(delta_b + 1);
    for (int i = 0; i <= delta_b; ++i) {
        profile.phi_a.push_back(std::min(static_cast<double>(i) / delta_a, split_a));
        profile.phi_b.push_back(std::min(static_cast<double>(i) / delta_b, split_b));
    }
    return profile;
}

} // namespace netfair
