// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/alpha.hpp>

#include <netfair/analytics.hpp>

#include <cmath>
#include <stdexcept>

namespace netfair {

namespace {

// Kahan-compensated accumulator.
struct CompensatedSum
{
    double sum = 0.0;
    double carry = 0.0;

    void add(double term)
    {
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

} // namespace

AlphaResult publishing_fairness(const NetworkParams& params, const PropagationProfile& profile,
                                double epsilon, std::optional<std::int64_t> horizon)
{
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("publishing_fairness: epsilon must be in (0,1)");
    }
    profile.validate();

    const double dt = params.round_seconds();
    const auto fail = [&](double phi) { return fail_probability(params, phi, dt); };

    CompensatedSum psi_a;
    CompensatedSum psi_b;

    // log of the undecided mass prod_{j=0}^{i} u_j, starting with round 0.
    double log_undecided = 0.0;
    {
        const double a0 = fail(profile.phi_a_at(0));
        const double b0 = fail(profile.phi_b_at(0));
        const double u0 = (1.0 - a0) * (1.0 - b0) + a0 * b0;
        log_undecided = std::log(u0);
    }

    const int sat = profile.saturation_round();
    AlphaResult result;

    const auto finish = [&](double residual, std::int64_t rounds) {
        result.psi_a = psi_a.sum;
        result.psi_b = psi_b.sum;
        result.residual = residual;
        result.rounds_evaluated = rounds;
        result.converged = residual < epsilon;
        // Denominator is 1 - psi_A; psi_B + residual equals it by the
        // round-by-round partition of unity and avoids cancellation when
        // psi_A approaches 1.
        result.alpha_f = result.psi_a / (result.psi_b + result.residual);
        return result;
    };

    std::int64_t i = 0;
    while (true) {
        ++i;
        if (horizon && i > *horizon) {
            return finish(std::exp(log_undecided), i - 1);
        }
        // The loop only runs term-by-term up to round sat+1; beyond the
        // stored range the accessors return the saturated split.
        const double a = fail(profile.phi_a_at(static_cast<int>(i)));
        const double b = fail(profile.phi_b_at(static_cast<int>(i)));
        const double undecided_before = std::exp(log_undecided);
        psi_a.add(undecided_before * (1.0 - a) * b);
        psi_b.add(undecided_before * (1.0 - b) * a);

        const double one_minus_u = a + b - 2.0 * a * b; // 1 - [(1-a)(1-b) + ab], cancellation-free
        log_undecided += std::log1p(-one_minus_u);

        if (std::exp(log_undecided) < epsilon) {
            return finish(std::exp(log_undecided), i);
        }

        if (i > sat) {
            // Saturated regime: all per-round factors are now constant, so
            // sum the remaining terms with the exact partial geometric sum
            //   sum_{j=1..k} U u^(j-1) w = U w (1 - u^k) / (1 - u),
            // identical to continuing term by term up to round i + k.
            if (one_minus_u < 1e-15) {
                // The race cannot resolve (both sides mine, or neither, with
                // probability ~1 every round); report non-convergence.
                return finish(std::exp(log_undecided), i);
            }
            const double log_u = std::log1p(-one_minus_u);
            const double log_target = std::log(epsilon) - log_undecided;
            std::int64_t k = static_cast<std::int64_t>(std::ceil(log_target / log_u));
            if (k < 1) k = 1;
            if (horizon) k = std::min(k, *horizon - i);
            if (k <= 0) {
                return finish(std::exp(log_undecided), i);
            }
            const double undecided_now = std::exp(log_undecided);
            const double geom = -std::expm1(static_cast<double>(k) * log_u) / one_minus_u;
            psi_a.add(undecided_now * (1.0 - a) * b * geom);
            psi_b.add(undecided_now * (1.0 - b) * a * geom);
            const double residual = std::exp(log_undecided + static_cast<double>(k) * log_u);
            return finish(residual, i + k);
        }
    }
}

} // namespace netfair
