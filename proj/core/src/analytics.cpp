// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/analytics.hpp>

#include <cmath>
#include <stdexcept>

namespace netfair {

double fail_probability(const NetworkParams& params, double phi, double t_seconds)
{
    if (!(phi >= 0.0) || !(phi <= 1.0)) {
        throw std::invalid_argument("fail_probability: phi must be in [0,1]");
    }
    if (!(t_seconds >= 0.0)) {
        throw std::invalid_argument("fail_probability: t must be non-negative");
    }
    // (1-p)^(phi*H*t) = exp(phi*H*t * log(1-p)). The exponent can reach 1e12
    // and beyond, where a direct pow() underflows its intermediate terms.
    const double queries = phi * params.hash_rate() * t_seconds;
    return std::exp(queries * std::log1p(-params.p()));
}

double frontrun_probability(const NetworkParams& params, const FrontrunQuery& query)
{
    query.validate();
    return 1.0 - fail_probability(params, query.top_fraction_m, query.advantage_seconds);
}

double frontrun_lower_bound(const NetworkParams& params, const FrontrunQuery& query)
{
    query.validate();
    const double x = query.top_fraction_m * params.lambda() * query.advantage_seconds;
    return x - 0.5 * x * x;
}

} // namespace netfair
