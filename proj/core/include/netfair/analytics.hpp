// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_ANALYTICS_HPP
#define NETFAIR_ANALYTICS_HPP

#include <netfair/params.hpp>

namespace netfair {

//! Probability that a phi fraction of the network mines no block within
//! t seconds: (1-p)^(phi * H * t), evaluated in log space.
double fail_probability(const NetworkParams& params, double phi, double t_seconds);

//! Probability that the top-M fraction confirms a transaction before the
//! bottom 1-m fraction has even received it: 1 - fail(M, d).
double frontrun_probability(const NetworkParams& params, const FrontrunQuery& query);

//! Closed-form lower bound on the frontrunning probability:
//! M*lambda*d - (M*lambda*d)^2 / 2. May go negative for large arguments;
//! it is a valid lower bound everywhere.
double frontrun_lower_bound(const NetworkParams& params, const FrontrunQuery& query);

} // namespace netfair

#endif // NETFAIR_ANALYTICS_HPP
