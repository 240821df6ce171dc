// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_PARAMS_HPP
#define NETFAIR_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace netfair {

//! Aggregate network parameters of a proof-of-work system.
//!
//! lambda is always the computed product p * hash_rate_H, so the identity
//! lambda == p * H holds bit-exactly for every instance.
class NetworkParams
{
public:
    //! Construct from the per-query success probability and the total
    //! network hash rate (queries per second).
    NetworkParams(double p, double hash_rate_h, double round_seconds = 1.0, int n_nodes = 1)
        : m_p{p}, m_hash_rate_h{hash_rate_h}, m_lambda{p * hash_rate_h},
          m_round_seconds{round_seconds}, m_n_nodes{n_nodes}
    {
        if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("NetworkParams: p must be in (0,1)");
        if (!(hash_rate_h > 0.0)) throw std::invalid_argument("NetworkParams: hash rate must be positive");
        if (!(round_seconds > 0.0)) throw std::invalid_argument("NetworkParams: round duration must be positive");
        if (n_nodes < 1) throw std::invalid_argument("NetworkParams: need at least one node");
    }

    //! Construct from a block creation rate (blocks per second), synthesizing
    //! (p, H) with p = 1e-9. All quantities of interest depend only on the
    //! product lambda * t, so the synthesized split is observationally
    //! equivalent to any other small-p split at the same lambda.
    static NetworkParams from_lambda(double lambda_per_sec, double round_seconds = 1.0, int n_nodes = 1)
    {
        if (!(lambda_per_sec > 0.0)) {
            throw std::invalid_argument("NetworkParams: block creation rate must be positive");
        }
        constexpr double synth_p = 1e-9;
        return NetworkParams(synth_p, lambda_per_sec / synth_p, round_seconds, n_nodes);
    }

    double p() const { return m_p; }
    double hash_rate() const { return m_hash_rate_h; }
    double lambda() const { return m_lambda; }
    double round_seconds() const { return m_round_seconds; }
    int n_nodes() const { return m_n_nodes; }

    //! Block creation rate per round rather than per second.
    double lambda_per_round() const { return m_lambda * m_round_seconds; }

private:
    double m_p;
    double m_hash_rate_h;
    double m_lambda;
    double m_round_seconds;
    int m_n_nodes;
};

//! A frontrunning query: the top M fraction of the network enjoys a time
//! advantage of d seconds over the bottom 1-m fraction.
struct FrontrunQuery
{
    double top_fraction_m;    //!< M, in (0, 1]
    double bottom_percentile; //!< m, in [0, 1); the disadvantaged set is the bottom 1-m
    double advantage_seconds; //!< d, >= 0

    void validate() const
    {
        if (!(top_fraction_m > 0.0) || !(top_fraction_m <= 1.0)) {
            throw std::invalid_argument("FrontrunQuery: M must be in (0,1]");
        }
        if (!(bottom_percentile >= 0.0) || !(bottom_percentile < 1.0)) {
            throw std::invalid_argument("FrontrunQuery: m must be in [0,1)");
        }
        if (top_fraction_m > bottom_percentile) {
            throw std::invalid_argument("FrontrunQuery: percentile bands overlap (need M <= m)");
        }
        if (!(advantage_seconds >= 0.0)) {
            throw std::invalid_argument("FrontrunQuery: time advantage must be non-negative");
        }
    }
};

} // namespace netfair

#endif // NETFAIR_PARAMS_HPP
