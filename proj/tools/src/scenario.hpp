// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_TOOLS_SCENARIO_HPP
#define NETFAIR_TOOLS_SCENARIO_HPP

#include <netfair/sim/types.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netfair::cli {

//! Configuration problems map to exit code 2.
struct ConfigError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

//! Numerical diagnostics (series non-convergence, empty solution sets) map
//! to exit code 3.
struct NumericalDiagnostic : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

//! Command line values that take precedence over the scenario document.
struct Overrides
{
    std::optional<std::uint64_t> seed;
    std::optional<double> epsilon;
    std::optional<double> tolerance;
    std::optional<int> runs;
};

struct NetworkSection
{
    double block_interval_s = 600.0; //!< echoed; lambda_per_sec = 1/interval when lambda not given
    double lambda_per_sec = 1.0 / 600.0;
    double round_seconds = 1.0;
    double multiplier = 1.0; //!< global throughput scale applied to lambda
};

struct PfSweepSection
{
    double top_fraction_m = 0.5;
    double bottom_percentile_m = 0.9;
    double advantage_d_seconds = 11.0;
    std::vector<double> multipliers{1.0};
};

struct AlphaSweepSection
{
    std::string sweep = "delta_b"; //!< "delta_b" or "lambda"
    double epsilon = 1e-12;
    int delta_a = 5;
    int delta_b = 15;
    std::vector<int> delta_b_values;
    std::vector<double> multipliers{1.0};
};

struct SimSection
{
    int n = 10;
    std::vector<int> fast_set;          //!< default: first n/2 nodes
    int rounds = 2000;
    double lottery_rate = 0.0;          //!< resolved: lambda_eff * round_seconds / n
    double max_block_size = 0.0;        //!< resolved: 1 / lottery_rate
    int delta_slow = 3;
    int slow_clusters = 2;
    sim::StrategyConfig fast_strategy = sim::StrategyConfig::petty();
    sim::StrategyConfig slow_strategy = sim::StrategyConfig::petty();
    std::vector<double> compute_shares; //!< default: uniform 1/n
    bool dump_dag = true;
};

struct StrategySpec
{
    std::string label;
    sim::StrategyConfig config;
};

struct PayoffSection
{
    int runs = 100;
    int threads = 0; //!< 0 = one per hardware thread
    std::vector<StrategySpec> strategies;
};

struct SolveSection
{
    double tolerance = 1.0;
    double epsilon = 1e-6;
    std::string mode = "iterated";
};

//! A fully resolved scenario: every default is materialized, so the echoed
//! config describes the run with no hidden parameters.
struct Scenario
{
    std::uint64_t seed = 0;
    NetworkSection network;
    PfSweepSection pf_sweep;
    AlphaSweepSection alpha_sweep;
    SimSection sim_section;
    PayoffSection payoff;
    SolveSection solve;

    double lambda_effective() const { return network.lambda_per_sec * network.multiplier; }

    //! Simulator config + fast/slow strategy assignment, for one run.
    sim::SimConfig make_sim_config() const;

    //! Canonical JSON echo of the resolved configuration.
    nlohmann::json resolved() const;

    //! FNV-1a 64 hash of the resolved configuration, as hex.
    std::string config_hash() const;

    static Scenario from_json(const nlohmann::json& doc, const Overrides& overrides);
    static Scenario load_file(const std::string& path, const Overrides& overrides);
    //! Built-in defaults (usable without a scenario file).
    static Scenario defaults(const Overrides& overrides);
};

//! Strategy spec parser shared with the payoff section:
//! {"kind": "...", "kappa": x, "minor_d": y, "threshold": z}.
sim::StrategyConfig strategy_from_json(const nlohmann::json& doc, const std::string& where);
nlohmann::json strategy_to_json(const sim::StrategyConfig& config);

std::string fnv1a_hex(const std::string& bytes);

} // namespace netfair::cli

#endif // NETFAIR_TOOLS_SCENARIO_HPP
