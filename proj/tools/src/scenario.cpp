// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace netfair::cli {

using nlohmann::json;

namespace {

void check_keys(const json& doc, const std::vector<std::string>& known, const std::string& where)
{
    if (!doc.is_object()) throw ConfigError(where + ": expected an object");
    for (const auto& [key, value] : doc.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw ConfigError(where + ": unknown key '" + key + "'");
        }
    }
}

double require_positive(double v, const std::string& what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(what + " must be positive and finite");
    return v;
}

//! Accepts either an array of numbers or {"from": a, "to": b, "step": s}.
template <typename T>
std::vector<T> parse_range(const json& doc, const std::string& where)
{
    std::vector<T> values;
    if (doc.is_array()) {
        for (const auto& v : doc) values.push_back(v.get<T>());
    } else if (doc.is_object()) {
        check_keys(doc, {"from", "to", "step"}, where);
        const double from = doc.at("from").get<double>();
        const double to = doc.at("to").get<double>();
        const double step = require_positive(doc.value("step", 1.0), where + ".step");
        for (double v = from; v <= to + 1e-12; v += step) values.push_back(static_cast<T>(v));
    } else {
        throw ConfigError(where + ": expected an array or a from/to/step object");
    }
    if (values.empty()) throw ConfigError(where + ": empty sweep");
    return values;
}

std::vector<StrategySpec> default_strategy_grid()
{
    return {
        {"S1", sim::StrategyConfig::major_undercutting(1.5)},
        {"S2", sim::StrategyConfig::major_undercutting(1.0)},
        {"S3", sim::StrategyConfig::minor_undercutting()},
        {"S4", sim::StrategyConfig::petty()},
    };
}

} // namespace

sim::StrategyConfig strategy_from_json(const json& doc, const std::string& where)
{
    check_keys(doc, {"kind", "kappa", "minor_d", "threshold"}, where);
    const std::string kind = doc.value("kind", std::string{"petty"});
    sim::StrategyConfig config;
    try {
        config.kind = sim::strategy_kind_from_name(kind);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    switch (config.kind) {
    case sim::StrategyKind::major_undercut:
        config = sim::StrategyConfig::major_undercutting(doc.value("kappa", 1.5),
                                                         doc.value("threshold", -1.0));
        if (doc.contains("minor_d")) config.minor_d = doc.at("minor_d").get<double>();
        break;
    case sim::StrategyKind::minor_undercut:
        config = sim::StrategyConfig::minor_undercutting(doc.value("minor_d", 0.1),
                                                         doc.value("threshold", -1.0));
        if (doc.contains("kappa")) config.kappa = doc.at("kappa").get<double>();
        break;
    default:
        config = config.kind == sim::StrategyKind::petty ? sim::StrategyConfig::petty()
                                                         : sim::StrategyConfig::first_seen();
        break;
    }
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + ": " + e.what());
    }
    return config;
}

json strategy_to_json(const sim::StrategyConfig& config)
{
    json doc;
    doc["kind"] = sim::strategy_kind_name(config.kind);
    doc["kappa"] = config.kappa;
    doc["minor_d"] = config.minor_d;
    doc["threshold"] = config.threshold;
    return doc;
}

sim::SimConfig Scenario::make_sim_config() const
{
    sim::SimConfig cfg;
    cfg.n = sim_section.n;
    cfg.fast_set = sim_section.fast_set;
    cfg.rounds = sim_section.rounds;
    cfg.lottery_rate = sim_section.lottery_rate;
    cfg.max_block_size = sim_section.max_block_size;
    cfg.seed = seed;
    std::vector<bool> fast(static_cast<size_t>(cfg.n), false);
    for (int idx : cfg.fast_set) fast[static_cast<size_t>(idx)] = true;
    cfg.strategies.assign(static_cast<size_t>(cfg.n), sim_section.slow_strategy);
    for (int i = 0; i < cfg.n; ++i) {
        if (fast[static_cast<size_t>(i)]) cfg.strategies[static_cast<size_t>(i)] = sim_section.fast_strategy;
    }
    return cfg;
}

Scenario Scenario::from_json(const json& doc, const Overrides& overrides)
{
    check_keys(doc, {"seed", "network", "pf_sweep", "alpha_sweep", "sim", "payoff", "solve"}, "scenario");

    Scenario s;
    s.seed = doc.value("seed", std::uint64_t{0});

    if (doc.contains("network")) {
        const json& net = doc.at("network");
        check_keys(net, {"block_interval_s", "lambda_per_sec", "round_seconds", "multiplier"},
                   "network");
        if (net.contains("block_interval_s") && net.contains("lambda_per_sec")) {
            throw ConfigError("network: give block_interval_s or lambda_per_sec, not both");
        }
        if (net.contains("lambda_per_sec")) {
            s.network.lambda_per_sec = require_positive(net.at("lambda_per_sec").get<double>(),
                                                        "network.lambda_per_sec");
            s.network.block_interval_s = 1.0 / s.network.lambda_per_sec;
        } else if (net.contains("block_interval_s")) {
            s.network.block_interval_s = require_positive(net.at("block_interval_s").get<double>(),
                                                          "network.block_interval_s");
            s.network.lambda_per_sec = 1.0 / s.network.block_interval_s;
        }
        s.network.round_seconds = require_positive(net.value("round_seconds", 1.0), "network.round_seconds");
        s.network.multiplier = require_positive(net.value("multiplier", 1.0), "network.multiplier");
    }

    if (doc.contains("pf_sweep")) {
        const json& pf = doc.at("pf_sweep");
        check_keys(pf, {"top_fraction_M", "bottom_percentile_m", "advantage_d_seconds", "multipliers"},
                   "pf_sweep");
        s.pf_sweep.top_fraction_m = pf.value("top_fraction_M", 0.5);
        s.pf_sweep.bottom_percentile_m = pf.value("bottom_percentile_m", 0.9);
        s.pf_sweep.advantage_d_seconds = pf.value("advantage_d_seconds", 11.0);
        if (pf.contains("multipliers")) {
            s.pf_sweep.multipliers = parse_range<double>(pf.at("multipliers"), "pf_sweep.multipliers");
        }
    }

    if (doc.contains("alpha_sweep")) {
        const json& alpha = doc.at("alpha_sweep");
        check_keys(alpha, {"sweep", "epsilon", "delta_a", "delta_b", "delta_b_values", "multipliers"},
                   "alpha_sweep");
        s.alpha_sweep.sweep = alpha.value("sweep", std::string{"delta_b"});
        if (s.alpha_sweep.sweep != "delta_b" && s.alpha_sweep.sweep != "lambda") {
            throw ConfigError("alpha_sweep.sweep must be 'delta_b' or 'lambda'");
        }
        s.alpha_sweep.epsilon = alpha.value("epsilon", 1e-12);
        s.alpha_sweep.delta_a = alpha.value("delta_a", 5);
        s.alpha_sweep.delta_b = alpha.value("delta_b", 15);
        if (alpha.contains("delta_b_values")) {
            s.alpha_sweep.delta_b_values =
                parse_range<int>(alpha.at("delta_b_values"), "alpha_sweep.delta_b_values");
        }
        if (alpha.contains("multipliers")) {
            s.alpha_sweep.multipliers = parse_range<double>(alpha.at("multipliers"), "alpha_sweep.multipliers");
        }
    }

    bool fast_set_given = false;
    if (doc.contains("sim")) {
        const json& simdoc = doc.at("sim");
        check_keys(simdoc,
                   {"n", "n_fast", "fast_set", "rounds", "lottery_rate", "max_block_size", "delta_slow",
                    "slow_clusters", "fast_strategy", "slow_strategy", "compute_shares", "dump_dag"},
                   "sim");
        s.sim_section.n = simdoc.value("n", 10);
        if (simdoc.contains("fast_set") && simdoc.contains("n_fast")) {
            throw ConfigError("sim: give fast_set or n_fast, not both");
        }
        if (simdoc.contains("fast_set")) {
            s.sim_section.fast_set = simdoc.at("fast_set").get<std::vector<int>>();
            fast_set_given = true;
        } else if (simdoc.contains("n_fast")) {
            const int n_fast = simdoc.at("n_fast").get<int>();
            if (n_fast < 0 || n_fast >= s.sim_section.n) {
                throw ConfigError("sim.n_fast must lie in [0, n)");
            }
            for (int i = 0; i < n_fast; ++i) s.sim_section.fast_set.push_back(i);
            fast_set_given = true;
        }
        s.sim_section.rounds = simdoc.value("rounds", 2000);
        s.sim_section.lottery_rate = simdoc.value("lottery_rate", 0.0);
        s.sim_section.max_block_size = simdoc.value("max_block_size", 0.0);
        s.sim_section.delta_slow = simdoc.value("delta_slow", 3);
        s.sim_section.slow_clusters = simdoc.value("slow_clusters", 2);
        if (simdoc.contains("fast_strategy")) {
            s.sim_section.fast_strategy = strategy_from_json(simdoc.at("fast_strategy"), "sim.fast_strategy");
        }
        if (simdoc.contains("slow_strategy")) {
            s.sim_section.slow_strategy = strategy_from_json(simdoc.at("slow_strategy"), "sim.slow_strategy");
        }
        if (simdoc.contains("compute_shares")) {
            s.sim_section.compute_shares = simdoc.at("compute_shares").get<std::vector<double>>();
        }
        s.sim_section.dump_dag = simdoc.value("dump_dag", true);
    }

    if (doc.contains("payoff")) {
        const json& pay = doc.at("payoff");
        check_keys(pay, {"runs", "threads", "strategies"}, "payoff");
        s.payoff.runs = pay.value("runs", 100);
        s.payoff.threads = pay.value("threads", 0);
        if (pay.contains("strategies")) {
            if (!pay.at("strategies").is_array()) {
                throw ConfigError("payoff.strategies: expected an array of {label, kind, ...}");
            }
            for (const json& item : pay.at("strategies")) {
                check_keys(item, {"label", "kind", "kappa", "minor_d", "threshold"}, "payoff.strategies[]");
                if (!item.contains("label")) throw ConfigError("payoff.strategies[]: missing label");
                StrategySpec spec;
                spec.label = item.at("label").get<std::string>();
                json def = item;
                def.erase("label");
                spec.config = strategy_from_json(def, "payoff.strategies[" + spec.label + "]");
                s.payoff.strategies.push_back(std::move(spec));
            }
        }
    }

    if (doc.contains("solve")) {
        const json& solve = doc.at("solve");
        check_keys(solve, {"tolerance", "epsilon", "mode"}, "solve");
        s.solve.tolerance = solve.value("tolerance", 1.0);
        s.solve.epsilon = solve.value("epsilon", 1e-6);
        s.solve.mode = solve.value("mode", std::string{"iterated"});
        if (s.solve.mode != "iterated" && s.solve.mode != "single_pass") {
            throw ConfigError("solve.mode must be 'iterated' or 'single_pass'");
        }
    }

    // Command line overrides beat the document.
    if (overrides.seed) s.seed = *overrides.seed;
    if (overrides.epsilon) {
        s.alpha_sweep.epsilon = *overrides.epsilon;
        s.solve.epsilon = *overrides.epsilon;
    }
    if (overrides.tolerance) s.solve.tolerance = *overrides.tolerance;
    if (overrides.runs) s.payoff.runs = *overrides.runs;

    // Materialize remaining defaults so the echoed config is complete.
    if (!fast_set_given) {
        for (int i = 0; i < s.sim_section.n / 2; ++i) s.sim_section.fast_set.push_back(i);
    }
    if (s.alpha_sweep.delta_b_values.empty()) {
        for (int db = s.alpha_sweep.delta_a; db <= s.alpha_sweep.delta_a + 20; ++db) {
            s.alpha_sweep.delta_b_values.push_back(db);
        }
    }
    if (s.sim_section.lottery_rate == 0.0) {
        s.sim_section.lottery_rate =
            s.lambda_effective() * s.network.round_seconds / s.sim_section.n;
    }
    if (!(s.sim_section.lottery_rate > 0.0) || !(s.sim_section.lottery_rate <= 1.0)) {
        throw ConfigError("sim: resolved lottery rate " + std::to_string(s.sim_section.lottery_rate) +
                          " outside (0,1]; adjust n, lambda or round_seconds");
    }
    if (s.sim_section.max_block_size == 0.0) {
        s.sim_section.max_block_size = 1.0 / s.sim_section.lottery_rate;
    }
    if (s.sim_section.compute_shares.empty()) {
        s.sim_section.compute_shares.assign(static_cast<size_t>(s.sim_section.n),
                                            1.0 / s.sim_section.n);
    }
    if (s.sim_section.compute_shares.size() != static_cast<size_t>(s.sim_section.n)) {
        throw ConfigError("sim.compute_shares must list one share per node");
    }
    if (s.payoff.strategies.empty()) s.payoff.strategies = default_strategy_grid();
    if (s.payoff.runs < 1) throw ConfigError("payoff.runs must be >= 1");
    if (s.payoff.threads < 0) throw ConfigError("payoff.threads must be >= 0");
    if (s.solve.tolerance < 0.0) throw ConfigError("solve.tolerance must be >= 0");
    if (s.solve.epsilon < 0.0) throw ConfigError("solve.epsilon must be >= 0");

    try {
        s.make_sim_config().validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string{"sim: "} + e.what());
    }
    return s;
}

Scenario Scenario::load_file(const std::string& path, const Overrides& overrides)
{
    std::ifstream in(path);
    if (!in.good()) throw ConfigError("cannot open scenario file: " + path);
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true); // allow comments
    } catch (const json::parse_error& e) {
        throw ConfigError("scenario parse error: " + std::string{e.what()});
    }
    return from_json(doc, overrides);
}

Scenario Scenario::defaults(const Overrides& overrides)
{
    return from_json(json::object(), overrides);
}

nlohmann::json Scenario::resolved() const
{
    json doc;
    doc["seed"] = seed;
    doc["network"] = {{"block_interval_s", network.block_interval_s},
                      {"lambda_per_sec", network.lambda_per_sec},
                      {"round_seconds", network.round_seconds},
                      {"multiplier", network.multiplier}};
    doc["pf_sweep"] = {{"top_fraction_M", pf_sweep.top_fraction_m},
                       {"bottom_percentile_m", pf_sweep.bottom_percentile_m},
                       {"advantage_d_seconds", pf_sweep.advantage_d_seconds},
                       {"multipliers", pf_sweep.multipliers}};
    doc["alpha_sweep"] = {{"sweep", alpha_sweep.sweep},
                          {"epsilon", alpha_sweep.epsilon},
                          {"delta_a", alpha_sweep.delta_a},
                          {"delta_b", alpha_sweep.delta_b},
                          {"delta_b_values", alpha_sweep.delta_b_values},
                          {"multipliers", alpha_sweep.multipliers}};
    doc["sim"] = {{"n", sim_section.n},
                  {"fast_set", sim_section.fast_set},
                  {"rounds", sim_section.rounds},
                  {"lottery_rate", sim_section.lottery_rate},
                  {"max_block_size", sim_section.max_block_size},
                  {"delta_slow", sim_section.delta_slow},
                  {"slow_clusters", sim_section.slow_clusters},
                  {"fast_strategy", strategy_to_json(sim_section.fast_strategy)},
                  {"slow_strategy", strategy_to_json(sim_section.slow_strategy)},
                  {"compute_shares", sim_section.compute_shares},
                  {"dump_dag", sim_section.dump_dag}};
    json strategies = json::array();
    for (const StrategySpec& spec : payoff.strategies) {
        json item = strategy_to_json(spec.config);
        item["label"] = spec.label;
        strategies.push_back(item);
    }
    doc["payoff"] = {{"runs", payoff.runs}, {"threads", payoff.threads}, {"strategies", strategies}};
    doc["solve"] = {{"tolerance", solve.tolerance}, {"epsilon", solve.epsilon}, {"mode", solve.mode}};
    return doc;
}

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t hash = 14695981039346656037ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string{buf};
}

std::string Scenario::config_hash() const
{
    return fnv1a_hex(resolved().dump());
}

} // namespace netfair::cli
