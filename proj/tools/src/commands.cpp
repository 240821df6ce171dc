// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "commands.hpp"

#include <netfair/alpha.hpp>
#include <netfair/analytics.hpp>
#include <netfair/game/builder.hpp>
#include <netfair/game/dominance.hpp>
#include <netfair/game/msne.hpp>
#include <netfair/ohie/ohie.hpp>
#include <netfair/sim/simulator.hpp>
#include <netfair/version.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace netfair::cli {

namespace {

std::string fmt(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string{buf};
}

void write_file(const std::string& out_dir, const std::string& name, const std::string& content)
{
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw ConfigError("cannot write output file: " + path.string());
    out << content;
}

//! Self-describing header: artifact version, seed, config hash and the full
//! resolved configuration, as comment lines.
std::string meta_block(const std::string& command, const std::string& seed_text,
                       const std::string& units, const std::string& config_json)
{
    std::ostringstream out;
    out << "# netfair " << kVersion << "\n";
    out << "# command: " << command << "\n";
    out << "# seed: " << seed_text << "\n";
    out << "# config_hash: " << fnv1a_hex(config_json) << "\n";
    out << "# units: " << units << "\n";
    out << "# config: " << config_json << "\n";
    return out.str();
}

std::string meta_block(const std::string& command, const Scenario& scenario, const std::string& units)
{
    return meta_block(command, std::to_string(scenario.seed), units, scenario.resolved().dump());
}

std::pair<int, int> parse_chain_rank(const std::string& text, const std::string& what)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ConfigError(what + ": expected chain:rank, got '" + text + "'");
    try {
        size_t pos = 0;
        const int chain = std::stoi(text.substr(0, colon), &pos);
        if (pos != colon) throw std::invalid_argument(text);
        const std::string rank_text = text.substr(colon + 1);
        const int rank = std::stoi(rank_text, &pos);
        if (pos != rank_text.size()) throw std::invalid_argument(text);
        return {chain, rank};
    } catch (const std::exception&) {
        throw ConfigError(what + ": expected chain:rank, got '" + text + "'");
    }
}

} // namespace

int cmd_pf_sweep(const Scenario& scenario, const std::string& out_dir, std::ostream& out)
{
    const PfSweepSection& pf = scenario.pf_sweep;
    std::ostringstream csv;
    csv << meta_block("pf-sweep", scenario,
                      "lambda in blocks/second, d in seconds, probabilities dimensionless");
    csv << "multiplier,lambda_per_sec,p_f,theorem1_lower_bound\n";
    for (const double mult : pf.multipliers) {
        if (mult < 0.0) throw ConfigError("pf_sweep.multipliers must be non-negative");
        const double lambda = scenario.lambda_effective() * mult;
        if (lambda == 0.0) {
            // No mining at all: frontrunning cannot happen.
            csv << fmt(mult) << ",0,0,0\n";
            continue;
        }
        const auto params = NetworkParams::from_lambda(lambda, scenario.network.round_seconds);
        const FrontrunQuery query{pf.top_fraction_m, pf.bottom_percentile_m, pf.advantage_d_seconds};
        csv << fmt(mult) << ',' << fmt(lambda) << ',' << fmt(frontrun_probability(params, query))
            << ',' << fmt(frontrun_lower_bound(params, query)) << '\n';
    }
    const std::string content = csv.str();
    write_file(out_dir, "pf_sweep.csv", content);
    out << content;
    return kExitOk;
}

int cmd_alpha_sweep(const Scenario& scenario, const std::string& out_dir, std::ostream& out)
{
    const AlphaSweepSection& alpha = scenario.alpha_sweep;
    std::ostringstream csv;
    csv << meta_block("alpha-sweep", scenario,
                      "delta in rounds, lambda in blocks/second, probabilities dimensionless");
    int diverged = 0;

    const auto emit = [&](const std::string& swept, const NetworkParams& params, int delta_a, int delta_b) {
        const auto result =
            publishing_fairness(params, linear_propagation_profile(delta_a, delta_b), alpha.epsilon);
        if (!result.converged) ++diverged;
        csv << swept << ',' << fmt(result.psi_a) << ',' << fmt(result.psi_b) << ','
            << fmt(result.residual) << ',' << fmt(result.alpha_f) << '\n';
    };

    if (alpha.sweep == "delta_b") {
        csv << "delta_b,psi_a,psi_b,residual,alpha_f\n";
        const auto params =
            NetworkParams::from_lambda(scenario.lambda_effective(), scenario.network.round_seconds);
        for (const int db : alpha.delta_b_values) {
            if (db < alpha.delta_a) {
                throw ConfigError("alpha_sweep.delta_b_values must not drop below delta_a");
            }
            emit(std::to_string(db), params, alpha.delta_a, db);
        }
    } else {
        csv << "lambda_per_sec,psi_a,psi_b,residual,alpha_f\n";
        for (const double mult : alpha.multipliers) {
            if (!(mult > 0.0)) throw ConfigError("alpha_sweep.multipliers must be positive");
            const double lambda = scenario.lambda_effective() * mult;
            emit(fmt(lambda), NetworkParams::from_lambda(lambda, scenario.network.round_seconds),
                 alpha.delta_a, alpha.delta_b);
        }
    }

    const std::string content = csv.str();
    write_file(out_dir, "alpha_sweep.csv", content);
    out << content;
    if (diverged > 0) {
        out << "# diagnostic: " << diverged << " sweep row(s) did not converge (residual stuck)\n";
        return kExitNumericalDiagnostic;
    }
    return kExitOk;
}

int cmd_sim(const Scenario& scenario, const std::string& out_dir, std::ostream& out)
{
    const sim::SimConfig cfg = scenario.make_sim_config();
    const sim::DistanceMatrix dist = sim::make_distance_matrix(
        cfg.n, cfg.fast_set, scenario.sim_section.delta_slow, scenario.sim_section.slow_clusters);
    const sim::SimResult result = sim::run_simulation(cfg, dist);
    const sim::SimOutcome& outcome = result.outcome;
    const double eta = sim::eta_fairness_violation(outcome, scenario.sim_section.compute_shares);

    std::ostringstream report;
    report << meta_block("sim", scenario,
                         "fees in round-units (1 unit accrues per round), shares in percent");
    report << "rounds: " << cfg.rounds << "\n";
    report << "longest_height: " << outcome.longest_height << "\n";
    report << "total_blocks: " << outcome.total_blocks << "\n";
    report << "fork_count: " << outcome.fork_count << "\n";
    report << "orphan_count: " << outcome.orphan_count << "\n";
    report << "chain_utilization_pct: " << fmt(outcome.chain_utilization) << "\n";
    report << "group_share_fast_pct: " << fmt(outcome.group_share_fast) << "\n";
    report << "group_share_slow_pct: " << fmt(outcome.group_share_slow) << "\n";
    report << "eta_fairness_violation: " << fmt(eta) << "\n";
    report << "per_node: node,group,strategy,wins,chain_blocks,chain_reward\n";
    std::vector<bool> fast(static_cast<size_t>(cfg.n), false);
    for (int idx : cfg.fast_set) fast[static_cast<size_t>(idx)] = true;
    for (int i = 0; i < cfg.n; ++i) {
        report << "per_node: " << i << ',' << (fast[static_cast<size_t>(i)] ? "fast" : "slow") << ','
               << sim::strategy_kind_name(cfg.strategies[static_cast<size_t>(i)].kind) << ','
               << outcome.per_node_wins[static_cast<size_t>(i)] << ','
               << fmt(outcome.per_node_blocks[static_cast<size_t>(i)]) << ','
               << fmt(outcome.per_node_reward[static_cast<size_t>(i)]) << '\n';
    }
    const std::string report_text = report.str();
    write_file(out_dir, "sim_report.txt", report_text);

    if (scenario.sim_section.dump_dag) {
        std::ostringstream dag;
        dag << meta_block("sim (block DAG)", scenario, "fees in round-units");
        result.store.dump(dag);
        write_file(out_dir, "sim_dag.csv", dag.str());
    }
    out << report_text;
    return kExitOk;
}

int cmd_payoff(const Scenario& scenario, const std::string& out_dir, std::ostream& out)
{
    std::vector<std::string> labels;
    std::vector<sim::StrategyConfig> defs;
    for (const StrategySpec& spec : scenario.payoff.strategies) {
        labels.push_back(spec.label);
        defs.push_back(spec.config);
    }
    const sim::SimConfig tmpl = scenario.make_sim_config();
    const sim::DistanceMatrix dist = sim::make_distance_matrix(
        tmpl.n, tmpl.fast_set, scenario.sim_section.delta_slow, scenario.sim_section.slow_clusters);
    int threads = scenario.payoff.threads;
    if (threads == 0) {
        threads = static_cast<int>(std::min<unsigned>(std::thread::hardware_concurrency(),
                                                      static_cast<unsigned>(labels.size() * labels.size())));
        threads = std::max(threads, 1);
    }
    const game::PayoffMatrix matrix =
        game::build_payoff_matrix(labels, defs, tmpl, dist, scenario.payoff.runs, threads);

    std::ostringstream csv;
    csv << meta_block("payoff", scenario,
                      "payoffs in percent of total fee accrual (fast = row, slow = col)");
    game::write_payoff_csv(matrix, csv);
    const std::string content = csv.str();
    write_file(out_dir, "payoff_matrix.csv", content);
    out << content;
    return kExitOk;
}

ProfileSpec ProfileSpec::parse(const std::string& text)
{
    const auto bad = [&]() {
        return ConfigError("profile: expected name:L=p,.../L=p,..., got '" + text + "'");
    };
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0) throw bad();
    ProfileSpec spec;
    spec.name = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    const auto slash = body.find('/');
    if (slash == std::string::npos) throw bad();

    const auto parse_side = [&](const std::string& side) {
        std::vector<std::pair<std::string, double>> entries;
        std::istringstream ss(side);
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0) throw bad();
            try {
                size_t pos = 0;
                const double weight = std::stod(item.substr(eq + 1), &pos);
                if (pos != item.size() - eq - 1) throw std::invalid_argument(item);
                entries.emplace_back(item.substr(0, eq), weight);
            } catch (const std::exception&) {
                throw bad();
            }
        }
        if (entries.empty()) throw bad();
        return entries;
    };
    spec.row = parse_side(body.substr(0, slash));
    spec.col = parse_side(body.substr(slash + 1));
    return spec;
}

int cmd_solve(const std::string& matrix_file, const SolveSection& options,
              const std::vector<ProfileSpec>& profiles, const std::string& out_dir, std::ostream& out)
{
    std::ifstream in(matrix_file);
    if (!in.good()) throw ConfigError("cannot open payoff matrix file: " + matrix_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    game::PayoffMatrix matrix;
    try {
        matrix = game::read_payoff_csv(buffer);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    nlohmann::json config{{"matrix_file", std::filesystem::path(matrix_file).filename().string()},
                          {"matrix_hash", fnv1a_hex(buffer.str())},
                          {"tolerance", options.tolerance},
                          {"epsilon", options.epsilon},
                          {"mode", options.mode}};

    const game::RemovalMode mode =
        options.mode == "single_pass" ? game::RemovalMode::single_pass : game::RemovalMode::iterated;
    const game::DominanceResult dominance = game::remove_dominated(matrix, options.tolerance, mode);
    const game::MsneResult msne = game::msne_enumerate(dominance.reduced, options.epsilon);

    std::ostringstream report;
    report << meta_block("solve", "n/a (deterministic)",
                         "payoffs as given in the matrix file (fast = row, slow = col)", config.dump());

    report << "removal_log: " << dominance.log.size() << " eliminations\n";
    for (const game::Removal& removal : dominance.log) {
        report << "removed: " << (removal.player == game::Player::row ? "fast" : "slow") << ' '
               << removal.removed << " (dominated by " << removal.dominator;
        if (!removal.forgiven_cells.empty()) {
            report << "; tolerance forgave vs";
            for (const std::string& cell : removal.forgiven_cells) report << ' ' << cell;
        }
        report << ")\n";
    }
    report << "surviving_fast:";
    for (const std::string& label : dominance.reduced.row_labels()) report << ' ' << label;
    report << "\nsurviving_slow:";
    for (const std::string& label : dominance.reduced.col_labels()) report << ' ' << label;
    report << "\n";

    report << "equilibria: " << msne.equilibria.size() << "\n";
    for (size_t i = 0; i < msne.equilibria.size(); ++i) {
        const game::Equilibrium& eq = msne.equilibria[i];
        report << "equilibrium " << i + 1 << ": fast (";
        for (size_t j = 0; j < eq.profile.row_mix.size(); ++j) {
            report << (j ? ", " : "") << dominance.reduced.row_labels()[j] << '='
                   << fmt(eq.profile.row_mix[j]);
        }
        report << "), slow (";
        for (size_t j = 0; j < eq.profile.col_mix.size(); ++j) {
            report << (j ? ", " : "") << dominance.reduced.col_labels()[j] << '='
                   << fmt(eq.profile.col_mix[j]);
        }
        report << "), regret fast " << fmt(eq.row_regret) << ", slow " << fmt(eq.col_regret) << "\n";
    }
    if (!msne.degenerate_supports.empty()) {
        report << "degenerate_supports: " << msne.degenerate_supports.size() << "\n";
    }

    for (const ProfileSpec& spec : profiles) {
        std::vector<std::string> row_labels, col_labels;
        game::MixedProfile profile;
        for (const auto& [label, weight] : spec.row) {
            row_labels.push_back(label);
            profile.row_mix.push_back(weight);
        }
        for (const auto& [label, weight] : spec.col) {
            col_labels.push_back(label);
            profile.col_mix.push_back(weight);
        }
        try {
            const game::PayoffMatrix sub = matrix.submatrix(row_labels, col_labels);
            const auto [row_regret, col_regret] = game::best_response_regret(sub, profile);
            report << "profile " << spec.name << ": regret fast " << fmt(row_regret) << ", slow "
                   << fmt(col_regret) << "\n";
        } catch (const std::invalid_argument& e) {
            throw ConfigError("profile " + spec.name + ": " + e.what());
        }
    }

    const std::string report_text = report.str();
    write_file(out_dir, "solve_report.txt", report_text);
    out << report_text;

    if (msne.equilibria.empty()) {
        out << "# diagnostic: no equilibrium found at epsilon " << fmt(options.epsilon);
        if (!msne.degenerate_supports.empty()) {
            out << " (" << msne.degenerate_supports.size() << " degenerate supports)";
        }
        out << "\n";
        return kExitNumericalDiagnostic;
    }
    return kExitOk;
}

int cmd_ohie(const OhieOptions& options, const std::string& out_dir, std::ostream& out)
{
    std::ifstream in(options.state_file);
    if (!in.good()) throw ConfigError("cannot open chain state file: " + options.state_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    ohie::OhieChainState state = [&] {
        try {
            std::istringstream text(buffer.str());
            return ohie::OhieChainState::from_text(text);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }();

    nlohmann::json config{{"state_file", std::filesystem::path(options.state_file).filename().string()},
                          {"state_hash", fnv1a_hex(buffer.str())},
                          {"honest_reward", options.honest_reward},
                          {"petty_majority", options.petty_majority}};
    if (options.candidate_next_rank) config["candidate_next_rank"] = *options.candidate_next_rank;
    if (options.target) config["target"] = *options.target;
    config["drop"] = options.drop;

    std::ostringstream report;
    report << meta_block("ohie", "n/a (deterministic)", "fees in abstract units", config.dump());
    report << "chains: " << state.k() << "\n";
    report << "total_block_ordering:";
    for (const ohie::OhieBlock& b : ohie::total_block_ordering(state)) {
        report << " (" << b.rank << ',' << b.next_rank << ")@" << b.chain_id;
    }
    report << "\n";

    try {
        if (options.target.has_value() != options.candidate_next_rank.has_value()) {
            throw ConfigError("frontrun analysis needs both --target and --next-rank");
        }
        if (options.target) {
            const auto [chain, rank] = parse_chain_rank(*options.target, "--target");
            const ohie::FrontrunAnalysis analysis =
                ohie::frontrun_success_probability(state, *options.candidate_next_rank,
                                                   ohie::BlockRef{chain, rank});
            report << "frontrun_target: " << *options.target << "\n";
            report << "frontrun_success_probability: " << fmt(analysis.probability) << " ("
                   << analysis.success_chains << "/" << state.k() << " chains)\n";
            report << "frontrun_rejected_chains:";
            for (int c : analysis.rejected_chains) report << ' ' << c;
            report << "\nfrontrun_losing_chains:";
            for (int c : analysis.losing_chains) report << ' ' << c;
            report << "\n";
            const double reward = state.block(ohie::BlockRef{chain, rank}).fee_value;
            report << "frontrun_expected_reward: "
                   << fmt(ohie::expected_frontrun_reward(analysis.probability, reward)) << "\n";
        }

        if (!options.drop.empty()) {
            std::vector<ohie::BlockRef> drop;
            for (const std::string& entry : options.drop) {
                const auto [chain, rank] = parse_chain_rank(entry, "--drop");
                drop.push_back(ohie::BlockRef{chain, rank});
            }
            const ohie::UndercutDecision decision =
                ohie::undercut_decision(state, drop, options.honest_reward, options.petty_majority);
            report << "undercut_cases:";
            for (const ohie::ChainCase& c : decision.cases) {
                const char* kind = c.kind == ohie::ChainCaseKind::extends   ? "extends"
                                   : c.kind == ohie::ChainCaseKind::tie     ? "tie"
                                                                            : "orphaned";
                report << " chain" << c.chain_id << '=' << kind << (c.success ? "(success)" : "(fail)");
            }
            report << "\n";
            report << "undercut_success_probability: " << fmt(decision.success_probability) << "\n";
            report << "undercut_stealth_next_rank: " << decision.stealth_next_rank << "\n";
            report << "undercut_stealable: " << fmt(decision.stealable) << "\n";
            report << "undercut_expected_reward: " << fmt(decision.expected_undercut_reward) << "\n";
            report << "undercut_breakeven_factor: " << fmt(decision.breakeven_factor) << "\n";
            report << "honest_reward: " << fmt(decision.honest_reward) << "\n";
            report << "verdict: " << (decision.undercut ? "undercut" : "honest") << "\n";
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const std::string report_text = report.str();
    write_file(out_dir, "ohie_report.txt", report_text);
    out << report_text;
    return kExitOk;
}

} // namespace netfair::cli
