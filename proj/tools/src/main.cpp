// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "commands.hpp"

#include <netfair/version.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace netfair::cli;

int main(int argc, char** argv)
{
    CLI::App app{"netfair - network fairness analytics for proof-of-work blockchains"};
    app.set_version_flag("--version", netfair::kVersion);
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_dir = ".";
    Overrides overrides;

    const auto add_common = [&](CLI::App* cmd, bool scenario_required) {
        auto* opt = cmd->add_option("--scenario", scenario_path, "scenario file (JSON)");
        if (scenario_required) opt->required();
        cmd->add_option("--out", out_dir, "output directory")->capture_default_str();
        cmd->add_option("--seed", overrides.seed, "override the scenario seed");
        return cmd;
    };

    auto* pf = add_common(app.add_subcommand("pf-sweep", "frontrunning probability vs throughput"), false);
    auto* alpha =
        add_common(app.add_subcommand("alpha-sweep", "publishing fairness vs delay or throughput"), false);
    alpha->add_option("--epsilon", overrides.epsilon, "series truncation epsilon");
    auto* sim = add_common(app.add_subcommand("sim", "run one seeded mining simulation"), false);
    auto* payoff =
        add_common(app.add_subcommand("payoff", "build the fast/slow payoff matrix from simulations"), false);
    payoff->add_option("--runs", overrides.runs, "simulations per payoff cell");

    auto* solve = app.add_subcommand("solve", "dominance removal and equilibria for a payoff matrix CSV");
    std::string matrix_file;
    SolveSection solve_options;
    std::vector<std::string> profile_args;
    solve->add_option("matrix", matrix_file, "payoff matrix CSV")->required();
    solve->add_option("--out", out_dir, "output directory")->capture_default_str();
    solve->add_option("--tolerance", solve_options.tolerance, "dominance tolerance")->capture_default_str();
    solve->add_option("--epsilon", solve_options.epsilon, "equilibrium regret tolerance")
        ->capture_default_str();
    solve->add_option("--mode", solve_options.mode, "iterated or single_pass")->capture_default_str();
    solve->add_option("--eval-profile", profile_args,
                      "evaluate a mixed profile, e.g. name:S1=0.74,S2=0.26/S2=0.32,S3=0.68");

    auto* ohie = app.add_subcommand("ohie", "parallel-chain ordering, frontrunning and undercutting");
    OhieOptions ohie_options;
    ohie->add_option("state", ohie_options.state_file, "chain state file")->required();
    ohie->add_option("--out", out_dir, "output directory")->capture_default_str();
    ohie->add_option("--next-rank", ohie_options.candidate_next_rank,
                     "candidate next_rank for the frontrun analysis");
    ohie->add_option("--target", ohie_options.target, "frontrun target block as chain:rank");
    ohie->add_option("--drop", ohie_options.drop, "blocks to fork out as chain:rank")->delimiter(',');
    ohie->add_option("--honest-reward", ohie_options.honest_reward, "reward of mining honestly")
        ->capture_default_str();
    ohie->add_flag("--petty-majority,!--no-petty-majority", ohie_options.petty_majority,
                   "majority breaks ties toward the lower next_rank");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto scenario = [&] {
            return scenario_path.empty() ? Scenario::defaults(overrides)
                                         : Scenario::load_file(scenario_path, overrides);
        };
        if (pf->parsed()) return cmd_pf_sweep(scenario(), out_dir, std::cout);
        if (alpha->parsed()) return cmd_alpha_sweep(scenario(), out_dir, std::cout);
        if (sim->parsed()) return cmd_sim(scenario(), out_dir, std::cout);
        if (payoff->parsed()) return cmd_payoff(scenario(), out_dir, std::cout);
        if (solve->parsed()) {
            std::vector<ProfileSpec> profiles;
            for (const std::string& arg : profile_args) profiles.push_back(ProfileSpec::parse(arg));
            if (solve_options.mode != "iterated" && solve_options.mode != "single_pass") {
                throw ConfigError("--mode must be iterated or single_pass");
            }
            return cmd_solve(matrix_file, solve_options, profiles, out_dir, std::cout);
        }
        if (ohie->parsed()) return cmd_ohie(ohie_options, out_dir, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const NumericalDiagnostic& e) {
        std::cerr << "numerical diagnostic: " << e.what() << "\n";
        return kExitNumericalDiagnostic;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return kExitOk;
}
