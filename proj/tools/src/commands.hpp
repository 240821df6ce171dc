// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_TOOLS_COMMANDS_HPP
#define NETFAIR_TOOLS_COMMANDS_HPP

#include "scenario.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace netfair::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalDiagnostic = 3;

//! A named mixed profile over labelled supports, parsed from
//! "name:L1=p1,L2=p2/L1=q1,L2=q2,...". Regret is evaluated on the submatrix
//! spanned by exactly the labels listed on each side.
struct ProfileSpec
{
    std::string name;
    std::vector<std::pair<std::string, double>> row;
    std::vector<std::pair<std::string, double>> col;

    static ProfileSpec parse(const std::string& text);
};

struct OhieOptions
{
    std::string state_file;
    std::optional<int> candidate_next_rank;
    std::optional<std::string> target;       //!< "chain:rank"
    std::vector<std::string> drop;           //!< "chain:rank" entries
    double honest_reward = 0.0;
    bool petty_majority = true;
};

//! Each command writes its artifacts under out_dir and echoes the main
//! table or report to `out`. Returns a process exit code.
int cmd_pf_sweep(const Scenario& scenario, const std::string& out_dir, std::ostream& out);
int cmd_alpha_sweep(const Scenario& scenario, const std::string& out_dir, std::ostream& out);
int cmd_sim(const Scenario& scenario, const std::string& out_dir, std::ostream& out);
int cmd_payoff(const Scenario& scenario, const std::string& out_dir, std::ostream& out);
int cmd_solve(const std::string& matrix_file, const SolveSection& options,
              const std::vector<ProfileSpec>& profiles, const std::string& out_dir, std::ostream& out);
int cmd_ohie(const OhieOptions& options, const std::string& out_dir, std::ostream& out);

} // namespace netfair::cli

#endif // NETFAIR_TOOLS_COMMANDS_HPP
