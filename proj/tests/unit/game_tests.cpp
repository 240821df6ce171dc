// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <netfair/game/builder.hpp>
#include <netfair/game/dominance.hpp>
#include <netfair/game/msne.hpp>
#include <netfair/game/payoff.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace netfair::game;

namespace {

PayoffMatrix grid(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                  const std::vector<std::vector<std::pair<double, double>>>& cells)
{
    PayoffMatrix m(rows, cols);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            m.at(r, c) = PayoffCell{cells[static_cast<size_t>(r)][static_cast<size_t>(c)].first,
                                    cells[static_cast<size_t>(r)][static_cast<size_t>(c)].second, 0.0};
        }
    }
    return m;
}

PayoffMatrix load_reference_grid()
{
    std::ifstream in(std::string(NETFAIR_SCENARIOS_DIR) + "/fast_slow_payoffs.csv");
    REQUIRE(in.good());
    return read_payoff_csv(in);
}

PayoffMatrix matching_pennies()
{
    return grid({"heads", "tails"}, {"heads", "tails"},
                {{{1.0, 0.0}, {0.0, 1.0}}, {{0.0, 1.0}, {1.0, 0.0}}});
}

PayoffMatrix prisoners_dilemma()
{
    return grid({"cooperate", "defect"}, {"cooperate", "defect"},
                {{{3.0, 3.0}, {0.0, 5.0}}, {{5.0, 0.0}, {1.0, 1.0}}});
}

bool log_contains(const std::vector<Removal>& log, Player player, const std::string& removed)
{
    return std::any_of(log.begin(), log.end(), [&](const Removal& r) {
        return r.player == player && r.removed == removed;
    });
}

} // namespace

TEST_CASE("payoff csv round trip preserves random matrices")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 25; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        std::vector<std::string> row_labels, col_labels;
        for (int r = 0; r < rows; ++r) row_labels.push_back("R" + std::to_string(r));
        for (int c = 0; c < cols; ++c) col_labels.push_back("C" + std::to_string(c));
        PayoffMatrix matrix(row_labels, col_labels);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                matrix.at(r, c) = PayoffCell{100.0 * u01(rng), 100.0 * u01(rng), u01(rng)};
            }
        }
        std::stringstream io;
        write_payoff_csv(matrix, io);
        const PayoffMatrix back = read_payoff_csv(io);
        REQUIRE(back.rows() == rows);
        REQUIRE(back.cols() == cols);
        CHECK(back.row_labels() == matrix.row_labels());
        CHECK(back.col_labels() == matrix.col_labels());
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                CHECK(back.at(r, c).row == doctest::Approx(matrix.at(r, c).row).epsilon(1e-10));
                CHECK(back.at(r, c).col == doctest::Approx(matrix.at(r, c).col).epsilon(1e-10));
                CHECK(back.at(r, c).std_error == doctest::Approx(matrix.at(r, c).std_error).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("payoff csv rejects malformed input")
{
    const auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_payoff_csv(in);
    };
    CHECK_THROWS_AS(parse("a,b,1,2\n"), std::invalid_argument);                       // no header
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\n"), std::invalid_argument); // no cells
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\nA,B,1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\nA,B,1,x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\nA,B,1,2\nA,B,3,4\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\nA,B,1,2\nA,C,1,2\nD,B,1,2\n"),
                    std::invalid_argument); // not a rectangle
    CHECK_THROWS_AS(parse("row,col,row_payoff,col_payoff\nA,B,-1,2\n"), std::invalid_argument);
}

TEST_CASE("dominance removal on the reference grid at tolerance 1")
{
    const PayoffMatrix table = load_reference_grid();
    const DominanceResult result = remove_dominated(table, 1.0);

    CHECK(log_contains(result.log, Player::row, "S3"));
    CHECK(log_contains(result.log, Player::row, "S4"));
    CHECK(log_contains(result.log, Player::col, "S4"));

    // fast S3 falls to S1, forgiving only the S4 column (73.75 vs 74.02)
    const auto fast_s3 = std::find_if(result.log.begin(), result.log.end(), [](const Removal& r) {
        return r.player == Player::row && r.removed == "S3";
    });
    REQUIRE(fast_s3 != result.log.end());
    CHECK(fast_s3->dominator == "S1");
    CHECK(fast_s3->forgiven_cells == std::vector<std::string>{"S4"});

    // slow S4 falls to S3, forgiving the S1 row (21.54 vs 22.17)
    const auto slow_s4 = std::find_if(result.log.begin(), result.log.end(), [](const Removal& r) {
        return r.player == Player::col && r.removed == "S4";
    });
    REQUIRE(slow_s4 != result.log.end());
    CHECK(slow_s4->dominator == "S3");
    CHECK(slow_s4->forgiven_cells == std::vector<std::string>{"S1"});

    // The iterated pass also removes slow S1 (strictly dominated once the
    // fast player is reduced), leaving {S1,S2} x {S2,S3}.
    CHECK(log_contains(result.log, Player::col, "S1"));
    CHECK(result.reduced.row_labels() == std::vector<std::string>{"S1", "S2"});
    CHECK(result.reduced.col_labels() == std::vector<std::string>{"S2", "S3"});

    // Replaying the log reproduces the reduced matrix.
    const PayoffMatrix replayed = apply_removals(table, result.log);
    REQUIRE(replayed.row_labels() == result.reduced.row_labels());
    REQUIRE(replayed.col_labels() == result.reduced.col_labels());
    for (int r = 0; r < replayed.rows(); ++r) {
        for (int c = 0; c < replayed.cols(); ++c) {
            CHECK(replayed.at(r, c).row == result.reduced.at(r, c).row);
            CHECK(replayed.at(r, c).col == result.reduced.at(r, c).col);
        }
    }
}

TEST_CASE("single pass evaluates both players on the full matrix")
{
    const DominanceResult result = remove_dominated(load_reference_grid(), 1.0, RemovalMode::single_pass);
    CHECK(log_contains(result.log, Player::row, "S3"));
    CHECK(log_contains(result.log, Player::row, "S4"));
    CHECK(log_contains(result.log, Player::col, "S1")); // S2 forgives 19.56 vs 19.86
    CHECK(log_contains(result.log, Player::col, "S4"));
    // On the full matrix S2 survives: S4 is behind by >1 against fast S3.
    CHECK_FALSE(log_contains(result.log, Player::col, "S2"));
    CHECK(result.reduced.row_labels() == std::vector<std::string>{"S1", "S2"});
    CHECK(result.reduced.col_labels() == std::vector<std::string>{"S2", "S3"});
}

TEST_CASE("dominance removal basics")
{
    // Strict dominance at tolerance 0.
    const PayoffMatrix strict = grid({"good", "bad"}, {"L", "R"},
                                     {{{5.0, 1.0}, {4.0, 1.0}}, {{2.0, 1.0}, {1.0, 1.0}}});
    const DominanceResult result = remove_dominated(strict, 0.0);
    CHECK(result.reduced.row_labels() == std::vector<std::string>{"good"});
    REQUIRE(result.log.size() == 1);
    CHECK(result.log[0].removed == "bad");
    CHECK(result.log[0].dominator == "good");
    CHECK(result.log[0].forgiven_cells.empty());

    CHECK_THROWS_AS(remove_dominated(strict, -0.5), std::invalid_argument);

    // Mutual tolerance-domination must not empty a strategy set.
    const PayoffMatrix mutual =
        grid({"A", "B"}, {"L", "R"}, {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}});
    const DominanceResult kept = remove_dominated(mutual, 1.5);
    CHECK(kept.reduced.rows() == 2);
    CHECK(kept.log.empty());
}

TEST_CASE("support enumeration on classic games")
{
    SUBCASE("matching pennies has exactly the uniform equilibrium")
    {
        const MsneResult result = msne_enumerate(matching_pennies(), 1e-9);
        REQUIRE(result.equilibria.size() == 1);
        const Equilibrium& eq = result.equilibria[0];
        for (double p : eq.profile.row_mix) CHECK(p == doctest::Approx(0.5).epsilon(1e-9));
        for (double p : eq.profile.col_mix) CHECK(p == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(eq.row_regret <= 1e-9);
        CHECK(eq.col_regret <= 1e-9);
    }

    SUBCASE("prisoner's dilemma has only the defect/defect equilibrium")
    {
        const MsneResult result = msne_enumerate(prisoners_dilemma(), 1e-9);
        REQUIRE(result.equilibria.size() == 1);
        CHECK(result.equilibria[0].profile.row_mix == std::vector<double>{0.0, 1.0});
        CHECK(result.equilibria[0].profile.col_mix == std::vector<double>{0.0, 1.0});
    }

    SUBCASE("identical columns are reported as degenerate supports")
    {
        const PayoffMatrix degenerate =
            grid({"A", "B"}, {"L", "R"}, {{{1.0, 2.0}, {1.0, 2.0}}, {{0.0, 3.0}, {0.0, 3.0}}});
        const MsneResult result = msne_enumerate(degenerate, 1e-9);
        CHECK_FALSE(result.degenerate_supports.empty());
    }
}

TEST_CASE("solver equilibrium of the reduced reference game matches the published mix")
{
    const DominanceResult reduced = remove_dominated(load_reference_grid(), 1.0);
    const MsneResult result = msne_enumerate(reduced.reduced, 1e-6);
    REQUIRE(result.equilibria.size() >= 1);

    bool found = false;
    for (const Equilibrium& eq : result.equilibria) {
        CHECK(eq.row_regret <= 1e-6 + 1e-9); // self-consistency
        CHECK(eq.col_regret <= 1e-6 + 1e-9);
        const double s1 = eq.profile.row_mix[0];
        const double s2_col = eq.profile.col_mix[0];
        if (std::abs(s1 - 0.74) < 0.01 && std::abs(s2_col - 0.32) < 0.01) found = true;
    }
    CHECK(found);
}

TEST_CASE("a 2x2 game without a pure equilibrium has exactly one mixed one")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    int interesting = 0;
    for (int trial = 0; trial < 400 && interesting < 40; ++trial) {
        PayoffMatrix matrix({"A", "B"}, {"L", "R"});
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) matrix.at(r, c) = PayoffCell{10.0 * u01(rng), 10.0 * u01(rng), 0.0};
        }
        // exhaustive pure-equilibrium check
        bool has_pure = false;
        for (int r = 0; r < 2 && !has_pure; ++r) {
            for (int c = 0; c < 2 && !has_pure; ++c) {
                const bool row_best = matrix.at(r, c).row >= matrix.at(1 - r, c).row;
                const bool col_best = matrix.at(r, c).col >= matrix.at(r, 1 - c).col;
                has_pure = row_best && col_best;
            }
        }
        if (has_pure) continue;
        ++interesting;
        const MsneResult result = msne_enumerate(matrix, 1e-9);
        REQUIRE(result.equilibria.size() == 1);
        for (double p : result.equilibria[0].profile.row_mix) CHECK(p > 0.0);
        for (double p : result.equilibria[0].profile.col_mix) CHECK(p > 0.0);
    }
    CHECK(interesting >= 40);
}

TEST_CASE("dominance removal never empties a strategy set")
{
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + static_cast<int>(rng() % 5);
        const int cols = 1 + static_cast<int>(rng() % 5);
        std::vector<std::string> row_labels, col_labels;
        for (int r = 0; r < rows; ++r) row_labels.push_back("R" + std::to_string(r));
        for (int c = 0; c < cols; ++c) col_labels.push_back("C" + std::to_string(c));
        PayoffMatrix matrix(row_labels, col_labels);
        for (int r = 0; r < rows; ++r) {
            // coarse payoffs make tolerance-domination cycles common
            for (int c = 0; c < cols; ++c) {
                matrix.at(r, c) = PayoffCell{static_cast<double>(rng() % 5), static_cast<double>(rng() % 5), 0.0};
            }
        }
        const double tolerance = 4.0 * u01(rng);
        for (const RemovalMode mode : {RemovalMode::iterated, RemovalMode::single_pass}) {
            const DominanceResult result = remove_dominated(matrix, tolerance, mode);
            CHECK(result.reduced.rows() >= 1);
            CHECK(result.reduced.cols() >= 1);
            // and the log replays to the same reduction
            const PayoffMatrix replayed = apply_removals(matrix, result.log);
            CHECK(replayed.row_labels() == result.reduced.row_labels());
            CHECK(replayed.col_labels() == result.reduced.col_labels());
        }
    }
}

TEST_CASE("every enumerated equilibrium passes the regret self-check")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const int rows = 2 + static_cast<int>(rng() % 3);
        const int cols = 2 + static_cast<int>(rng() % 3);
        std::vector<std::string> row_labels, col_labels;
        for (int r = 0; r < rows; ++r) row_labels.push_back("R" + std::to_string(r));
        for (int c = 0; c < cols; ++c) col_labels.push_back("C" + std::to_string(c));
        PayoffMatrix matrix(row_labels, col_labels);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) matrix.at(r, c) = PayoffCell{10.0 * u01(rng), 10.0 * u01(rng), 0.0};
        }
        const MsneResult result = msne_enumerate(matrix, 1e-6);
        CHECK(!result.equilibria.empty()); // finite bimatrix games have an equilibrium
        for (const Equilibrium& eq : result.equilibria) {
            const auto [row_regret, col_regret] = best_response_regret(matrix, eq.profile);
            CHECK(row_regret <= 1e-6 + 1e-9);
            CHECK(col_regret <= 1e-6 + 1e-9);
        }
    }
}

TEST_CASE("regret of the published profiles on the documented reduction")
{
    const PayoffMatrix reduction = load_reference_grid().submatrix({"S1", "S2"}, {"S1", "S2", "S3"});

    // Profile 1: fast (0.74, 0.26), slow (0.32 on S2, 0.68 on S3).
    const MixedProfile profile1{{0.74, 0.26}, {0.0, 0.32, 0.68}};
    const auto [row1, col1] = best_response_regret(reduction, profile1);
    CHECK(row1 == doctest::Approx(0.01456).epsilon(1e-3));
    CHECK(col1 == doctest::Approx(0.01523).epsilon(1e-2));
    CHECK(row1 < 0.05);
    CHECK(col1 < 0.05);

    // Profile 2: fast (0.06, 0.94), slow always S1. The fast side is exactly
    // indifferent (75.22 either way); the slow side leaves a lot on the
    // table against S3.
    const MixedProfile profile2{{0.06, 0.94}, {1.0, 0.0, 0.0}};
    const auto [row2, col2] = best_response_regret(reduction, profile2);
    CHECK(std::abs(row2) <= 1e-9);
    CHECK(col2 == doctest::Approx(4.2618).epsilon(1e-3));
}

TEST_CASE("regret oracle classics")
{
    const auto [pd_row, pd_col] =
        best_response_regret(prisoners_dilemma(), MixedProfile{{0.0, 1.0}, {0.0, 1.0}});
    CHECK(pd_row <= 1e-9);
    CHECK(pd_col <= 1e-9);

    const auto [mp_row, mp_col] =
        best_response_regret(matching_pennies(), MixedProfile{{0.5, 0.5}, {0.5, 0.5}});
    CHECK(mp_row == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(mp_col == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(best_response_regret(matching_pennies(), MixedProfile{{1.0}, {0.5, 0.5}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(best_response_regret(matching_pennies(), MixedProfile{{0.7, 0.7}, {0.5, 0.5}}),
                    std::invalid_argument);
}

TEST_CASE("payoff matrix construction from simulations")
{
    namespace sim = netfair::sim;

    sim::SimConfig tmpl;
    tmpl.n = 2;
    tmpl.fast_set = {0};
    tmpl.rounds = 400;
    tmpl.lottery_rate = 0.1;
    tmpl.max_block_size = 10.0;
    tmpl.seed = 42;
    tmpl.strategies.assign(2, sim::StrategyConfig::petty());
    const sim::DistanceMatrix dist(2); // all delays 1: the two nodes are symmetric

    SUBCASE("symmetric cell is symmetric up to Monte-Carlo error")
    {
        const PayoffCell cell = simulate_payoff_cell(tmpl, dist, sim::StrategyConfig::petty(),
                                                     sim::StrategyConfig::petty(), 300);
        REQUIRE(cell.std_error > 0.0);
        CHECK(std::abs(cell.row - cell.col) < 6.0 * cell.std_error + 1e-9);
    }

    SUBCASE("4x4 grid carries labels, cells and errors, deterministically")
    {
        const std::vector<std::string> labels{"S1", "S2", "S3", "S4"};
        const std::vector<sim::StrategyConfig> defs{
            sim::StrategyConfig::major_undercutting(1.5), sim::StrategyConfig::major_undercutting(1.0),
            sim::StrategyConfig::minor_undercutting(), sim::StrategyConfig::petty()};
        const PayoffMatrix serial = build_payoff_matrix(labels, defs, tmpl, dist, 3, 1);
        serial.validate();
        REQUIRE(serial.rows() == 4);
        REQUIRE(serial.cols() == 4);
        CHECK(serial.row_labels() == labels);

        const PayoffMatrix threaded = build_payoff_matrix(labels, defs, tmpl, dist, 3, 4);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                CHECK(serial.at(r, c).row == threaded.at(r, c).row);
                CHECK(serial.at(r, c).col == threaded.at(r, c).col);
                CHECK(serial.at(r, c).std_error == threaded.at(r, c).std_error);
                CHECK(serial.at(r, c).std_error >= 0.0);
            }
        }
    }
}
