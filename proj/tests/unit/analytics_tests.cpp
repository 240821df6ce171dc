// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <netfair/alpha.hpp>
#include <netfair/analytics.hpp>
#include <netfair/params.hpp>
#include <netfair/propagation.hpp>

#include "../support/oracles.hpp"

#include <cmath>
#include <random>

using namespace netfair;

namespace {

constexpr double kBitcoinLambda = 1.0 / 600.0; // blocks per second, one block per 10 minutes

FrontrunQuery bitcoin_query()
{
    return FrontrunQuery{0.5, 0.9, 11.0};
}

} // namespace

TEST_CASE("network params hold the lambda identity exactly")
{
    const auto params = NetworkParams::from_lambda(kBitcoinLambda);
    CHECK(params.lambda() == params.p() * params.hash_rate());
    CHECK(params.lambda() == doctest::Approx(kBitcoinLambda).epsilon(1e-12));

    const NetworkParams direct(1e-6, 2.5e4, 2.0, 16);
    CHECK(direct.lambda() == 1e-6 * 2.5e4);
    CHECK(direct.round_seconds() == 2.0);
    CHECK(direct.n_nodes() == 16);

    CHECK_THROWS_AS(NetworkParams(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(0.5, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams(0.5, 1.0, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(NetworkParams::from_lambda(0.0), std::invalid_argument);
}

TEST_CASE("frontrun query validation")
{
    CHECK_NOTHROW(bitcoin_query().validate());
    CHECK_THROWS_AS((FrontrunQuery{0.0, 0.9, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((FrontrunQuery{0.5, 1.0, 1.0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((FrontrunQuery{0.5, 0.9, -1.0}.validate()), std::invalid_argument);
    // overlapping percentile bands
    CHECK_THROWS_AS((FrontrunQuery{0.95, 0.9, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("fail probability boundary cases and exponential limit")
{
    const auto params = NetworkParams::from_lambda(kBitcoinLambda);
    CHECK(fail_probability(params, 0.5, 0.0) == 1.0);
    CHECK(fail_probability(params, 0.0, 100.0) == 1.0);

    // Small-p limit at fixed lambda: exp(-0.5 * lambda * 600) = exp(-0.5).
    CHECK(std::abs(fail_probability(params, 0.5, 600.0) - 0.60653) < 1e-4);

    // The exact power-law form converges to the exponential as p -> 0.
    const double reference = std::exp(-0.5 * kBitcoinLambda * 600.0);
    double previous_error = 1.0;
    for (const double p : {1e-3, 1e-6, 1e-9}) {
        const NetworkParams params_p(p, kBitcoinLambda / p);
        const double error = std::abs(fail_probability(params_p, 0.5, 600.0) - reference);
        CHECK(error < previous_error);
        previous_error = error;
    }
    CHECK(previous_error < 1e-9);

    CHECK_THROWS_AS(fail_probability(params, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fail_probability(params, 1.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(fail_probability(params, 0.5, -1.0), std::invalid_argument);
}

TEST_CASE("fail probability is monotone and memoryless")
{
    const auto params = NetworkParams::from_lambda(0.05);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double phi1 = u01(rng);
        const double phi2 = phi1 + (1.0 - phi1) * u01(rng);
        const double t1 = 100.0 * u01(rng);
        const double t2 = t1 + 100.0 * u01(rng);
        CHECK(fail_probability(params, phi2, t1 + 1.0) <= fail_probability(params, phi1, t1 + 1.0));
        CHECK(fail_probability(params, phi1 + 1e-3, t2) <= fail_probability(params, phi1 + 1e-3, t1));

        const double joint = fail_probability(params, 1.0, t1 + t2);
        const double split = fail_probability(params, 1.0, t1) * fail_probability(params, 1.0, t2);
        CHECK(joint == doctest::Approx(split).epsilon(1e-12));
    }
}

TEST_CASE("frontrunning probability reproduces the flagship operating points")
{
    const auto query = bitcoin_query();

    const auto bitcoin = NetworkParams::from_lambda(kBitcoinLambda);
    CHECK(std::abs(frontrun_probability(bitcoin, query) - 0.01) < 0.005);

    const auto scaled = NetworkParams::from_lambda(566.0 * kBitcoinLambda);
    CHECK(std::abs(frontrun_probability(scaled, query) - 0.99) < 0.005);

    // 13 s block interval estimate for an Ethereum-like chain.
    const auto eth = NetworkParams::from_lambda(1.0 / 13.0);
    CHECK(std::abs(frontrun_probability(eth, query) - 0.36) < 0.03);

    CHECK(frontrun_probability(bitcoin, FrontrunQuery{0.5, 0.9, 0.0}) == 0.0);
}

TEST_CASE("frontrunning probability is monotone in lambda, M and d")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const double lambda = 1e-4 + u01(rng);
        const double m_top = 0.05 + 0.4 * u01(rng);
        const double d = 30.0 * u01(rng) + 0.1;
        const auto params = NetworkParams::from_lambda(lambda);
        const auto params_up = NetworkParams::from_lambda(lambda * 1.5);
        const FrontrunQuery q{m_top, 0.9, d};
        CHECK(frontrun_probability(params_up, q) > frontrun_probability(params, q));
        CHECK(frontrun_probability(params, FrontrunQuery{m_top + 0.05, 0.9, d}) >
              frontrun_probability(params, q));
        CHECK(frontrun_probability(params, FrontrunQuery{m_top, 0.9, d + 1.0}) >
              frontrun_probability(params, q));
    }
}

TEST_CASE("theorem bound value and strictness")
{
    const auto bitcoin = NetworkParams::from_lambda(kBitcoinLambda);
    const auto query = bitcoin_query();

    // Direct arithmetic oracle: x - x^2/2 with x = 0.5 * lambda * 11.
    const double x = 0.5 * (1.0 / 600.0) * 11.0;
    const double oracle = x - 0.5 * x * x;
    CHECK(frontrun_lower_bound(bitcoin, query) == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(std::abs(frontrun_lower_bound(bitcoin, query) - 0.009125) < 1e-6);

    CHECK(frontrun_lower_bound(bitcoin, FrontrunQuery{0.5, 0.9, 0.0}) == 0.0);

    // Strict lower bound across random valid inputs (1 - e^-x > x - x^2/2).
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int i = 0; i < 10'000; ++i) {
        const double lambda = std::exp(-12.0 + 14.0 * u01(rng));
        const double m_top = 0.01 + 0.5 * u01(rng);
        const double d = 0.01 + 600.0 * u01(rng);
        const auto params = NetworkParams::from_lambda(lambda);
        const FrontrunQuery q{m_top, 0.9, d};
        CHECK(frontrun_lower_bound(params, q) < frontrun_probability(params, q));
    }
}

TEST_CASE("linear propagation profile hits the advertised split")
{
    const auto symmetric = linear_propagation_profile(5, 5);
    symmetric.validate();
    CHECK(symmetric.phi_a_at(5) == doctest::Approx(0.5));
    CHECK(symmetric.phi_b_at(5) == doctest::Approx(0.5));

    const auto skewed = linear_propagation_profile(5, 15);
    skewed.validate();
    CHECK(skewed.phi_a_at(15) == doctest::Approx(0.75));
    CHECK(skewed.phi_b_at(15) == doctest::Approx(0.25));
    CHECK(skewed.phi_a_at(100) == doctest::Approx(0.75)); // saturated beyond the stored range

    // Direct evaluation of the documented ramp formula.
    const auto ramp = linear_propagation_profile(1, 9);
    ramp.validate();
    CHECK(ramp.phi_a_at(9) == doctest::Approx(0.9));
    for (int i = 0; i <= 9; ++i) {
        const double expected_a = std::min(static_cast<double>(i) / 1.0, 9.0 / 10.0);
        const double expected_b = std::min(static_cast<double>(i) / 9.0, 1.0 / 10.0);
        CHECK(ramp.phi_a_at(i) == doctest::Approx(expected_a));
        CHECK(ramp.phi_b_at(i) == doctest::Approx(expected_b));
        CHECK(ramp.phi_a_at(i) + ramp.phi_b_at(i) <= 1.0 + 1e-12);
        if (i > 0) CHECK(ramp.phi_a_at(i) >= ramp.phi_a_at(i - 1));
    }

    CHECK_THROWS_AS(linear_propagation_profile(6, 5), std::invalid_argument);
    CHECK_THROWS_AS(linear_propagation_profile(0, 5), std::invalid_argument);
}

TEST_CASE("publishing fairness of a symmetric race is 1")
{
    const auto params = NetworkParams::from_lambda(0.2);
    const auto result = publishing_fairness(params, linear_propagation_profile(4, 4));
    CHECK(result.converged);
    CHECK(result.alpha_f == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.psi_a + result.psi_b + result.residual == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(result.residual < 1e-12);
}

TEST_CASE("publishing fairness bookkeeping invariants")
{
    for (const double lambda : {0.02, 0.2, 1.0, 5.0}) {
        const auto params = NetworkParams::from_lambda(lambda);
        for (const auto [da, db] : {std::pair{1, 3}, {2, 4}, {5, 15}, {3, 30}}) {
            const auto result = publishing_fairness(params, linear_propagation_profile(da, db));
            CHECK(result.converged);
            CHECK(result.residual < 1e-12);
            CHECK(result.psi_a + result.psi_b + result.residual == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(std::abs(result.psi_b - (1.0 - result.psi_a)) <= result.residual + 1e-12);
            CHECK(result.alpha_f >= 1.0 - 1e-9); // A is the faster node
        }
    }
}

TEST_CASE("publishing fairness grows with delta_B and with lambda")
{
    const auto params = NetworkParams::from_lambda(0.5);
    double previous = 0.0;
    for (int db = 4; db <= 24; db += 2) {
        const double alpha = publishing_fairness(params, linear_propagation_profile(4, db)).alpha_f;
        CHECK(alpha > previous);
        previous = alpha;
    }

    const auto profile = linear_propagation_profile(5, 15);
    previous = 0.0;
    for (const double lambda : {0.01, 0.05, 0.2, 0.5, 1.0, 2.0, 4.0}) {
        const double alpha = publishing_fairness(NetworkParams::from_lambda(lambda), profile).alpha_f;
        CHECK(alpha > previous);
        previous = alpha;
    }
}

TEST_CASE("publishing fairness ratio antisymmetry")
{
    const auto params = NetworkParams::from_lambda(0.3);
    for (const auto [da, db] : {std::pair{2, 4}, {3, 9}, {5, 15}}) {
        const auto profile = linear_propagation_profile(da, db);
        const double forward = publishing_fairness(params, profile).alpha_f;
        const double backward = publishing_fairness(params, profile.swapped()).alpha_f;
        CHECK(forward * backward == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("publishing fairness matches the race oracle on a small instance")
{
    const auto params = NetworkParams::from_lambda(0.2);
    const auto profile = linear_propagation_profile(2, 4);
    const int horizon = 30;

    const auto series = publishing_fairness(params, profile, 1e-12, horizon);
    const auto oracle = netfair::test::race_oracle(params, profile, horizon, 1'000'000, 0xfeedbeef);

    CHECK(std::abs(series.psi_a - oracle.psi_a) < 3.0 * oracle.sigma(oracle.psi_a));
    CHECK(std::abs(series.psi_b - oracle.psi_b) < 3.0 * oracle.sigma(oracle.psi_b));
}

TEST_CASE("publishing fairness reports non-convergence for a dead network")
{
    const auto params = NetworkParams::from_lambda(1e-18);
    const auto result = publishing_fairness(params, linear_propagation_profile(2, 4));
    CHECK_FALSE(result.converged);
    CHECK(result.residual >= 1e-12);

    CHECK_THROWS_AS(publishing_fairness(params, linear_propagation_profile(2, 4), 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(publishing_fairness(params, linear_propagation_profile(2, 4), 1.0),
                    std::invalid_argument);
}
