// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/game/msne.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace netfair::game {

std::pair<double, double> best_response_regret(const PayoffMatrix& matrix, const MixedProfile& profile)
{
    profile.validate();
    const auto [row_value, col_value] = expected_payoffs(matrix, profile);

    double best_row = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < matrix.rows(); ++r) {
        double v = 0.0;
        for (int c = 0; c < matrix.cols(); ++c) v += profile.col_mix[static_cast<size_t>(c)] * matrix.at(r, c).row;
        best_row = std::max(best_row, v);
    }
    double best_col = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < matrix.cols(); ++c) {
        double v = 0.0;
        for (int r = 0; r < matrix.rows(); ++r) v += profile.row_mix[static_cast<size_t>(r)] * matrix.at(r, c).col;
        best_col = std::max(best_col, v);
    }
    return {best_row - row_value, best_col - col_value};
}

namespace {

using Matrix = std::vector<std::vector<double>>;

// Least squares via normal equations with partial pivoting; false when the
// system is singular.
bool solve_least_squares(const Matrix& a, const std::vector<double>& b, std::vector<double>& x,
                         double* residual_inf)
{
    const size_t rows = a.size();
    const size_t cols = a.empty() ? 0 : a[0].size();
    Matrix normal(cols, std::vector<double>(cols, 0.0));
    std::vector<double> rhs(cols, 0.0);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            rhs[j] += a[i][j] * b[i];
            for (size_t k = 0; k < cols; ++k) normal[j][k] += a[i][j] * a[i][k];
        }
    }

    double scale = 0.0;
    for (size_t j = 0; j < cols; ++j) scale = std::max(scale, std::abs(normal[j][j]));
    const double pivot_floor = std::max(scale, 1.0) * 1e-12;

    // Gaussian elimination with partial pivoting on the normal equations.
    std::vector<size_t> perm(cols);
    for (size_t j = 0; j < cols; ++j) perm[j] = j;
    for (size_t col = 0; col < cols; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < cols; ++r) {
            if (std::abs(normal[r][col]) > std::abs(normal[pivot][col])) pivot = r;
        }
        if (std::abs(normal[pivot][col]) < pivot_floor) return false;
        std::swap(normal[col], normal[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        for (size_t r = col + 1; r < cols; ++r) {
            const double f = normal[r][col] / normal[col][col];
            for (size_t k = col; k < cols; ++k) normal[r][k] -= f * normal[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    x.assign(cols, 0.0);
    for (size_t col = cols; col-- > 0;) {
        double v = rhs[col];
        for (size_t k = col + 1; k < cols; ++k) v -= normal[col][k] * x[k];
        x[col] = v / normal[col][col];
    }

    if (residual_inf) {
        double worst = 0.0;
        for (size_t i = 0; i < rows; ++i) {
            double v = -b[i];
            for (size_t j = 0; j < cols; ++j) v += a[i][j] * x[j];
            worst = std::max(worst, std::abs(v));
        }
        *residual_inf = worst;
    }
    return true;
}

std::vector<std::vector<int>> nonempty_subsets(int n)
{
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i) {
            if (mask & (1 << i)) subset.push_back(i);
        }
        subsets.push_back(std::move(subset));
    }
    return subsets;
}

std::string support_name(const PayoffMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols)
{
    std::ostringstream out;
    out << "rows{";
    for (size_t i = 0; i < rows.size(); ++i) {
        out << (i ? "," : "") << m.row_labels()[static_cast<size_t>(rows[i])];
    }
    out << "} cols{";
    for (size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << m.col_labels()[static_cast<size_t>(cols[i])];
    }
    out << "}";
    return out.str();
}

// Solve for the mix of `mixer` (over `support`) that makes the opponent
// indifferent across `opp_support`. payoff(m_idx, o_idx) is the opponent's
// payoff when the mixer plays m_idx and the opponent plays o_idx.
template <typename PayoffFn>
bool solve_indifference(const std::vector<int>& support, const std::vector<int>& opp_support,
                        PayoffFn&& payoff, double payoff_scale, std::vector<double>& mix)
{
    const size_t k = support.size();
    Matrix a;
    std::vector<double> b;
    for (size_t j = 1; j < opp_support.size(); ++j) {
        std::vector<double> eq(k, 0.0);
        for (size_t i = 0; i < k; ++i) {
            eq[i] = payoff(support[i], opp_support[0]) - payoff(support[i], opp_support[j]);
        }
        a.push_back(std::move(eq));
        b.push_back(0.0);
    }
    a.push_back(std::vector<double>(k, 1.0));
    b.push_back(1.0);

    double residual = 0.0;
    if (!solve_least_squares(a, b, mix, &residual)) return false;
    if (residual > 1e-7 * std::max(1.0, payoff_scale)) {
        mix.clear(); // consistent solve but the indifference cannot hold
        return true;
    }
    for (double& p : mix) {
        if (p < -1e-9) {
            mix.clear();
            return true;
        }
        p = std::max(p, 0.0);
    }
    double sum = 0.0;
    for (double p : mix) sum += p;
    if (sum <= 0.0) {
        mix.clear();
        return true;
    }
    for (double& p : mix) p /= sum;
    return true;
}

} // namespace

MsneResult msne_enumerate(const PayoffMatrix& matrix, double epsilon)
{
    if (epsilon < 0.0) throw std::invalid_argument("msne_enumerate: epsilon must be >= 0");
    matrix.validate();
    if (matrix.rows() > 10 || matrix.cols() > 10) {
        throw std::invalid_argument("msne_enumerate: support enumeration is limited to 10 strategies per side");
    }

    double payoff_scale = 0.0;
    for (int r = 0; r < matrix.rows(); ++r) {
        for (int c = 0; c < matrix.cols(); ++c) {
            payoff_scale = std::max({payoff_scale, std::abs(matrix.at(r, c).row), std::abs(matrix.at(r, c).col)});
        }
    }

    MsneResult result;
    const auto row_supports = nonempty_subsets(matrix.rows());
    const auto col_supports = nonempty_subsets(matrix.cols());

    for (const auto& rs : row_supports) {
        for (const auto& cs : col_supports) {
            // Row mix makes the column player indifferent across cs, and
            // vice versa.
            std::vector<double> row_mix_support;
            const bool row_ok = solve_indifference(
                rs, cs, [&](int r, int c) { return matrix.at(r, c).col; }, payoff_scale, row_mix_support);
            std::vector<double> col_mix_support;
            const bool col_ok = solve_indifference(
                cs, rs, [&](int c, int r) { return matrix.at(r, c).row; }, payoff_scale, col_mix_support);
            if (!row_ok || !col_ok) {
                result.degenerate_supports.push_back(support_name(matrix, rs, cs));
                continue;
            }
            if (row_mix_support.empty() || col_mix_support.empty()) continue;

            Equilibrium eq;
            eq.profile.row_mix.assign(static_cast<size_t>(matrix.rows()), 0.0);
            eq.profile.col_mix.assign(static_cast<size_t>(matrix.cols()), 0.0);
            for (size_t i = 0; i < rs.size(); ++i) {
                eq.profile.row_mix[static_cast<size_t>(rs[i])] = row_mix_support[i];
            }
            for (size_t i = 0; i < cs.size(); ++i) {
                eq.profile.col_mix[static_cast<size_t>(cs[i])] = col_mix_support[i];
            }
            const auto [row_regret, col_regret] = best_response_regret(matrix, eq.profile);
            if (std::max(row_regret, col_regret) > epsilon + 1e-9) continue;
            eq.row_regret = row_regret;
            eq.col_regret = col_regret;

            const auto duplicate = [&](const Equilibrium& other) {
                for (size_t i = 0; i < eq.profile.row_mix.size(); ++i) {
                    if (std::abs(eq.profile.row_mix[i] - other.profile.row_mix[i]) > 1e-6) return false;
                }
                for (size_t i = 0; i < eq.profile.col_mix.size(); ++i) {
                    if (std::abs(eq.profile.col_mix[i] - other.profile.col_mix[i]) > 1e-6) return false;
                }
                return true;
            };
            if (std::none_of(result.equilibria.begin(), result.equilibria.end(), duplicate)) {
                result.equilibria.push_back(std::move(eq));
            }
        }
    }
    return result;
}

} // namespace netfair::game
