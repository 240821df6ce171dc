// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef NETFAIR_GAME_PAYOFF_HPP
#define NETFAIR_GAME_PAYOFF_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace netfair::game {

//! One cell of a bimatrix game: payoffs for the row and column player, plus
//! the Monte-Carlo standard error when the cell came from simulations
//! (0 for hand-entered matrices).
struct PayoffCell
{
    double row = 0.0;
    double col = 0.0;
    double std_error = 0.0;
};

//! Two-player bimatrix game with labelled strategies.
class PayoffMatrix
{
public:
    PayoffMatrix() = default;
    PayoffMatrix(std::vector<std::string> row_strategies, std::vector<std::string> col_strategies);

    int rows() const { return static_cast<int>(m_row_labels.size()); }
    int cols() const { return static_cast<int>(m_col_labels.size()); }
    const std::vector<std::string>& row_labels() const { return m_row_labels; }
    const std::vector<std::string>& col_labels() const { return m_col_labels; }

    const PayoffCell& at(int r, int c) const { return m_cells[index(r, c)]; }
    PayoffCell& at(int r, int c) { return m_cells[index(r, c)]; }

    int row_index(const std::string& label) const;
    int col_index(const std::string& label) const;

    //! Copy with the given row/col strategies removed (by label).
    PayoffMatrix without(const std::vector<std::string>& drop_rows,
                         const std::vector<std::string>& drop_cols) const;

    //! Copy restricted to the given labels, in the given order.
    PayoffMatrix submatrix(const std::vector<std::string>& keep_rows,
                           const std::vector<std::string>& keep_cols) const;

    //! Throws std::invalid_argument when empty, non-rectangular or any
    //! payoff is negative or non-finite.
    void validate() const;

private:
    size_t index(int r, int c) const { return static_cast<size_t>(r) * m_col_labels.size() + c; }

    std::vector<std::string> m_row_labels;
    std::vector<std::string> m_col_labels;
    std::vector<PayoffCell> m_cells;
};

//! Mixed strategies for both players over the matrix they were built for.
struct MixedProfile
{
    std::vector<double> row_mix;
    std::vector<double> col_mix;

    void validate() const;
};

//! Expected payoffs (row player, column player) of a mixed profile.
std::pair<double, double> expected_payoffs(const PayoffMatrix& matrix, const MixedProfile& profile);

//! CSV with header `row,col,row_payoff,col_payoff,std_error`, one line per
//! cell; '#' lines are comments. Strategies are ordered by first appearance
//! and the cell set must form a full rectangle.
PayoffMatrix read_payoff_csv(std::istream& in);
void write_payoff_csv(const PayoffMatrix& matrix, std::ostream& out);

} // namespace netfair::game

#endif // NETFAIR_GAME_PAYOFF_HPP
