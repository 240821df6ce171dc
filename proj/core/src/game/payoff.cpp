// Copyright (c) 2026 The netfair developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <netfair/game/payoff.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace netfair::game {

PayoffMatrix::PayoffMatrix(std::vector<std::string> row_strategies, std::vector<std::string> col_strategies)
    : m_row_labels{std::move(row_strategies)}, m_col_labels{std::move(col_strategies)},
      m_cells(m_row_labels.size() * m_col_labels.size())
{
    if (m_row_labels.empty() || m_col_labels.empty()) {
        throw std::invalid_argument("PayoffMatrix: need at least one strategy per player");
    }
}

int PayoffMatrix::row_index(const std::string& label) const
{
    const auto it = std::find(m_row_labels.begin(), m_row_labels.end(), label);
    if (it == m_row_labels.end()) throw std::invalid_argument("PayoffMatrix: unknown row strategy " + label);
    return static_cast<int>(it - m_row_labels.begin());
}

int PayoffMatrix::col_index(const std::string& label) const
{
    const auto it = std::find(m_col_labels.begin(), m_col_labels.end(), label);
    if (it == m_col_labels.end()) throw std::invalid_argument("PayoffMatrix: unknown column strategy " + label);
    return static_cast<int>(it - m_col_labels.begin());
}

PayoffMatrix PayoffMatrix::without(const std::vector<std::string>& drop_rows,
                                   const std::vector<std::string>& drop_cols) const
{
    std::vector<std::string> keep_rows;
    std::vector<std::string> keep_cols;
    for (const std::string& label : m_row_labels) {
        if (std::find(drop_rows.begin(), drop_rows.end(), label) == drop_rows.end()) {
            keep_rows.push_back(label);
        }
    }
    for (const std::string& label : m_col_labels) {
        if (std::find(drop_cols.begin(), drop_cols.end(), label) == drop_cols.end()) {
            keep_cols.push_back(label);
        }
    }
    return submatrix(keep_rows, keep_cols);
}

PayoffMatrix PayoffMatrix::submatrix(const std::vector<std::string>& keep_rows,
                                     const std::vector<std::string>& keep_cols) const
{
    PayoffMatrix out(keep_rows, keep_cols);
    for (int r = 0; r < out.rows(); ++r) {
        for (int c = 0; c < out.cols(); ++c) {
            out.at(r, c) = at(row_index(keep_rows[static_cast<size_t>(r)]),
                              col_index(keep_cols[static_cast<size_t>(c)]));
        }
    }
    return out;
}

void PayoffMatrix::validate() const
{
    if (m_row_labels.empty() || m_col_labels.empty()) {
        throw std::invalid_argument("PayoffMatrix: empty strategy set");
    }
    for (const PayoffCell& cell : m_cells) {
        if (!std::isfinite(cell.row) || !std::isfinite(cell.col) || cell.row < 0.0 || cell.col < 0.0) {
            throw std::invalid_argument("PayoffMatrix: payoffs must be finite and non-negative");
        }
        if (!std::isfinite(cell.std_error) || cell.std_error < 0.0) {
            throw std::invalid_argument("PayoffMatrix: standard error must be finite and non-negative");
        }
    }
}

void MixedProfile::validate() const
{
    for (const std::vector<double>* mix : {&row_mix, &col_mix}) {
        if (mix->empty()) throw std::invalid_argument("MixedProfile: empty mix");
        double sum = 0.0;
        for (double p : *mix) {
            if (!(p >= 0.0)) throw std::invalid_argument("MixedProfile: negative probability");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("MixedProfile: mix must sum to 1");
    }
}

std::pair<double, double> expected_payoffs(const PayoffMatrix& matrix, const MixedProfile& profile)
{
    if (profile.row_mix.size() != static_cast<size_t>(matrix.rows()) ||
        profile.col_mix.size() != static_cast<size_t>(matrix.cols())) {
        throw std::invalid_argument("expected_payoffs: profile dimensions do not match the matrix");
    }
    double row_value = 0.0;
    double col_value = 0.0;
    for (int r = 0; r < matrix.rows(); ++r) {
        for (int c = 0; c < matrix.cols(); ++c) {
            const double w = profile.row_mix[static_cast<size_t>(r)] * profile.col_mix[static_cast<size_t>(c)];
            row_value += w * matrix.at(r, c).row;
            col_value += w * matrix.at(r, c).col;
        }
    }
    return {row_value, col_value};
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto begin = field.find_first_not_of(" \t\r");
        const auto end = field.find_last_not_of(" \t\r");
        fields.push_back(begin == std::string::npos ? std::string{} : field.substr(begin, end - begin + 1));
    }
    return fields;
}

double parse_double(const std::string& s, const char* what)
{
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("payoff CSV: bad ") + what + " value '" + s + "'");
    }
}

} // namespace

PayoffMatrix read_payoff_csv(std::istream& in)
{
    struct RawCell
    {
        std::string row;
        std::string col;
        PayoffCell cell;
    };
    std::vector<RawCell> raw;
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;

    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto fields = split_csv_line(line);
        if (!header_seen) {
            if (fields.size() < 4 || fields[0] != "row" || fields[1] != "col") {
                throw std::invalid_argument("payoff CSV: missing row,col,row_payoff,col_payoff header");
            }
            header_seen = true;
            continue;
        }
        if (fields.size() != 4 && fields.size() != 5) {
            throw std::invalid_argument("payoff CSV: expected 4 or 5 fields per line");
        }
        RawCell rc;
        rc.row = fields[0];
        rc.col = fields[1];
        rc.cell.row = parse_double(fields[2], "row payoff");
        rc.cell.col = parse_double(fields[3], "column payoff");
        rc.cell.std_error = fields.size() == 5 && !fields[4].empty() ? parse_double(fields[4], "std error") : 0.0;
        if (std::find(row_labels.begin(), row_labels.end(), rc.row) == row_labels.end()) {
            row_labels.push_back(rc.row);
        }
        if (std::find(col_labels.begin(), col_labels.end(), rc.col) == col_labels.end()) {
            col_labels.push_back(rc.col);
        }
        raw.push_back(std::move(rc));
    }
    if (!header_seen || raw.empty()) throw std::invalid_argument("payoff CSV: no cells found");
    if (raw.size() != row_labels.size() * col_labels.size()) {
        throw std::invalid_argument("payoff CSV: cells do not form a full rectangle");
    }

    PayoffMatrix matrix(row_labels, col_labels);
    std::vector<bool> filled(raw.size(), false);
    for (const RawCell& rc : raw) {
        const int r = matrix.row_index(rc.row);
        const int c = matrix.col_index(rc.col);
        const size_t flat = static_cast<size_t>(r) * col_labels.size() + c;
        if (filled[flat]) throw std::invalid_argument("payoff CSV: duplicate cell " + rc.row + "," + rc.col);
        filled[flat] = true;
        matrix.at(r, c) = rc.cell;
    }
    matrix.validate();
    return matrix;
}

void write_payoff_csv(const PayoffMatrix& matrix, std::ostream& out)
{
    out << "row,col,row_payoff,col_payoff,std_error\n";
    char buf[64];
    const auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string{buf};
    };
    for (int r = 0; r < matrix.rows(); ++r) {
        for (int c = 0; c < matrix.cols(); ++c) {
            const PayoffCell& cell = matrix.at(r, c);
            out << matrix.row_labels()[static_cast<size_t>(r)] << ','
                << matrix.col_labels()[static_cast<size_t>(c)] << ',' << fmt(cell.row) << ','
                << fmt(cell.col) << ',' << fmt(cell.std_error) << '\n';
        }
    }
}

} // namespace netfair::game
