#include "tautring/pairing_matrix.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tautring/taut_expression.hpp"

namespace tautring {

PairingMatrix PairingMatrix::transpose() const {
    PairingMatrix t;
    t.genus = genus;
    t.degree = degree;
    t.construction = construction;
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    t.entries.assign(cols(), std::vector<Rational>(rows()));
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c) t.entries[c][r] = entries[r][c];
    return t;
}

bool PairingMatrix::same_entries(const PairingMatrix& o) const {
    if (rows() != o.rows() || cols() != o.cols()) return false;
    for (std::size_t r = 0; r < rows(); ++r)
        for (std::size_t c = 0; c < cols(); ++c)
            if (entries[r][c] != o.entries[r][c]) return false;
    return true;
}

std::string PairingMatrix::construction_name() const {
    switch (construction) {
        case Construction::P: return "P";
        case Construction::PSub: return "P_sub";
        case Construction::QBlock: return "Q_block";
        case Construction::QDirect: return "Q_direct";
    }
    return "?";
}

std::string PairingMatrix::to_json() const {
    nlohmann::json j;
    j["genus"] = genus;
    j["degree"] = degree;
    j["construction"] = construction_name();
    j["row_labels"] = row_labels;
    j["col_labels"] = col_labels;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : entries) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e.get_str());
        rows_json.push_back(std::move(r));
    }
    j["entries"] = std::move(rows_json);
    return j.dump();
}

std::string PairingMatrix::to_csv() const {
    std::ostringstream os;
    for (const auto& l : col_labels) os << ',' << l;
    os << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
        os << row_labels[r];
        for (const auto& e : entries[r]) os << ',' << e.get_str();
        os << '\n';
    }
    return os.str();
}

PairingMatrix build_p_matrix(LiuXuTable& table, unsigned g, unsigned i) {
    if (g < 2 || i > g - 2) throw std::invalid_argument("build_p_matrix: need 0 <= i <= g-2");
    auto rows = enumerate_kappa_monomials(i);
    auto cols = enumerate_kappa_monomials(g - 2 - i);
    PairingMatrix m;
    m.genus = g;
    m.degree = i;
    m.construction = PairingMatrix::Construction::P;
    for (const auto& r : rows) m.row_labels.push_back(r.label());
    for (const auto& c : cols) m.col_labels.push_back(c.label());
    m.entries.assign(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m.entries[r][c] = table.r_value(g, rows[r] + cols[c]);
    return m;
}

PairingMatrix sub_p_matrix(LiuXuTable& table, unsigned g, unsigned i, int j) {
    if (g < 2 || i > g - 2 || j < -1 || j > static_cast<int>(i))
        throw std::invalid_argument("sub_p_matrix: need -1 <= j <= i <= g-2");
    PairingMatrix m;
    m.genus = g;
    m.degree = i;
    m.construction = PairingMatrix::Construction::PSub;
    auto cols = enumerate_kappa_monomials(g - 2 - i);
    for (const auto& c : cols) m.col_labels.push_back(c.label());
    if (j == -1) {
        auto rows = enumerate_kappa_monomials(i + 1);
        for (const auto& r : rows) m.row_labels.push_back(r.label());
        m.entries.assign(rows.size(), std::vector<Rational>(cols.size(), Rational(0)));
        return m;
    }
    PairingMatrix full = build_p_matrix(table, g, i);
    if (j == 0) {
        m.row_labels = full.row_labels;
        m.entries = full.entries;
        for (auto& row : m.entries)
            for (auto& e : row) e *= Rational(2 * g - 2);
        return m;
    }
    auto rows = enumerate_kappa_monomials(i);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][static_cast<std::size_t>(j)] == 0) continue;
        m.row_labels.push_back(rows[r].label());
        m.entries.push_back(full.entries[r]);
    }
    return m;
}

namespace {

// pi_*(K^{a+b} kappa_{I+J}) read off through the symbolic engine, then
// converted to a kappa_{g-2} multiple.
Rational direct_entry(LiuXuTable& table, unsigned g, const CgMonomial& row, const CgMonomial& col) {
    TautMonomial mono = TautMonomial::K(1, 1, row.k_power + col.k_power);
    mono.kappa = row.kappa + col.kappa;
    TautExpression down = pushforward(TautExpression::of(mono), g);
    Rational s = 0;
    for (const auto& [m, c] : down.terms()) {
        if (m.kappa.degree() != g - 2)
            throw std::logic_error("direct_entry: pushforward degree mismatch");
        s += c * table.r_value(g, m.kappa);
    }
    return s;
}

} // namespace

PairingMatrix build_q_matrix_direct(LiuXuTable& table, unsigned g, unsigned i) {
    if (g < 2 || i > g - 1) throw std::invalid_argument("build_q_matrix_direct: need 0 <= i <= g-1");
    auto rows = enumerate_cg_monomials(i);
    auto cols = enumerate_cg_monomials(g - 1 - i);
    PairingMatrix m;
    m.genus = g;
    m.degree = i;
    m.construction = PairingMatrix::Construction::QDirect;
    for (const auto& r : rows) m.row_labels.push_back(r.label());
    for (const auto& c : cols) m.col_labels.push_back(c.label());
    m.entries.assign(rows.size(), std::vector<Rational>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
            m.entries[r][c] = direct_entry(table, g, rows[r], cols[c]);
    return m;
}

PairingMatrix build_q_matrix(LiuXuTable& table, unsigned g, unsigned i) {
    if (g < 2 || i > g - 1) throw std::invalid_argument("build_q_matrix: need 0 <= i <= g-1");
    if (i == 0) {
        // Single row labeled "1"; the grid form needs i >= 1.
        PairingMatrix m = build_q_matrix_direct(table, g, 0);
        m.construction = PairingMatrix::Construction::QBlock;
        return m;
    }
    auto rows = enumerate_cg_monomials(i);
    auto cols = enumerate_cg_monomials(g - 1 - i);
    PairingMatrix m;
    m.genus = g;
    m.degree = i;
    m.construction = PairingMatrix::Construction::QBlock;
    for (const auto& r : rows) m.row_labels.push_back(r.label());
    for (const auto& c : cols) m.col_labels.push_back(c.label());
    m.entries.assign(rows.size(), std::vector<Rational>(cols.size()));

    std::size_t row_off = 0;
    for (unsigned r = 0; r <= i; ++r) {  // row block: K-power r
        std::size_t col_off = 0;
        const std::size_t block_rows = partition_count(i - r);
        for (unsigned c = 0; c <= g - 1 - i; ++c) {  // column block: K-power c
            PairingMatrix block = sub_p_matrix(table, g, i - 1 + c, static_cast<int>(r + c) - 1);
            const std::size_t block_cols = partition_count(g - 1 - i - c);
            if (block.rows() != block_rows || block.cols() != block_cols)
                throw std::logic_error("build_q_matrix: inconsistent block shape");
            for (std::size_t br = 0; br < block_rows; ++br)
                for (std::size_t bc = 0; bc < block_cols; ++bc)
                    m.entries[row_off + br][col_off + bc] = block.entries[br][bc];
            col_off += block_cols;
        }
        row_off += block_rows;
    }
    return m;
}

} // namespace tautring
