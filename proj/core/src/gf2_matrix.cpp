#include "lightsout/gf2_matrix.hpp"

#include <ostream>
#include <sstream>
#include <string>

#include "lightsout/errors.hpp"

namespace lightsout {

Gf2Matrix::Gf2Matrix(std::size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != cols_)
            throw DimensionError("row " + std::to_string(r) + " has length " +
                                 std::to_string(rows_[r].size()) + ", expected " + std::to_string(cols_));
    }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::string>& rows) {
    if (rows.empty()) return {};
    std::vector<BitVec> packed;
    packed.reserve(rows.size());
    for (const auto& r : rows) packed.push_back(BitVec::from_string(r));
    const auto cols = packed.front().size();
    return Gf2Matrix(cols, std::move(packed));
}

BitVec Gf2Matrix::column(std::size_t c) const {
    if (c >= cols_) throw DimensionError("column " + std::to_string(c) + " out of range");
    BitVec out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].get(c)) out.set(r);
    return out;
}

BitVec mat_vec(const Gf2Matrix& a, const BitVec& x) {
    if (x.size() != a.cols())
        throw DimensionError("mat_vec: matrix has " + std::to_string(a.cols()) +
                             " columns but vector has length " + std::to_string(x.size()));
    BitVec out(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (bv_dot(a.row(r), x)) out.set(r);
    return out;
}

Gf2Matrix transpose(const Gf2Matrix& a) {
    Gf2Matrix t(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto c : a.row(r).indices()) t.set(c, r);
    return t;
}

bool is_symmetric(const Gf2Matrix& a) {
    if (!a.square()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (auto c : a.row(r).indices())
            if (!a.get(c, r)) return false;
    return true;
}

BitVec diagonal(const Gf2Matrix& a) {
    if (!a.square())
        throw DimensionError("diagonal: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", not square");
    BitVec d(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (a.get(i, i)) d.set(i);
    return d;
}

Gf2Matrix parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols)) throw ValidationError("matrix literal: expected 'ROWS COLS' header");
    std::vector<BitVec> packed;
    packed.reserve(rows);
    std::string line;
    for (std::size_t r = 0; r < rows; ++r) {
        if (!(in >> line))
            throw ValidationError("matrix literal: expected " + std::to_string(rows) + " rows, got " +
                                  std::to_string(r));
        if (line.size() != cols)
            throw ValidationError("matrix literal: row " + std::to_string(r) + " has " +
                                  std::to_string(line.size()) + " entries, expected " +
                                  std::to_string(cols));
        packed.push_back(BitVec::from_string(line));
    }
    if (in >> line) throw ValidationError("matrix literal: trailing data after last row");
    return Gf2Matrix(cols, std::move(packed));
}

std::string format_matrix(const Gf2Matrix& a) {
    std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (const auto& r : a.row_data()) {
        out += r.to_string();
        out += '\n';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const BitVec& v) { return os << v.to_string(); }

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& a) { return os << format_matrix(a); }

}  // namespace lightsout
