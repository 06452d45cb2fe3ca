#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lightsout/bitvec.hpp"

namespace lightsout {

/// Dense matrix over GF(2) stored as packed rows.
///
/// Zero-sized dimensions are legal. Row i is a BitVec of length cols().
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

    /// Takes ownership of rows; every row must have length cols.
    Gf2Matrix(std::size_t cols, std::vector<BitVec> rows);

    static Gf2Matrix identity(std::size_t n);

    /// Builds from '0'/'1' row strings, e.g. {"110", "011"}. All rows must
    /// have equal length. An empty list yields a 0x0 matrix.
    static Gf2Matrix from_rows(const std::vector<std::string>& rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_.size() == cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) noexcept { rows_[r].set(c, value); }
    void flip(std::size_t r, std::size_t c) noexcept { rows_[r].flip(c); }

    [[nodiscard]] const BitVec& row(std::size_t r) const noexcept { return rows_[r]; }
    [[nodiscard]] BitVec& row(std::size_t r) noexcept { return rows_[r]; }
    [[nodiscard]] const std::vector<BitVec>& row_data() const noexcept { return rows_; }

    /// Copy of column c as a vector of length rows().
    [[nodiscard]] BitVec column(std::size_t c) const;

    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// A x. Entry i is bv_dot(row i, x), i.e. the XOR of the columns selected by x.
/// Throws DimensionError when x.size() != A.cols().
[[nodiscard]] BitVec mat_vec(const Gf2Matrix& a, const BitVec& x);

[[nodiscard]] Gf2Matrix transpose(const Gf2Matrix& a);

[[nodiscard]] bool is_symmetric(const Gf2Matrix& a);

/// Main diagonal of a square matrix; throws DimensionError otherwise.
[[nodiscard]] BitVec diagonal(const Gf2Matrix& a);

// Plain-text literal format used by fixtures:
//   ROWS COLS
//   0110
//   ...
// One line of exactly COLS '0'/'1' characters per row.
[[nodiscard]] Gf2Matrix parse_matrix(std::string_view text);
[[nodiscard]] std::string format_matrix(const Gf2Matrix& a);

std::ostream& operator<<(std::ostream& os, const BitVec& v);
std::ostream& operator<<(std::ostream& os, const Gf2Matrix& a);

}  // namespace lightsout
