#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lightsout/bitvec.hpp"
#include "lightsout/gf2_matrix.hpp"

namespace lightsout {

/// Reduced row echelon form and its pivot columns (strictly increasing).
/// Row r of `reduced` for r < pivot_cols.size() holds the pivot for
/// pivot_cols[r]; the remaining rows are zero.
struct RowEchelon {
    Gf2Matrix reduced;
    std::vector<std::size_t> pivot_cols;

    [[nodiscard]] std::size_t rank() const noexcept { return pivot_cols.size(); }
    [[nodiscard]] std::size_t nullity() const noexcept { return reduced.cols() - pivot_cols.size(); }
    /// Columns without a pivot, increasing.
    [[nodiscard]] std::vector<std::size_t> free_cols() const;
};

/// Particular solution plus a nullspace basis: the full solution coset of A x = b.
struct SolutionSet {
    BitVec particular;
    std::vector<BitVec> nullspace_basis;

    [[nodiscard]] std::size_t nullity() const noexcept { return nullspace_basis.size(); }
};

/// Gauss-Jordan elimination. Columns are scanned left to right; within a
/// column the first not-yet-used row holding a 1 becomes the pivot row.
[[nodiscard]] RowEchelon rref(const Gf2Matrix& a);

[[nodiscard]] std::size_t rank(const Gf2Matrix& a);

/// Canonical solution of A x = b (free variables set to 0), or nullopt when
/// b is outside the column space. Throws DimensionError if b.size() != A.rows().
[[nodiscard]] std::optional<BitVec> solve(const Gf2Matrix& a, const BitVec& b);

/// One vector per free column: that column set to 1, other free columns 0,
/// pivot variables back-substituted.
[[nodiscard]] std::vector<BitVec> nullspace_basis(const Gf2Matrix& a);
[[nodiscard]] std::vector<BitVec> nullspace_basis(const RowEchelon& echelon);

[[nodiscard]] std::optional<SolutionSet> solution_set(const Gf2Matrix& a, const BitVec& b);

/// Reusable factorisation for repeated solves against one matrix.
///
/// Records the row operations of the elimination as a transform T with
/// T A = R, so each solve costs one mat_vec instead of a fresh elimination.
class Gf2Solver {
public:
    explicit Gf2Solver(const Gf2Matrix& a);

    [[nodiscard]] const RowEchelon& echelon() const noexcept { return echelon_; }
    [[nodiscard]] std::size_t rank() const noexcept { return echelon_.rank(); }
    [[nodiscard]] std::size_t nullity() const noexcept { return echelon_.nullity(); }

    [[nodiscard]] std::optional<BitVec> solve(const BitVec& b) const;
    [[nodiscard]] const std::vector<BitVec>& nullspace_basis() const noexcept { return basis_; }

private:
    RowEchelon echelon_;
    Gf2Matrix transform_;
    std::vector<BitVec> basis_;
};

}  // namespace lightsout
