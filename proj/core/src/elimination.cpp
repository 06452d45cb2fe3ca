#include "lightsout/elimination.hpp"

#include <string>
#include <utility>

#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

// In-place Gauss-Jordan on `work`. Every row swap and row XOR is mirrored on
// `companion` (if given), which must have the same row count. Returns the
// pivot columns.
std::vector<std::size_t> reduce(Gf2Matrix& work, Gf2Matrix* companion) {
    std::vector<std::size_t> pivots;
    const std::size_t n_rows = work.rows();
    const std::size_t n_cols = work.cols();
    std::size_t next_row = 0;

    for (std::size_t col = 0; col < n_cols && next_row < n_rows; ++col) {
        std::size_t pivot = next_row;
        while (pivot < n_rows && !work.get(pivot, col)) ++pivot;
        if (pivot == n_rows) continue;

        if (pivot != next_row) {
            std::swap(work.row(pivot), work.row(next_row));
            if (companion) std::swap(companion->row(pivot), companion->row(next_row));
        }

        const BitVec& pivot_row = work.row(next_row);
        // Columns left of `col` are already zero in the pivot row.
        const std::size_t first_word = col / BitVec::word_bits;
        for (std::size_t r = 0; r < n_rows; ++r) {
            if (r == next_row || !work.get(r, col)) continue;
            work.row(r).xor_from_word(pivot_row, first_word);
            if (companion) companion->row(r).xor_from_word(companion->row(next_row), 0);
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

void require_rhs(const Gf2Matrix& a, const BitVec& b, const char* op) {
    if (b.size() != a.rows())
        throw DimensionError(std::string(op) + ": matrix has " + std::to_string(a.rows()) +
                             " rows but right-hand side has length " + std::to_string(b.size()));
}

// Reads the canonical solution off a reduced system whose transformed
// right-hand side is `rhs`. Returns nullopt on a zero row with rhs 1.
std::optional<BitVec> back_substitute(const RowEchelon& e, const BitVec& rhs) {
    const std::size_t rank = e.rank();
    for (std::size_t r = rank; r < rhs.size(); ++r)
        if (rhs.get(r)) return std::nullopt;
    BitVec x(e.reduced.cols());
    for (std::size_t r = 0; r < rank; ++r)
        if (rhs.get(r)) x.set(e.pivot_cols[r]);
    return x;
}

}  // namespace

std::vector<std::size_t> RowEchelon::free_cols() const {
    std::vector<std::size_t> out;
    std::size_t p = 0;
    for (std::size_t c = 0; c < reduced.cols(); ++c) {
        if (p < pivot_cols.size() && pivot_cols[p] == c)
            ++p;
        else
            out.push_back(c);
    }
    return out;
}

RowEchelon rref(const Gf2Matrix& a) {
    RowEchelon e{a, {}};
    e.pivot_cols = reduce(e.reduced, nullptr);
    return e;
}

std::size_t rank(const Gf2Matrix& a) { return rref(a).rank(); }

std::optional<BitVec> solve(const Gf2Matrix& a, const BitVec& b) {
    require_rhs(a, b, "solve");
    RowEchelon e{a, {}};
    Gf2Matrix rhs(a.rows(), 1);
    for (std::size_t r = 0; r < a.rows(); ++r)
        if (b.get(r)) rhs.set(r, 0);
    e.pivot_cols = reduce(e.reduced, &rhs);
    return back_substitute(e, rhs.column(0));
}

std::vector<BitVec> nullspace_basis(const RowEchelon& e) {
    std::vector<BitVec> basis;
    const auto free = e.free_cols();
    basis.reserve(free.size());
    for (auto f : free) {
        BitVec v(e.reduced.cols());
        v.set(f);
        for (std::size_t r = 0; r < e.rank(); ++r)
            if (e.reduced.get(r, f)) v.set(e.pivot_cols[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<BitVec> nullspace_basis(const Gf2Matrix& a) { return nullspace_basis(rref(a)); }

std::optional<SolutionSet> solution_set(const Gf2Matrix& a, const BitVec& b) {
    require_rhs(a, b, "solution_set");
    Gf2Solver solver(a);
    auto particular = solver.solve(b);
    if (!particular) return std::nullopt;
    return SolutionSet{std::move(*particular), solver.nullspace_basis()};
}

Gf2Solver::Gf2Solver(const Gf2Matrix& a) : echelon_{a, {}}, transform_(Gf2Matrix::identity(a.rows())) {
    echelon_.pivot_cols = reduce(echelon_.reduced, &transform_);
    basis_ = lightsout::nullspace_basis(echelon_);
}

std::optional<BitVec> Gf2Solver::solve(const BitVec& b) const {
    require_rhs(echelon_.reduced, b, "solve");
    return back_substitute(echelon_, mat_vec(transform_, b));
}

}  // namespace lightsout
