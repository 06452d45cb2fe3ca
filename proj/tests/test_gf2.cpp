#include <doctest.h>

#include <random>

#include "lightsout/elimination.hpp"
#include "lightsout/errors.hpp"
#include "lightsout/gf2_matrix.hpp"
#include "oracle.hpp"

using namespace lightsout;

namespace {

Gf2Matrix M(std::vector<std::string> rows) { return Gf2Matrix::from_rows(rows); }
BitVec V(const char* s) { return BitVec::from_string(s); }

Gf2Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned density_pct = 50) {
    Gf2Matrix a(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() % 100 < density_pct) a.set(r, c);
    return a;
}

BitVec random_vec(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

}  // namespace

TEST_SUITE("matrix") {
    TEST_CASE("mat_vec examples") {
        CHECK(mat_vec(Gf2Matrix::identity(3), V("101")) == V("101"));
        CHECK(mat_vec(M({"11", "10"}), V("11")) == V("01"));
        CHECK(mat_vec(M({"1011", "0110", "1111"}), V("0000")) == V("000"));
        CHECK_THROWS_AS((void)mat_vec(Gf2Matrix::identity(3), V("10")), DimensionError);
    }

    TEST_CASE("mat_vec equals XOR of selected columns") {
        std::mt19937_64 rng(1);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_matrix(rng, 1 + rng() % 70, 1 + rng() % 70);
            const auto x = random_vec(rng, a.cols());
            BitVec sum(a.rows());
            for (auto c : x.indices()) sum ^= a.column(c);
            CHECK(mat_vec(a, x) == sum);
        }
    }

    TEST_CASE("transpose") {
        CHECK(transpose(Gf2Matrix::identity(2)) == Gf2Matrix::identity(2));
        CHECK(transpose(M({"01", "00"})) == M({"00", "10"}));
        std::mt19937_64 rng(2);
        for (int t = 0; t < 20; ++t) {
            const auto a = random_matrix(rng, rng() % 90, rng() % 90);
            const auto at = transpose(a);
            CHECK(at.rows() == a.cols());
            CHECK(at.cols() == a.rows());
            CHECK(transpose(at) == a);
        }
    }

    TEST_CASE("is_symmetric and diagonal") {
        CHECK(is_symmetric(Gf2Matrix::identity(4)));
        CHECK_FALSE(is_symmetric(M({"01", "00"})));
        CHECK_FALSE(is_symmetric(Gf2Matrix(2, 3)));
        CHECK(is_symmetric(Gf2Matrix()));
        CHECK(diagonal(Gf2Matrix::identity(5)) == BitVec::ones(5));
        CHECK(diagonal(Gf2Matrix(4, 4)) == BitVec(4));
        CHECK(diagonal(M({"10", "00"})) == V("10"));
        CHECK_THROWS_AS((void)diagonal(Gf2Matrix(2, 3)), DimensionError);
    }

    TEST_CASE("text literal format") {
        const auto a = parse_matrix("2 3\n101\n011\n");
        CHECK(a == M({"101", "011"}));
        CHECK(format_matrix(a) == "2 3\n101\n011\n");
        CHECK(parse_matrix(format_matrix(Gf2Matrix(0, 5))) == Gf2Matrix(0, 5));
        CHECK_THROWS_AS((void)parse_matrix("2 2\n10\n"), ValidationError);
        CHECK_THROWS_AS((void)parse_matrix("1 2\n101\n"), ValidationError);
        CHECK_THROWS_AS((void)parse_matrix("1 2\n1a\n"), ValidationError);
        CHECK_THROWS_AS((void)parse_matrix("x"), ValidationError);
    }
}

TEST_SUITE("elimination") {
    TEST_CASE("rref examples") {
        auto e = rref(Gf2Matrix::identity(3));
        CHECK(e.reduced == Gf2Matrix::identity(3));
        CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1, 2});

        e = rref(M({"11", "11"}));
        CHECK(e.reduced == M({"11", "00"}));
        CHECK(e.pivot_cols == std::vector<std::size_t>{0});

        e = rref(Gf2Matrix(3, 4));
        CHECK(e.reduced == Gf2Matrix(3, 4));
        CHECK(e.pivot_cols.empty());
    }

    TEST_CASE("rank examples") {
        for (std::size_t n : {0u, 1u, 7u, 64u, 65u}) {
            CHECK(rank(Gf2Matrix::identity(n)) == n);
            CHECK(rank(Gf2Matrix(n, n)) == 0);
        }
        CHECK(rank(oracle::classic_grid_matrix(5)) == 23);
        CHECK(oracle::naive_rank(oracle::unpack(oracle::classic_grid_matrix(5))) == 23);
    }

    TEST_CASE("solve examples") {
        CHECK(solve(Gf2Matrix::identity(3), V("011")) == V("011"));
        // A is invertible and its columns are 11 and 10, so 01 = A * 11.
        CHECK(solve(M({"11", "10"}), V("01")) == V("11"));
        CHECK(oracle::exhaustive_solve(M({"11", "10"}), V("01")).solutions == 1);
        // columns are 00 and 11, so 01 is unreachable; also diagonal(A) = 01
        const auto asym = M({"01", "01"});
        CHECK_FALSE(solve(asym, V("01")).has_value());
        CHECK(diagonal(asym) == V("01"));
        CHECK_THROWS_AS((void)solve(Gf2Matrix::identity(3), V("01")), DimensionError);
    }

    TEST_CASE("empty systems") {
        CHECK(solve(Gf2Matrix(), BitVec()) == BitVec());
        CHECK(solve(Gf2Matrix(0, 3), BitVec()) == BitVec(3));
        CHECK(nullspace_basis(Gf2Matrix(0, 3)).size() == 3);
        CHECK_FALSE(solve(Gf2Matrix(2, 0), V("10")).has_value());
        CHECK(solve(Gf2Matrix(2, 0), V("00")) == BitVec());
        CHECK(rank(Gf2Matrix()) == 0);
    }

    TEST_CASE("nullspace examples") {
        CHECK(nullspace_basis(Gf2Matrix::identity(4)).empty());
        CHECK(nullspace_basis(Gf2Matrix(2, 2)) == std::vector<BitVec>{V("10"), V("01")});
        CHECK(nullspace_basis(M({"11", "11"})) == std::vector<BitVec>{V("11")});
    }

    TEST_CASE("solution_set examples") {
        auto s = solution_set(Gf2Matrix::identity(2), V("10"));
        REQUIRE(s);
        CHECK(s->particular == V("10"));
        CHECK(s->nullspace_basis.empty());

        s = solution_set(M({"11", "11"}), V("11"));
        REQUIRE(s);
        CHECK(s->particular == V("10"));
        CHECK(s->nullspace_basis == std::vector<BitVec>{V("11")});
        CHECK((s->particular ^ s->nullspace_basis[0]) == V("01"));

        CHECK_FALSE(solution_set(Gf2Matrix(2, 2), V("01")).has_value());
    }

    TEST_CASE("canonical solution sets free variables to zero") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 100; ++t) {
            const auto a = random_matrix(rng, 1 + rng() % 40, 1 + rng() % 40, 30);
            const auto e = rref(a);
            const auto x = solve(a, mat_vec(a, random_vec(rng, a.cols())));
            REQUIRE(x);
            for (auto f : e.free_cols()) CHECK_FALSE(x->get(f));
        }
    }
}

TEST_SUITE("elimination properties") {
    TEST_CASE("solve, rank, nullspace and rref invariants on random matrices") {
        std::mt19937_64 rng(4);
        for (int t = 0; t < 300; ++t) {
            const std::size_t rows = rng() % 80, cols = rng() % 80;
            const unsigned density = 5 + rng() % 90;
            const auto a = random_matrix(rng, rows, cols, density);
            const auto e = rref(a);

            // pivots strictly increasing, each pivot column a unit column
            for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
                if (i > 0) CHECK(e.pivot_cols[i - 1] < e.pivot_cols[i]);
                CHECK(e.reduced.column(e.pivot_cols[i]) == BitVec::unit(rows, i));
            }
            CHECK(rref(e.reduced).reduced == e.reduced);
            CHECK(e.rank() == oracle::naive_rank(oracle::unpack(a)));
            CHECK(rank(a) == rank(transpose(a)));

            const auto basis = nullspace_basis(a);
            CHECK(basis.size() + rank(a) == cols);
            for (const auto& v : basis) CHECK(mat_vec(a, v).none());
            // independence: the basis matrix has full row rank
            if (!basis.empty()) CHECK(rank(Gf2Matrix(cols, basis)) == basis.size());

            const auto b = random_vec(rng, rows);
            if (auto x = solve(a, b)) CHECK(mat_vec(a, *x) == b);
            const auto reachable = mat_vec(a, random_vec(rng, cols));
            auto x = solve(a, reachable);
            REQUIRE(x);
            CHECK(mat_vec(a, *x) == reachable);
        }
    }

    TEST_CASE("coset members all solve the system") {
        std::mt19937_64 rng(5);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, 40);
            const auto b = mat_vec(a, random_vec(rng, a.cols()));
            const auto s = solution_set(a, b);
            REQUIRE(s);
            const std::size_t k = s->nullity();
            for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                BitVec x = s->particular;
                for (std::size_t i = 0; i < k; ++i)
                    if ((mask >> i) & 1u) x ^= s->nullspace_basis[i];
                CHECK(mat_vec(a, x) == b);
            }
            CHECK(oracle::exhaustive_solve(a, b).solutions == (std::size_t{1} << k));
        }
    }

    TEST_CASE("solve presence matches exhaustive search for N <= 12") {
        std::mt19937_64 rng(6);
        for (int t = 0; t < 400; ++t) {
            const std::size_t n = 1 + rng() % 12;
            const auto a = random_matrix(rng, n, n, 10 + rng() % 80);
            const auto b = random_vec(rng, n);
            CHECK(solve(a, b).has_value() == (oracle::exhaustive_solve(a, b).solutions > 0));
        }
    }

    TEST_CASE("cached solver agrees with one-shot solve") {
        std::mt19937_64 rng(7);
        for (int t = 0; t < 50; ++t) {
            const auto a = random_matrix(rng, 1 + rng() % 100, 1 + rng() % 100, 20);
            const Gf2Solver cached(a);
            CHECK(cached.rank() == rank(a));
            CHECK(cached.nullspace_basis() == nullspace_basis(a));
            for (int k = 0; k < 5; ++k) {
                const auto b = k % 2 ? random_vec(rng, a.rows()) : mat_vec(a, random_vec(rng, a.cols()));
                CHECK(cached.solve(b) == solve(a, b));
            }
        }
    }

    TEST_CASE("caller's matrix is not modified") {
        const auto a = M({"110", "011", "111"});
        const auto copy = a;
        (void)rref(a);
        (void)solve(a, V("101"));
        (void)Gf2Solver(a);
        CHECK(a == copy);
    }
}
