#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lightsout/bitvec.hpp"
#include "lightsout/gf2_matrix.hpp"

namespace lightsout {

/// Probability num/den, with 0 <= num <= den and den > 0.
struct Density {
    std::uint32_t num = 1;
    std::uint32_t den = 2;

    /// Rounds to a multiple of 1e-6. Throws ValidationError outside [0, 1].
    static Density from_double(double p);
    [[nodiscard]] double value() const noexcept { return static_cast<double>(num) / den; }
    [[nodiscard]] bool valid() const noexcept { return den > 0 && num <= den; }
    [[nodiscard]] std::string to_string() const;
    friend bool operator==(const Density&, const Density&) = default;
};

struct RngSpec {
    std::uint64_t seed = 0;
    Density density{1, 2};       // off-diagonal entries i < j
    Density diag_density{1, 2};  // diagonal entries
};

/// Counter-based generator: output k is a SplitMix64 finalisation of
/// key + k * golden_gamma. Streams are split off by re-keying, so any
/// (seed, n, trial) triple maps to an independent, reproducible stream.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }
    std::uint64_t next() noexcept;
    /// True with probability d exactly (in the limit of a uniform 64-bit source).
    bool bernoulli(Density d) noexcept;
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;
    [[nodiscard]] CounterRng split(std::uint64_t stream) const noexcept;

    static std::uint64_t mix(std::uint64_t z) noexcept;

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Witness that diagonal(A) lies in the column space of A.
struct TheoremCertificate {
    std::size_t matrix_dim = 0;
    BitVec witness;  // A * witness == diagonal(A)
    std::size_t nullity = 0;
};

/// Random symmetric n x n matrix; deterministic in spec.seed.
[[nodiscard]] Gf2Matrix random_symmetric(std::size_t n, const RngSpec& spec);
[[nodiscard]] Gf2Matrix random_symmetric(std::size_t n, Density density, Density diag_density, CounterRng& rng);

/// Solves A x = diagonal(A) and re-checks the product.
/// Throws PreconditionError for asymmetric input and InternalError if no
/// witness is found (which the theorem rules out for symmetric A).
[[nodiscard]] TheoremCertificate verify_diagonal_in_range(const Gf2Matrix& a);

/// Every nullspace basis vector is orthogonal to the diagonal.
/// Throws PreconditionError for asymmetric input.
[[nodiscard]] bool verify_nullspace_orthogonality(const Gf2Matrix& a);

/// For a nonzero dependency x (A x = 0), the XOR of the diagonal entries over
/// the support of x vanishes. Throws PreconditionError unless A is symmetric,
/// x is nonzero and A x = 0.
[[nodiscard]] bool verify_column_sum_identity(const Gf2Matrix& a, const BitVec& x);

inline constexpr std::size_t brute_force_max_cols = 20;

/// Exhaustive membership test: walks all 2^cols inputs in Gray-code order,
/// XORing one column per step. Independent of the elimination code.
/// Throws SizeLimitError above brute_force_max_cols columns.
[[nodiscard]] bool brute_force_member(const Gf2Matrix& a, const BitVec& b);

struct SweepRecord {
    std::size_t n = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;  // derived per-instance key
    Density density;
    Density diag_density;
    std::size_t nullity = 0;
    bool ok = false;
    std::string failure;  // empty when ok
};

struct SweepOptions {
    /// Run every trial once per cell of {1/10, 1/2, 9/10} x {0, 1/2, 1}
    /// instead of using the densities in RngSpec.
    bool density_grid = false;
    /// Random XOR-combinations of nullspace basis vectors fed to
    /// verify_column_sum_identity per instance (basis vectors are always checked).
    std::size_t combinations_per_instance = 10;
    /// Cross-check solve against brute_force_member for n <= oracle_max (0 = off),
    /// on the diagonal and on oracle_rhs_per_instance random right-hand sides.
    std::size_t oracle_max = 0;
    std::size_t oracle_rhs_per_instance = 1;
};

struct SweepSummaryRow {
    std::size_t n = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double mean_nullity = 0.0;
};

struct SweepReport {
    std::vector<SweepRecord> records;
    std::size_t successes = 0;
    std::size_t failures = 0;
    std::map<std::size_t, std::size_t> nullity_histogram;
    std::size_t oracle_checks = 0;
    std::size_t oracle_disagreements = 0;

    [[nodiscard]] std::vector<SweepSummaryRow> summary() const;
    /// One machine-readable line per record: "record n=.. trial=.. seed=.. nullity=.. ok=0|1".
    [[nodiscard]] std::string record_lines() const;
    /// Human-readable table plus totals, histogram and oracle line.
    [[nodiscard]] std::string summary_text() const;
};

/// Density cells used by SweepOptions::density_grid.
[[nodiscard]] std::vector<std::pair<Density, Density>> density_grid();

/// Runs verify_diagonal_in_range, verify_nullspace_orthogonality and the
/// column-sum identity on trials_per_n random symmetric matrices for each
/// n in 1..=n_max. Throws ValidationError if n_max or trials_per_n is 0.
[[nodiscard]] SweepReport sweep(std::size_t n_max, std::size_t trials_per_n, const RngSpec& spec,
                                const SweepOptions& options = {});

}  // namespace lightsout
