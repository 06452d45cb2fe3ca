#include "lightsout/theorem_check.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "lightsout/elimination.hpp"
#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

__extension__ using uint128 = unsigned __int128;

void require_symmetric(const Gf2Matrix& a, const char* op) {
    if (!is_symmetric(a))
        throw PreconditionError(std::string(op) + ": matrix is not symmetric");
}

TheoremCertificate certify(const Gf2Matrix& a, const Gf2Solver& solver) {
    const BitVec d = diagonal(a);
    auto witness = solver.solve(d);
    if (!witness) throw InternalError("diagonal not in range of a symmetric matrix");
    if (mat_vec(a, *witness) != d) throw InternalError("witness does not reproduce the diagonal");
    return TheoremCertificate{a.rows(), std::move(*witness), solver.nullity()};
}

bool orthogonal_to_diagonal(const Gf2Matrix& a, const std::vector<BitVec>& basis) {
    const BitVec d = diagonal(a);
    for (const auto& v : basis)
        if (bv_dot(v, d)) return false;
    return true;
}

}  // namespace

Density Density::from_double(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("density must lie in [0, 1]");
    constexpr std::uint32_t scale = 1'000'000;
    return Density{static_cast<std::uint32_t>(std::llround(p * scale)), scale};
}

std::string Density::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

std::uint64_t CounterRng::mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t CounterRng::next() noexcept { return mix(key_ + (++counter_) * golden_gamma); }

std::uint64_t CounterRng::below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<uint128>(next()) * bound) >> 64);
}

bool CounterRng::bernoulli(Density d) noexcept { return below(d.den) < d.num; }

CounterRng CounterRng::split(std::uint64_t stream) const noexcept {
    return CounterRng(mix(key_ ^ mix(stream + golden_gamma)));
}

Gf2Matrix random_symmetric(std::size_t n, Density density, Density diag_density, CounterRng& rng) {
    if (!density.valid() || !diag_density.valid()) throw ValidationError("density outside [0, 1]");
    Gf2Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng.bernoulli(diag_density)) a.set(i, i);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rng.bernoulli(density)) {
                a.set(i, j);
                a.set(j, i);
            }
        }
    }
    return a;
}

Gf2Matrix random_symmetric(std::size_t n, const RngSpec& spec) {
    CounterRng rng(spec.seed);
    return random_symmetric(n, spec.density, spec.diag_density, rng);
}

TheoremCertificate verify_diagonal_in_range(const Gf2Matrix& a) {
    require_symmetric(a, "verify_diagonal_in_range");
    return certify(a, Gf2Solver(a));
}

bool verify_nullspace_orthogonality(const Gf2Matrix& a) {
    require_symmetric(a, "verify_nullspace_orthogonality");
    return orthogonal_to_diagonal(a, nullspace_basis(a));
}

bool verify_column_sum_identity(const Gf2Matrix& a, const BitVec& x) {
    require_symmetric(a, "verify_column_sum_identity");
    if (x.size() != a.cols()) throw PreconditionError("verify_column_sum_identity: length mismatch");
    if (x.none()) throw PreconditionError("verify_column_sum_identity: x must be nonzero");
    if (mat_vec(a, x).any()) throw PreconditionError("verify_column_sum_identity: A x != 0");
    bool parity = false;
    for (auto j : x.indices()) parity ^= a.get(j, j);
    return !parity;
}

bool brute_force_member(const Gf2Matrix& a, const BitVec& b) {
    if (a.cols() > brute_force_max_cols)
        throw SizeLimitError("brute_force_member: " + std::to_string(a.cols()) +
                             " columns exceeds the enumeration cap of " +
                             std::to_string(brute_force_max_cols));
    if (b.size() != a.rows()) throw DimensionError("brute_force_member: right-hand side length mismatch");

    std::vector<BitVec> columns;
    columns.reserve(a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        BitVec col(a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (a.get(r, c)) col.set(r);
        columns.push_back(std::move(col));
    }

    BitVec image(a.rows());
    if (image == b) return true;
    const std::uint64_t count = std::uint64_t{1} << a.cols();
    for (std::uint64_t step = 1; step < count; ++step) {
        image ^= columns[static_cast<std::size_t>(std::countr_zero(step))];
        if (image == b) return true;
    }
    return false;
}

std::vector<std::pair<Density, Density>> density_grid() {
    std::vector<std::pair<Density, Density>> cells;
    for (Density off : {Density{1, 10}, Density{1, 2}, Density{9, 10}})
        for (Density diag : {Density{0, 1}, Density{1, 2}, Density{1, 1}}) cells.emplace_back(off, diag);
    return cells;
}

namespace {

SweepRecord run_instance(std::size_t n, std::size_t trial, CounterRng rng, Density off, Density diag,
                         const SweepOptions& options, SweepReport& report) {
    SweepRecord rec{n, trial, rng.key(), off, diag, 0, false, {}};
    const Gf2Matrix a = random_symmetric(n, off, diag, rng);
    try {
        // One elimination serves the certificate and the nullspace checks.
        const Gf2Solver solver(a);
        const auto cert = certify(a, solver);
        rec.nullity = cert.nullity;
        const auto& basis = solver.nullspace_basis();
        if (!orthogonal_to_diagonal(a, basis)) {
            rec.failure = "nullspace not orthogonal to diagonal";
            return rec;
        }
        for (const auto& v : basis) {
            if (!verify_column_sum_identity(a, v)) {
                rec.failure = "column-sum identity failed on a basis vector";
                return rec;
            }
        }
        if (!basis.empty()) {
            for (std::size_t k = 0; k < options.combinations_per_instance; ++k) {
                BitVec combo(n);
                for (const auto& v : basis)
                    if (rng.next() & 1) combo ^= v;
                if (combo.none()) combo = basis[rng.below(basis.size())];
                if (!verify_column_sum_identity(a, combo)) {
                    rec.failure = "column-sum identity failed on a nullspace combination";
                    return rec;
                }
            }
        }
        if (n <= options.oracle_max) {
            std::vector<BitVec> rhs{diagonal(a)};
            for (std::size_t k = 0; k < options.oracle_rhs_per_instance; ++k) {
                BitVec b(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (rng.next() & 1) b.set(i);
                rhs.push_back(std::move(b));
            }
            for (const auto& b : rhs) {
                ++report.oracle_checks;
                if (solve(a, b).has_value() != brute_force_member(a, b)) {
                    ++report.oracle_disagreements;
                    rec.failure = "solve disagrees with brute-force oracle";
                    return rec;
                }
            }
        }
        rec.ok = true;
    } catch (const std::exception& e) {
        rec.failure = e.what();
    }
    return rec;
}

}  // namespace

SweepReport sweep(std::size_t n_max, std::size_t trials_per_n, const RngSpec& spec, const SweepOptions& options) {
    if (n_max == 0) throw ValidationError("sweep: n_max must be at least 1");
    if (trials_per_n == 0) throw ValidationError("sweep: trials must be at least 1");

    std::vector<std::pair<Density, Density>> cells;
    if (options.density_grid)
        cells = density_grid();
    else
        cells.emplace_back(spec.density, spec.diag_density);

    SweepReport report;
    const CounterRng root(spec.seed);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const CounterRng per_n = root.split(n);
        for (std::size_t trial = 0; trial < trials_per_n; ++trial) {
            const CounterRng per_trial = per_n.split(trial);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                auto rec = run_instance(n, trial, per_trial.split(c), cells[c].first, cells[c].second,
                                        options, report);
                if (rec.ok) {
                    ++report.successes;
                    ++report.nullity_histogram[rec.nullity];
                } else {
                    ++report.failures;
                }
                report.records.push_back(std::move(rec));
            }
        }
    }
    return report;
}

std::vector<SweepSummaryRow> SweepReport::summary() const {
    std::map<std::size_t, SweepSummaryRow> rows;
    std::map<std::size_t, std::size_t> nullity_sum;
    for (const auto& r : records) {
        auto& row = rows[r.n];
        row.n = r.n;
        ++row.trials;
        if (!r.ok) ++row.failures;
        nullity_sum[r.n] += r.nullity;
    }
    std::vector<SweepSummaryRow> out;
    for (auto& [n, row] : rows) {
        row.mean_nullity = static_cast<double>(nullity_sum[n]) / static_cast<double>(row.trials);
        out.push_back(row);
    }
    return out;
}

std::string SweepReport::record_lines() const {
    std::ostringstream os;
    for (const auto& r : records) {
        os << "record n=" << r.n << " trial=" << r.trial << " seed=" << r.seed
           << " density=" << r.density.to_string() << " diag_density=" << r.diag_density.to_string()
           << " nullity=" << r.nullity << " ok=" << (r.ok ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string SweepReport::summary_text() const {
    std::ostringstream os;
    os << std::setw(6) << "n" << std::setw(10) << "trials" << std::setw(10) << "failures" << std::setw(14)
       << "mean_nullity" << '\n';
    for (const auto& row : summary()) {
        os << std::setw(6) << row.n << std::setw(10) << row.trials << std::setw(10) << row.failures
           << std::setw(14) << std::fixed << std::setprecision(3) << row.mean_nullity << '\n';
    }
    os << "total: " << records.size() << " instances, " << successes << " ok, " << failures << " failed\n";
    os << "nullity histogram:";
    for (const auto& [k, count] : nullity_histogram) os << ' ' << k << ':' << count;
    os << '\n';
    if (oracle_checks > 0) {
        os << "oracle: " << (oracle_disagreements == 0 ? "agree" : "DISAGREE") << " (" << oracle_checks
           << " checks, " << oracle_disagreements << " disagreements)\n";
    }
    for (const auto& r : records)
        if (!r.ok) os << "FAILED n=" << r.n << " trial=" << r.trial << " seed=" << r.seed << ": " << r.failure << '\n';
    return os.str();
}

}  // namespace lightsout
