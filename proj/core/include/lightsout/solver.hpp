#pragma once

#include <cstddef>
#include <optional>

#include "lightsout/bitvec.hpp"
#include "lightsout/elimination.hpp"
#include "lightsout/graph.hpp"

namespace lightsout {

/// A graph plus its lamp states (1 = on).
struct Puzzle {
    Graph graph;
    BitVec state;

    /// All lamps off.
    static Puzzle all_off(Graph g);
    friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

/// Vertices clicked once each. Clicking twice cancels, so a set suffices.
struct ClickSet {
    BitVec clicks;

    [[nodiscard]] std::size_t weight() const noexcept { return clicks.weight(); }
    friend bool operator==(const ClickSet&, const ClickSet&) = default;
};

struct MinimalClicks {
    ClickSet clicks;
    bool minimal = false;  // false when the coset was too large to enumerate
    std::size_t nullity = 0;
};

struct GraphAnalysis {
    std::size_t n_vertices = 0;
    std::size_t rank = 0;
    std::size_t nullity = 0;
    /// log2 of the number of states reachable from all-off (== rank); the
    /// reachable fraction is 2^rank / 2^n_vertices.
    [[nodiscard]] std::size_t reachable_exponent() const noexcept { return rank; }
};

struct SolutionCount {
    bool solvable = false;
    std::size_t nullity_exponent = 0;  // 2^nullity_exponent solutions when solvable
};

inline constexpr std::size_t default_nullity_budget = 20;

/// new state = state XOR A clicks. Throws DimensionError on size mismatch.
[[nodiscard]] Puzzle apply_clicks(const Puzzle& p, const ClickSet& c);

/// Canonical click set taking p.state to target, or nullopt.
[[nodiscard]] std::optional<ClickSet> solve_to_target(const Puzzle& p, const BitVec& target);

/// solve_to_target with the all-off target.
[[nodiscard]] std::optional<ClickSet> solve_lights_out(const Puzzle& p);

/// Clicks that take all-off to exactly the self-looped vertices being on.
/// Always exists; throws InternalError otherwise.
[[nodiscard]] ClickSet solve_corollary_target(const Graph& g);

/// Minimum-weight solution when the solution coset has at most
/// 2^nullity_budget members (ties: lexicographically smallest), else the
/// canonical solution flagged minimal = false.
[[nodiscard]] std::optional<MinimalClicks> minimal_clicks(const Puzzle& p, const BitVec& target,
                                                          std::size_t nullity_budget = default_nullity_budget);

[[nodiscard]] GraphAnalysis analyze(const Graph& g);

[[nodiscard]] SolutionCount count_solutions(const Puzzle& p, const BitVec& target);

/// Pre-factored adjacency matrix for repeated queries on one graph.
class LightsOutSystem {
public:
    explicit LightsOutSystem(const Graph& g);

    [[nodiscard]] const Gf2Matrix& adjacency() const noexcept { return adjacency_; }
    [[nodiscard]] const Gf2Solver& solver() const noexcept { return solver_; }
    [[nodiscard]] std::size_t size() const noexcept { return adjacency_.rows(); }

    [[nodiscard]] BitVec apply(const BitVec& state, const BitVec& clicks) const;
    [[nodiscard]] std::optional<BitVec> solve(const BitVec& state, const BitVec& target) const;
    [[nodiscard]] std::optional<MinimalClicks> minimal(const BitVec& state, const BitVec& target,
                                                       std::size_t nullity_budget) const;

private:
    Gf2Matrix adjacency_;
    Gf2Solver solver_;
};

}  // namespace lightsout
