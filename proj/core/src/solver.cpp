#include "lightsout/solver.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "lightsout/errors.hpp"

namespace lightsout {

namespace {

void require_length(const BitVec& v, std::size_t n, const char* what) {
    if (v.size() != n)
        throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(n));
}

}  // namespace

Puzzle Puzzle::all_off(Graph g) {
    const auto n = g.n_vertices;
    return Puzzle{std::move(g), BitVec(n)};
}

LightsOutSystem::LightsOutSystem(const Graph& g) : adjacency_(adjacency_matrix(g)), solver_(adjacency_) {}

BitVec LightsOutSystem::apply(const BitVec& state, const BitVec& clicks) const {
    require_length(state, size(), "state");
    require_length(clicks, size(), "click set");
    // A is symmetric, so row i dotted with the clicks is the XOR of the clicked columns at i.
    return state ^ mat_vec(adjacency_, clicks);
}

std::optional<BitVec> LightsOutSystem::solve(const BitVec& state, const BitVec& target) const {
    require_length(state, size(), "state");
    require_length(target, size(), "target");
    return solver_.solve(state ^ target);
}

std::optional<MinimalClicks> LightsOutSystem::minimal(const BitVec& state, const BitVec& target,
                                                      std::size_t nullity_budget) const {
    auto particular = solve(state, target);
    if (!particular) return std::nullopt;
    const auto& basis = solver_.nullspace_basis();
    const std::size_t k = basis.size();
    if (k > nullity_budget || k >= 63) return MinimalClicks{ClickSet{std::move(*particular)}, false, k};

    // Gray-code walk over the coset: one basis XOR per step.
    BitVec current = *particular;
    BitVec best = current;
    std::size_t best_weight = current.weight();
    const std::uint64_t count = std::uint64_t{1} << k;
    for (std::uint64_t step = 1; step < count; ++step) {
        current ^= basis[static_cast<std::size_t>(std::countr_zero(step))];
        const auto w = current.weight();
        if (w < best_weight || (w == best_weight && current.lex_less(best))) {
            best = current;
            best_weight = w;
        }
    }
    return MinimalClicks{ClickSet{std::move(best)}, true, k};
}

Puzzle apply_clicks(const Puzzle& p, const ClickSet& c) {
    require_length(p.state, p.graph.n_vertices, "state");
    require_length(c.clicks, p.graph.n_vertices, "click set");
    return Puzzle{p.graph, p.state ^ mat_vec(adjacency_matrix(p.graph), c.clicks)};
}

std::optional<ClickSet> solve_to_target(const Puzzle& p, const BitVec& target) {
    require_length(p.state, p.graph.n_vertices, "state");
    require_length(target, p.graph.n_vertices, "target");
    auto x = solve(adjacency_matrix(p.graph), p.state ^ target);
    if (!x) return std::nullopt;
    return ClickSet{std::move(*x)};
}

std::optional<ClickSet> solve_lights_out(const Puzzle& p) {
    return solve_to_target(p, BitVec(p.graph.n_vertices));
}

ClickSet solve_corollary_target(const Graph& g) {
    const auto a = adjacency_matrix(g);
    const auto target = self_loop_vector(g);
    auto x = solve(a, target);
    if (!x) throw InternalError("self-loop pattern unreachable: elimination bug");
    if (mat_vec(a, *x) != target) throw InternalError("corollary click set does not reproduce self-loop pattern");
    return ClickSet{std::move(*x)};
}

std::optional<MinimalClicks> minimal_clicks(const Puzzle& p, const BitVec& target, std::size_t nullity_budget) {
    require_length(p.state, p.graph.n_vertices, "state");
    require_length(target, p.graph.n_vertices, "target");
    return LightsOutSystem(p.graph).minimal(p.state, target, nullity_budget);
}

GraphAnalysis analyze(const Graph& g) {
    const auto r = rank(adjacency_matrix(g));
    return GraphAnalysis{g.n_vertices, r, g.n_vertices - r};
}

SolutionCount count_solutions(const Puzzle& p, const BitVec& target) {
    require_length(p.state, p.graph.n_vertices, "state");
    require_length(target, p.graph.n_vertices, "target");
    const Gf2Solver solver(adjacency_matrix(p.graph));
    if (!solver.solve(p.state ^ target)) return SolutionCount{false, 0};
    return SolutionCount{true, solver.nullity()};
}

}  // namespace lightsout
