#include "lightsout/graph.hpp"

#include <algorithm>
#include <set>

#include "lightsout/errors.hpp"

namespace lightsout {

std::vector<std::string> validate(const Graph& g) {
    std::vector<std::string> violations;
    std::set<Edge> seen;
    for (const auto& [u, v] : g.edges) {
        const std::string tag = "edge [" + std::to_string(u) + "," + std::to_string(v) + "]";
        if (u >= g.n_vertices || v >= g.n_vertices) {
            violations.push_back("edge endpoint out of range: " + tag);
            continue;
        }
        if (u == v) {
            violations.push_back("self-edge in edge list (use self_loops): " + tag);
            continue;
        }
        if (u > v) violations.push_back("edge not stored with smaller index first: " + tag);
        if (!seen.insert(std::minmax(u, v)).second) violations.push_back("duplicate edge: " + tag);
    }
    std::set<std::size_t> loops;
    for (auto k : g.self_loops) {
        if (k >= g.n_vertices)
            violations.push_back("self-loop vertex out of range: " + std::to_string(k));
        else if (!loops.insert(k).second)
            violations.push_back("duplicate self-loop: " + std::to_string(k));
    }
    if (!g.labels.empty() && g.labels.size() != g.n_vertices)
        violations.push_back("label count " + std::to_string(g.labels.size()) + " does not match " +
                             std::to_string(g.n_vertices) + " vertices");
    return violations;
}

void require_valid(const Graph& g) {
    if (auto v = validate(g); !v.empty()) throw ValidationError("invalid graph: " + v.front());
}

Graph canonicalize(Graph g) {
    for (auto& e : g.edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(g.edges.begin(), g.edges.end());
    std::sort(g.self_loops.begin(), g.self_loops.end());
    return g;
}

Gf2Matrix adjacency_matrix(const Graph& g) {
    Gf2Matrix a(g.n_vertices, g.n_vertices);
    for (const auto& [u, v] : g.edges) {
        if (u >= g.n_vertices || v >= g.n_vertices)
            throw ValidationError("edge endpoint out of range: [" + std::to_string(u) + "," +
                                  std::to_string(v) + "]");
        a.set(u, v);
        a.set(v, u);
    }
    for (auto k : g.self_loops) {
        if (k >= g.n_vertices) throw ValidationError("self-loop vertex out of range: " + std::to_string(k));
        a.set(k, k);
    }
    return a;
}

BitVec self_loop_vector(const Graph& g) { return BitVec::from_indices(g.n_vertices, g.self_loops); }

Graph graph_from_adjacency(const Gf2Matrix& a) {
    if (!is_symmetric(a)) throw PreconditionError("graph_from_adjacency: matrix is not symmetric");
    Graph g;
    g.n_vertices = a.rows();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (auto j : a.row(i).indices()) {
            if (j == i)
                g.self_loops.push_back(i);
            else if (j > i)
                g.edges.emplace_back(i, j);
        }
    }
    return g;
}

std::vector<std::vector<std::size_t>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.n_vertices);
    for (const auto& [u, v] : g.edges) {
        adj.at(u).push_back(v);
        adj.at(v).push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

}  // namespace lightsout
