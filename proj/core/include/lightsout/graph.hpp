#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lightsout/bitvec.hpp"
#include "lightsout/gf2_matrix.hpp"

namespace lightsout {

/// Display metadata for a vertex. Never used by the mathematics.
struct VertexLabel {
    std::string name;
    std::vector<double> coords;

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected simple graph with an explicit self-loop set.
///
/// Valid graphs (see validate) store each edge once as (smaller, larger)
/// with distinct endpoints; self-adjacency lives only in self_loops.
/// labels is either empty or has one entry per vertex.
struct Graph {
    std::size_t n_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::size_t> self_loops;
    std::vector<VertexLabel> labels;

    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Human-readable descriptions of every invariant violation; empty iff valid.
[[nodiscard]] std::vector<std::string> validate(const Graph& g);

/// Throws ValidationError carrying the first violation, if any.
void require_valid(const Graph& g);

/// Puts edges and self-loops into canonical sorted order. Does not validate.
[[nodiscard]] Graph canonicalize(Graph g);

/// Symmetric N x N matrix: A[i][j] = A[j][i] = 1 per edge, A[k][k] = 1 per self-loop.
/// Throws ValidationError for out-of-range indices.
[[nodiscard]] Gf2Matrix adjacency_matrix(const Graph& g);

/// Indicator of self-looped vertices; equals diagonal(adjacency_matrix(g)).
[[nodiscard]] BitVec self_loop_vector(const Graph& g);

/// Inverse of adjacency_matrix for symmetric input (edges sorted, no labels).
/// Throws PreconditionError for asymmetric input.
[[nodiscard]] Graph graph_from_adjacency(const Gf2Matrix& a);

/// Neighbours of v (excluding v itself), increasing.
[[nodiscard]] std::vector<std::vector<std::size_t>> adjacency_lists(const Graph& g);

}  // namespace lightsout
