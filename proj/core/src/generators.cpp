#include "lightsout/generators.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "lightsout/errors.hpp"

namespace lightsout {

std::string to_string(SelfAffect s) { return s == SelfAffect::all ? "all" : "none"; }

SelfAffect parse_self_affect(std::string_view s) {
    if (s == "all") return SelfAffect::all;
    if (s == "none") return SelfAffect::none;
    throw ValidationError("self-affect policy must be 'all' or 'none', got '" + std::string(s) + "'");
}

namespace {

std::vector<std::size_t> all_vertices(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return v;
}

Graph finish(std::size_t n, std::set<Edge> edges, SelfAffect self_affect, std::vector<VertexLabel> labels) {
    Graph g;
    g.n_vertices = n;
    g.edges.assign(edges.begin(), edges.end());
    if (self_affect == SelfAffect::all) g.self_loops = all_vertices(n);
    g.labels = std::move(labels);
    return g;
}

}  // namespace

std::vector<std::string> validate(const GridSpec& spec) {
    std::vector<std::string> out;
    if (spec.dims.empty()) out.emplace_back("grid needs at least one dimension");
    for (std::size_t i = 0; i < spec.dims.size(); ++i)
        if (spec.dims[i] == 0) out.push_back("grid extent on axis " + std::to_string(i) + " must be at least 1");
    if (!spec.wrap.empty() && spec.wrap.size() != spec.dims.size())
        out.push_back("wrap has " + std::to_string(spec.wrap.size()) + " flags for " +
                      std::to_string(spec.dims.size()) + " axes");
    return out;
}

Graph grid(const GridSpec& spec) {
    if (auto problems = validate(spec); !problems.empty()) throw ValidationError(problems.front());

    const std::size_t axes = spec.dims.size();
    std::size_t n = 1;
    for (auto d : spec.dims) {
        if (n > std::numeric_limits<std::size_t>::max() / d) throw ValidationError("grid too large");
        n *= d;
    }
    auto wraps = [&](std::size_t axis) { return !spec.wrap.empty() && spec.wrap[axis]; };

    // stride[k] = product of dims after k
    std::vector<std::size_t> stride(axes, 1);
    for (std::size_t k = axes - 1; k > 0; --k) stride[k - 1] = stride[k] * spec.dims[k];

    // Neighbour offsets: unit steps per axis, or all of {-1,0,1}^axes \ {0}.
    std::vector<std::vector<int>> offsets;
    if (spec.diagonal) {
        std::vector<int> off(axes, -1);
        while (true) {
            if (std::any_of(off.begin(), off.end(), [](int o) { return o != 0; })) offsets.push_back(off);
            std::size_t k = 0;
            while (k < axes && off[k] == 1) off[k++] = -1;
            if (k == axes) break;
            ++off[k];
        }
    } else {
        for (std::size_t k = 0; k < axes; ++k) {
            std::vector<int> off(axes, 0);
            off[k] = 1;
            offsets.push_back(off);
            off[k] = -1;
            offsets.push_back(off);
        }
    }

    std::set<Edge> edges;
    std::vector<VertexLabel> labels(n);
    std::vector<std::size_t> coord(axes, 0);
    for (std::size_t cell = 0; cell < n; ++cell) {
        auto& label = labels[cell];
        for (std::size_t k = 0; k < axes; ++k) {
            label.coords.push_back(static_cast<double>(coord[k]));
            label.name += (k ? "," : "") + std::to_string(coord[k]);
        }
        for (const auto& off : offsets) {
            std::size_t other = 0;
            bool inside = true;
            for (std::size_t k = 0; k < axes && inside; ++k) {
                const auto extent = static_cast<long long>(spec.dims[k]);
                long long c = static_cast<long long>(coord[k]) + off[k];
                if (c < 0 || c >= extent) {
                    if (!wraps(k)) inside = false;
                    c = (c + extent) % extent;
                }
                other += static_cast<std::size_t>(c) * stride[k];
            }
            if (inside && other != cell) edges.insert(std::minmax(cell, other));
        }
        for (std::size_t k = axes; k-- > 0;) {
            if (++coord[k] < spec.dims[k]) break;
            coord[k] = 0;
        }
    }
    return finish(n, std::move(edges), spec.self_affect, std::move(labels));
}

Graph triangular_lattice(std::size_t rows, SelfAffect self_affect) {
    if (rows == 0) throw ValidationError("triangular lattice needs at least one row");
    // Row r starts at index r*r and holds 2r+1 cells; even k points up.
    auto index = [](std::size_t r, std::size_t k) { return r * r + k; };
    const std::size_t n = rows * rows;
    std::set<Edge> edges;
    std::vector<VertexLabel> labels(n);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k <= 2 * r; ++k) {
            const bool up = k % 2 == 0;
            auto& label = labels[index(r, k)];
            label.name = std::to_string(r) + "," + std::to_string(k) + (up ? " up" : " down");
            label.coords = {static_cast<double>(k) - static_cast<double>(r), static_cast<double>(r)};
            if (k + 1 <= 2 * r) edges.emplace(index(r, k), index(r, k + 1));
            // An upward triangle shares its base with the downward one below it.
            if (up && r + 1 < rows) edges.emplace(index(r, k), index(r + 1, k + 1));
        }
    }
    return finish(n, std::move(edges), self_affect, std::move(labels));
}

Graph hexagonal_lattice(std::size_t radius, SelfAffect self_affect) {
    using Axial = std::pair<long long, long long>;
    static constexpr std::array<Axial, 6> directions{
        {{1, 0}, {1, -1}, {0, -1}, {-1, 0}, {-1, 1}, {0, 1}}};

    std::vector<Axial> cells{{0, 0}};
    for (long long ring = 1; ring <= static_cast<long long>(radius); ++ring) {
        Axial h{directions[4].first * ring, directions[4].second * ring};
        for (const auto& dir : directions) {
            for (long long step = 0; step < ring; ++step) {
                cells.push_back(h);
                h = {h.first + dir.first, h.second + dir.second};
            }
        }
    }

    std::map<Axial, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);

    std::set<Edge> edges;
    std::vector<VertexLabel> labels(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto [q, r] = cells[i];
        labels[i].name = std::to_string(q) + "," + std::to_string(r);
        labels[i].coords = {static_cast<double>(q), static_cast<double>(r)};
        for (const auto& dir : directions) {
            if (auto it = index.find({q + dir.first, r + dir.second}); it != index.end())
                edges.insert(std::minmax(i, it->second));
        }
    }
    return finish(cells.size(), std::move(edges), self_affect, std::move(labels));
}

Graph mask_subgraph(const Graph& g, const std::vector<std::size_t>& keep) {
    std::vector<bool> kept(g.n_vertices, false);
    for (auto v : keep) {
        if (v >= g.n_vertices) throw ValidationError("mask index " + std::to_string(v) + " out of range");
        kept[v] = true;
    }
    constexpr auto dropped = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> renumber(g.n_vertices, dropped);
    Graph out;
    for (std::size_t v = 0; v < g.n_vertices; ++v) {
        if (!kept[v]) continue;
        renumber[v] = out.n_vertices++;
        if (!g.labels.empty()) out.labels.push_back(g.labels[v]);
    }
    for (const auto& [u, v] : g.edges) {
        if (u >= g.n_vertices || v >= g.n_vertices) throw ValidationError("edge endpoint out of range");
        if (renumber[u] != dropped && renumber[v] != dropped)
            out.edges.emplace_back(std::minmax(renumber[u], renumber[v]));
    }
    for (auto k : g.self_loops)
        if (k < g.n_vertices && renumber[k] != dropped) out.self_loops.push_back(renumber[k]);
    return canonicalize(std::move(out));
}

Graph apply_coloring(const Graph& g, const LampColoring& coloring) {
    std::set<std::size_t> green;
    for (auto v : coloring.green) {
        if (v >= g.n_vertices) throw ValidationError("green lamp index " + std::to_string(v) + " out of range");
        green.insert(v);
    }
    Graph out = g;
    out.self_loops.assign(green.begin(), green.end());
    return out;
}

Graph generate(const TemplateSpec& spec) {
    Graph g;
    if (spec.family == "grid" || spec.family == "torus") {
        GridSpec grid_spec{spec.dims, spec.wrap, spec.diagonal, spec.self_affect};
        if (spec.family == "torus") grid_spec.wrap.assign(spec.dims.size(), true);
        g = grid(grid_spec);
    } else if (spec.family == "triangular") {
        g = triangular_lattice(spec.rows, spec.self_affect);
    } else if (spec.family == "hexagonal") {
        g = hexagonal_lattice(spec.radius, spec.self_affect);
    } else {
        throw ValidationError("unknown family '" + spec.family + "' (expected grid, torus, triangular or hexagonal)");
    }
    if (spec.mask) g = mask_subgraph(g, *spec.mask);
    if (spec.green) g = apply_coloring(g, LampColoring{*spec.green});
    return g;
}

}  // namespace lightsout
