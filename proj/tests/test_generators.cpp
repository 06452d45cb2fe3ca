#include <doctest.h>

#include <algorithm>
#include <random>

#include "lightsout/errors.hpp"
#include "lightsout/generators.hpp"
#include "lightsout/theorem_check.hpp"
#include "oracle.hpp"

using namespace lightsout;

namespace {

std::vector<std::size_t> degrees(const Graph& g) {
    std::vector<std::size_t> d(g.n_vertices, 0);
    for (const auto& [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

// Every catalog graph must be valid, symmetric and satisfy the theorem.
void check_catalog_graph(const Graph& g) {
    CHECK(validate(g).empty());
    const auto a = adjacency_matrix(g);
    CHECK(is_symmetric(a));
    const auto cert = verify_diagonal_in_range(a);
    CHECK(mat_vec(a, cert.witness) == self_loop_vector(g));
}

}  // namespace

TEST_SUITE("grid") {
    TEST_CASE("grid examples") {
        auto g = grid(GridSpec{{1}, {}, false, SelfAffect::all});
        CHECK(g.n_vertices == 1);
        CHECK(g.edges.empty());
        CHECK(g.self_loops == std::vector<std::size_t>{0});

        g = grid(GridSpec{{3, 3}, {}, false, SelfAffect::all});
        CHECK(g.n_vertices == 9);
        CHECK(g.edges.size() == 12);
        CHECK(g.self_loops.size() == 9);
        CHECK(adjacency_matrix(g) == oracle::classic_grid_matrix(3));

        g = grid(GridSpec{{3, 3}, {true, true}, false, SelfAffect::all});
        CHECK(g.edges.size() == 18);
        for (auto d : degrees(g)) CHECK(d == 4);

        g = grid(GridSpec{{2, 2}, {true, true}, false, SelfAffect::all});
        CHECK(g.edges.size() == 4);

        g = grid(GridSpec{{5, 5}, {true, true}, false, SelfAffect::all});
        CHECK(g.edges.size() == 50);
    }

    TEST_CASE("closed-form edge count for plain rectangles") {
        for (std::size_t a = 1; a <= 10; ++a)
            for (std::size_t b = 1; b <= 10; ++b) {
                const auto g = grid(GridSpec{{a, b}, {}, false, SelfAffect::none});
                CHECK(g.n_vertices == a * b);
                CHECK(g.edges.size() == a * (b - 1) + b * (a - 1));
                CHECK(g.self_loops.empty());
                CHECK(validate(g).empty());
            }
    }

    TEST_CASE("matches hand-built matrices") {
        for (std::size_t k = 1; k <= 8; ++k)
            CHECK(adjacency_matrix(grid(GridSpec{{k, k}})) == oracle::classic_grid_matrix(k));
    }

    TEST_CASE("degenerate tori stay simple") {
        auto g = grid(GridSpec{{1, 4}, {true, true}});
        CHECK(g.edges.size() == 4);  // a 4-cycle; the extent-1 axis adds nothing
        CHECK(validate(g).empty());
        g = grid(GridSpec{{1}, {true}});
        CHECK(g.edges.empty());
        g = grid(GridSpec{{2}, {true}});
        CHECK(g.edges.size() == 1);
        g = grid(GridSpec{{2, 2, 2}, {true, true, true}});
        CHECK(g.edges.size() == 12);  // the cube graph
    }

    TEST_CASE("diagonal mode is the Moore neighbourhood") {
        auto g = grid(GridSpec{{3, 3}, {}, true});
        // king graph on 3x3: 12 orthogonal + 8 diagonal
        CHECK(g.edges.size() == 20);
        CHECK(degrees(g)[4] == 8);
        g = grid(GridSpec{{3, 3, 3}, {}, true});
        CHECK(degrees(g)[13] == 26);
        g = grid(GridSpec{{3, 3}, {true, true}, true});
        for (auto d : degrees(g)) CHECK(d == 8);
        CHECK(g.edges.size() == 36);  // K9
        g = grid(GridSpec{{2, 2}, {true, true}, true});
        CHECK(g.edges.size() == 6);  // K4, wrap duplicates collapse
    }

    TEST_CASE("n-dimensional cells touch across one hyperplane") {
        const auto g = grid(GridSpec{{3, 3, 3}});
        CHECK(g.n_vertices == 27);
        CHECK(degrees(g)[13] == 6);
        CHECK(g.edges.size() == 3 * 3 * 3 * 2);  // 3 axes * 9 lines * 2 edges
        CHECK(g.labels.size() == 27);
        CHECK(g.labels[5].coords == std::vector<double>{0, 1, 2});
    }

    TEST_CASE("invalid specs") {
        CHECK_THROWS_AS((void)grid(GridSpec{{}}), ValidationError);
        CHECK_THROWS_AS((void)grid(GridSpec{{0}}), ValidationError);
        CHECK_THROWS_AS((void)grid(GridSpec{{3, 0}}), ValidationError);
        CHECK_THROWS_AS((void)grid(GridSpec{{3, 3}, {true}}), ValidationError);
    }
}

TEST_SUITE("lattices") {
    TEST_CASE("triangular examples") {
        auto g = triangular_lattice(1, SelfAffect::all);
        CHECK(g.n_vertices == 1);
        CHECK(g.edges.empty());

        g = triangular_lattice(2, SelfAffect::all);
        CHECK(g.n_vertices == 4);
        CHECK(g.edges.size() == 3);
        CHECK(degrees(g)[2] == 3);  // centre downward triangle

        g = triangular_lattice(3, SelfAffect::none);
        CHECK(g.n_vertices == 9);
        CHECK(g.edges.size() == 9);
        CHECK(g.self_loops.empty());
        for (auto d : degrees(g)) CHECK(d <= 3);

        CHECK_THROWS_AS((void)triangular_lattice(0, SelfAffect::all), ValidationError);
    }

    TEST_CASE("triangular edge count formula") {
        // Shared sides in a side-r triangle: 3 r (r - 1) / 2.
        for (std::size_t r = 1; r <= 12; ++r)
            CHECK(triangular_lattice(r, SelfAffect::all).edges.size() == 3 * r * (r - 1) / 2);
    }

    TEST_CASE("hexagonal examples") {
        auto g = hexagonal_lattice(0, SelfAffect::all);
        CHECK(g.n_vertices == 1);
        CHECK(g.edges.empty());

        g = hexagonal_lattice(1, SelfAffect::none);
        CHECK(g.n_vertices == 7);
        CHECK(g.edges.size() == 12);
        CHECK(degrees(g)[0] == 6);
        CHECK(g.self_loops.empty());

        g = hexagonal_lattice(2, SelfAffect::all);
        CHECK(g.n_vertices == 19);
        for (std::size_t r = 0; r <= 6; ++r) {
            const auto h = hexagonal_lattice(r, SelfAffect::all);
            CHECK(h.n_vertices == 3 * r * (r + 1) + 1);
            // 3 directions of lines; each contributes (cells - lines) edges
            CHECK(h.edges.size() == 3 * (3 * r * (r + 1) + 1 - (2 * r + 1)));
        }
    }

    TEST_CASE("hexagonal spiral numbering moves between neighbours") {
        const auto g = hexagonal_lattice(3, SelfAffect::all);
        // consecutive cells within a ring share an edge
        for (std::size_t ring = 1, start = 1; ring <= 3; start += 6 * ring, ++ring) {
            for (std::size_t k = 0; k + 1 < 6 * ring; ++k) {
                const Edge e{start + k, start + k + 1};
                CHECK(std::find(g.edges.begin(), g.edges.end(), e) != g.edges.end());
            }
        }
    }
}

TEST_SUITE("shapes") {
    TEST_CASE("mask_subgraph examples") {
        const auto base = grid(GridSpec{{3, 3}});
        std::vector<std::size_t> all(9);
        for (std::size_t i = 0; i < 9; ++i) all[i] = i;
        CHECK(mask_subgraph(base, all) == base);
        CHECK(adjacency_matrix(mask_subgraph(base, all)) == adjacency_matrix(base));

        const auto empty = mask_subgraph(base, {});
        CHECK(empty.n_vertices == 0);
        CHECK(empty.edges.empty());

        const auto plus = mask_subgraph(base, {1, 3, 4, 5, 7});
        CHECK(plus.n_vertices == 5);
        CHECK(plus.edges.size() == 4);
        CHECK(degrees(plus)[2] == 4);
        CHECK(plus.self_loops.size() == 5);
        CHECK(plus.labels[2].coords == std::vector<double>{1, 1});

        CHECK_THROWS_AS((void)mask_subgraph(base, {9}), ValidationError);
    }

    TEST_CASE("apply_coloring examples") {
        const auto base = grid(GridSpec{{2, 2}, {}, false, SelfAffect::none});
        std::vector<std::size_t> all{0, 1, 2, 3};
        CHECK(adjacency_matrix(apply_coloring(base, {all})) == oracle::classic_grid_matrix(2));
        CHECK(self_loop_vector(apply_coloring(base, {{}})) == BitVec(4));
        CHECK(diagonal(adjacency_matrix(apply_coloring(base, {{0}}))) == BitVec::from_string("1000"));
        CHECK(apply_coloring(base, {{0}}).edges == base.edges);
        CHECK_THROWS_AS((void)apply_coloring(base, {{4}}), ValidationError);
    }

    TEST_CASE("template dispatch") {
        TemplateSpec spec;
        spec.family = "torus";
        spec.dims = {3, 3};
        CHECK(generate(spec).edges.size() == 18);
        spec.family = "hexagonal";
        spec.radius = 1;
        spec.self_affect = SelfAffect::none;
        CHECK(generate(spec).edges.size() == 12);
        spec.family = "triangular";
        spec.rows = 3;
        spec.mask = std::vector<std::size_t>{0, 1, 2, 3};
        spec.green = std::vector<std::size_t>{2};
        const auto g = generate(spec);
        CHECK(g.n_vertices == 4);
        CHECK(g.self_loops == std::vector<std::size_t>{2});
        spec.family = "klein";
        CHECK_THROWS_AS((void)generate(spec), ValidationError);
        CHECK_THROWS_AS((void)parse_self_affect("some"), ValidationError);
    }
}

TEST_CASE("theorem holds across the catalog") {
    std::mt19937_64 rng(9);
    std::vector<Graph> catalog;
    for (std::size_t a = 1; a <= 5; ++a)
        for (std::size_t b = 1; b <= 5; ++b)
            for (bool diag : {false, true})
                for (auto wrap : {std::vector<bool>{}, std::vector<bool>{true, false}, std::vector<bool>{true, true}})
                    for (auto self : {SelfAffect::all, SelfAffect::none})
                        catalog.push_back(grid(GridSpec{{a, b}, wrap, diag, self}));
    for (std::size_t r = 1; r <= 4; ++r) catalog.push_back(triangular_lattice(r, SelfAffect::all));
    for (std::size_t r = 0; r <= 2; ++r) catalog.push_back(hexagonal_lattice(r, SelfAffect::none));
    catalog.push_back(grid(GridSpec{{3, 3, 3}, {}, true}));
    for (int t = 0; t < 20; ++t) {
        const auto base = grid(GridSpec{{5, 5}});
        std::vector<std::size_t> keep, green;
        for (std::size_t i = 0; i < 25; ++i) {
            if (rng() % 2) keep.push_back(i);
            if (rng() % 2) green.push_back(i);
        }
        catalog.push_back(mask_subgraph(base, keep));
        catalog.push_back(apply_coloring(base, {green}));
    }
    for (const auto& g : catalog) check_catalog_graph(g);
}
