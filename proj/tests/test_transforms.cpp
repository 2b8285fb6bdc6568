#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "topo/betti.hpp"
#include "topo/fixtures.hpp"
#include "topo/operators.hpp"
#include "topo/transforms.hpp"

using namespace topo;

TEST_CASE("a triangle graph lifts to the filled triangle") {
    const SimplicialComplex cx = graph_to_clique_complex({{1, 2}, {1, 3}, {2, 3}}, 2);
    REQUIRE(cx.num_cells(0) == 3);
    REQUIRE(cx.num_cells(1) == 3);
    REQUIRE(cx.num_cells(2) == 1);
    REQUIRE(cx.has_cell(CellId::simplex({1, 2, 3})));
}

TEST_CASE("a 4-cycle lifts to a hollow square") {
    const SimplicialComplex cx = graph_to_clique_complex({{1, 2}, {2, 3}, {3, 4}, {1, 4}}, 2);
    REQUIRE(cx.num_cells(1) == 4);
    REQUIRE(cx.num_cells(2) == 0);
}

TEST_CASE("K4 lifts to four triangles and no tetrahedron at max_rank 2") {
    const std::vector<Edge> k4{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    const SimplicialComplex cx = graph_to_clique_complex(k4, 2);
    REQUIRE(cx.num_cells(2) == 4);
    REQUIRE(cx.dimension() == 2);
    const SimplicialComplex full = graph_to_clique_complex(k4, 3);
    REQUIRE(full.num_cells(3) == 1);
}

TEST_CASE("clique lifting rejects bad input") {
    REQUIRE_THROWS_AS(graph_to_clique_complex({{1, 1}}, 2), InvalidCell);
    REQUIRE_THROWS_AS(graph_to_clique_complex({{1, 2}}, 0), UnsupportedRank);
    REQUIRE(graph_to_clique_complex({}, 2).num_cells() == 0);
}

TEST_CASE("the 1-skeleton of a lift equals the input edge set") {
    SplitMix64 rng(0x313);
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex graph = oracle::random_graph_complex(rng, 10);
        std::vector<Edge> edges;
        std::set<std::pair<VertexId, VertexId>> expected;
        for (const CellId& e : graph.skeleton(1)) {
            edges.emplace_back(e.vertices()[0], e.vertices()[1]);
            expected.emplace(e.vertices()[0], e.vertices()[1]);
        }
        if (edges.empty()) continue;
        const SimplicialComplex lifted = graph_to_clique_complex(edges, 3);
        std::set<std::pair<VertexId, VertexId>> actual;
        for (const CellId& e : lifted.skeleton(1))
            actual.emplace(e.vertices()[0], e.vertices()[1]);
        REQUIRE(actual == expected);
    }
}

TEST_CASE("forgetting a simplicial complex preserves per-rank counts") {
    const CombinatorialComplex ccc = simplicial_to_combinatorial(fixtures::filled_triangle());
    REQUIRE(ccc.num_cells(0) == 3);
    REQUIRE(ccc.num_cells(1) == 3);
    REQUIRE(ccc.num_cells(2) == 1);

    const CombinatorialComplex empty = simplicial_to_combinatorial(SimplicialComplex{});
    REQUIRE(empty.num_cells() == 0);
}

TEST_CASE("forgetting the glued square-triangle complex") {
    const CombinatorialComplex ccc = cell_to_combinatorial(fixtures::square_triangle_complex());
    REQUIRE(ccc.num_cells(0) == 5);
    REQUIRE(ccc.num_cells(1) == 6);
    REQUIRE(ccc.num_cells(2) == 2);
}

TEST_CASE("forgetting preserves unsigned incidence matrices exactly") {
    SplitMix64 rng(0x414);
    for (int trial = 0; trial < 15; ++trial) {
        const SimplicialComplex cx = oracle::random_simplicial_complex(rng);
        const CombinatorialComplex ccc = simplicial_to_combinatorial(cx);
        for (int k = 1; k <= cx.dimension(); ++k) {
            const auto a = oracle::to_dense(incidence_matrix(cx, k, false));
            const auto b = oracle::to_dense(incidence_matrix(ccc, k, false));
            REQUIRE(a == b);
        }
    }
    const CellComplex2D glued = fixtures::square_triangle_complex();
    const CombinatorialComplex ccc = cell_to_combinatorial(glued);
    for (int k = 1; k <= 2; ++k) {
        const auto a = oracle::to_dense(incidence_matrix(glued, k, false));
        const auto b = oracle::to_dense(incidence_matrix(ccc, k, false));
        REQUIRE(a == b);
    }
}

TEST_CASE("one triangle ingests as the filled triangle") {
    const SimplicialComplex cx = mesh_to_simplicial({{0, 1, 2}});
    REQUIRE(cx.num_cells() == 7);
    REQUIRE(cx.dimension() == 2);
}

TEST_CASE("two triangles sharing an edge as a cell complex") {
    const CellComplex2D cx = mesh_to_cell({{0, 1, 2}, {1, 2, 3}});
    REQUIRE(cx.num_cells(0) == 4);
    REQUIRE(cx.num_cells(1) == 5);
    REQUIRE(cx.num_cells(2) == 2);
}

TEST_CASE("degenerate triangles are rejected") {
    REQUIRE_THROWS_AS(mesh_to_simplicial({{0, 0, 1}}), InvalidCell);
    REQUIRE_THROWS_AS(mesh_to_cell({{2, 2, 2}}), InvalidCell);
}

TEST_CASE("grid meshes are connected and have the right size") {
    const int n = 4;
    const auto triangles = fixtures::grid_mesh(n);
    REQUIRE(triangles.size() == static_cast<std::size_t>(2 * n * n));
    const SimplicialComplex cx = mesh_to_simplicial(triangles);
    REQUIRE(cx.num_cells(0) == (n + 1) * (n + 1));
    REQUIRE(cx.num_cells(1) == 3 * n * n + 2 * n);
    REQUIRE(betti_numbers(cx, 0) == std::vector<std::int64_t>{1});
}

TEST_CASE("both mesh targets share the rank-0 Laplacian") {
    const auto triangles = fixtures::grid_mesh(3);
    const SparseMatrix simplicial = hodge_laplacian_matrix(mesh_to_simplicial(triangles), 0);
    const SparseMatrix cell = hodge_laplacian_matrix(mesh_to_cell(triangles), 0);
    REQUIRE(simplicial == cell);
    REQUIRE(simplicial.row_index() == cell.row_index());
}

TEST_CASE("mesh_to_complex dispatches on the target") {
    const AnyComplex a = mesh_to_complex({{0, 1, 2}}, MeshTarget::Simplicial);
    REQUIRE(std::holds_alternative<SimplicialComplex>(a));
    const AnyComplex b = mesh_to_complex({{0, 1, 2}}, MeshTarget::Cell);
    REQUIRE(std::holds_alternative<CellComplex2D>(b));
}
