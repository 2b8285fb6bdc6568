#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "topo/betti.hpp"
#include "topo/fixtures.hpp"
#include "topo/graph_algorithms.hpp"
#include "topo/spectral.hpp"

using namespace topo;

TEST_CASE("smallest eigenvalues of the hollow triangle Laplacian are 0, 3, 3") {
    const SparseMatrix l0 = hodge_laplacian_matrix(fixtures::hollow_triangle(), 0);
    const Spectrum s = eigsh_smallest(l0, 3);
    REQUIRE_THAT(s.eigenvalues[0], Catch::Matchers::WithinAbs(0.0, 1e-8));
    REQUIRE_THAT(s.eigenvalues[1], Catch::Matchers::WithinAbs(3.0, 1e-8));
    REQUIRE_THAT(s.eigenvalues[2], Catch::Matchers::WithinAbs(3.0, 1e-8));
    REQUIRE(s.rank_index.size() == 3);
}

TEST_CASE("1x1 zero matrix has eigenvalue 0") {
    SimplicialComplex cx;
    cx.add_simplex({1});
    const Spectrum s = eigsh_smallest(hodge_laplacian_matrix(cx, 0), 1);
    REQUIRE(s.eigenvalues == std::vector<double>{0.0});
}

TEST_CASE("two disjoint triangles have a two-dimensional kernel") {
    const SparseMatrix l0 = hodge_laplacian_matrix(fixtures::two_disjoint_triangles(), 0);
    const Spectrum s = eigsh_smallest(l0, 2);
    REQUIRE_THAT(s.eigenvalues[0], Catch::Matchers::WithinAbs(0.0, 1e-8));
    REQUIRE_THAT(s.eigenvalues[1], Catch::Matchers::WithinAbs(0.0, 1e-8));
}

TEST_CASE("eigsh rejects bad inputs") {
    const SparseMatrix bad = SparseMatrix::from_triplets(2, 2, {{0, 1, 1.0}});
    REQUIRE_THROWS_AS(eigsh_smallest(bad, 1), NotSymmetric);
    const SparseMatrix ok = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}, {1, 1, 2.0}});
    REQUIRE_THROWS_AS(eigsh_smallest(ok, 0), InvalidDim);
    REQUIRE_THROWS_AS(eigsh_smallest(ok, 3), InvalidDim);
}

TEST_CASE("the iterative path matches the dense oracle") {
    SplitMix64 rng(0x88);
    EigshOptions iterative;
    iterative.force_iterative = true;
    for (int trial = 0; trial < 20; ++trial) {
        const SimplicialComplex cx = oracle::random_graph_complex(rng, 40);
        const SparseMatrix l0 = hodge_laplacian_matrix(cx, 0);
        const int k = std::min<int>(4, static_cast<int>(l0.nrows()));
        const Spectrum dense = eigsh_smallest(l0, k);
        const Spectrum lanczos = eigsh_smallest(l0, k, 1e-10, iterative);
        for (int i = 0; i < k; ++i)
            REQUIRE_THAT(lanczos.eigenvalues[static_cast<std::size_t>(i)],
                         Catch::Matchers::WithinAbs(dense.eigenvalues[static_cast<std::size_t>(i)],
                                                    1e-8));
    }
}

TEST_CASE("eigenpairs satisfy the residual contract") {
    SplitMix64 rng(0x99);
    EigshOptions iterative;
    iterative.force_iterative = true;
    const SimplicialComplex cx = oracle::random_graph_complex(rng, 30);
    const SparseMatrix l0 = hodge_laplacian_matrix(cx, 0);
    const double tol = 1e-10;
    const Spectrum s = eigsh_smallest(l0, 3, tol, iterative);
    const CsrMatrix a(l0);
    const double bound = tol * std::max(1.0, l0.infinity_norm());
    for (int j = 0; j < 3; ++j) {
        std::vector<double> v(static_cast<std::size_t>(l0.nrows()));
        for (std::int64_t i = 0; i < l0.nrows(); ++i) v[static_cast<std::size_t>(i)] = (*s.eigenvectors)(i, j);
        std::vector<double> mv(v.size());
        a.matvec(v, mv);
        detail::axpy(-s.eigenvalues[static_cast<std::size_t>(j)], v, mv);
        REQUIRE(detail::nrm2(mv) <= bound);
        REQUIRE_THAT(detail::nrm2(v), Catch::Matchers::WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("deflation recovers repeated eigenvalues across components") {
    // five disjoint triangles: eigenvalue 0 with multiplicity 5, then 3s
    SimplicialComplex cx;
    for (int b = 0; b < 5; ++b) {
        const auto v = static_cast<VertexId>(3 * b + 1);
        cx.add_simplex({v, v + 1, v + 2});
    }
    const SparseMatrix l0 = hodge_laplacian_matrix(cx, 0);
    EigshOptions iterative;
    iterative.force_iterative = true;
    const Spectrum s = eigsh_smallest(l0, 8, 1e-10, iterative);
    for (int i = 0; i < 5; ++i)
        REQUIRE_THAT(s.eigenvalues[static_cast<std::size_t>(i)],
                     Catch::Matchers::WithinAbs(0.0, 1e-8));
    for (int i = 5; i < 8; ++i)
        REQUIRE_THAT(s.eigenvalues[static_cast<std::size_t>(i)],
                     Catch::Matchers::WithinAbs(3.0, 1e-8));
    // returned eigenvectors are orthonormal
    for (int i = 0; i < 8; ++i) {
        for (int j = i; j < 8; ++j) {
            double dot = 0.0;
            for (std::int64_t r = 0; r < l0.nrows(); ++r)
                dot += (*s.eigenvectors)(r, i) * (*s.eigenvectors)(r, j);
            REQUIRE_THAT(dot, Catch::Matchers::WithinAbs(i == j ? 1.0 : 0.0, 1e-8));
        }
    }
}

TEST_CASE("an impossible tolerance reports NoConvergence with its residual") {
    SplitMix64 rng(0xAA);
    SimplicialComplex cx;
    for (int v = 1; v <= 100; ++v) cx.add_simplex({v});
    for (int v = 1; v < 100; ++v) cx.add_simplex({v, v + 1});
    for (int extra = 0; extra < 60; ++extra) {
        const auto a = static_cast<VertexId>(1 + rng.next_below(100));
        const auto b = static_cast<VertexId>(1 + rng.next_below(100));
        if (a != b) cx.add_simplex({std::min(a, b), std::max(a, b)});
    }
    const SparseMatrix l0 = hodge_laplacian_matrix(cx, 0);
    EigshOptions iterative;
    iterative.force_iterative = true;
    try {
        eigsh_smallest(l0, 1, 1e-30, iterative);
        FAIL("expected NoConvergence");
    } catch (const NoConvergence& e) {
        REQUIRE(e.achieved_residual > 0.0);
        REQUIRE(std::string(e.what()).find("residual") != std::string::npos);
    }
}

TEST_CASE("betti numbers of the standard fixtures") {
    REQUIRE(betti_numbers(fixtures::hollow_triangle(), 1) == std::vector<std::int64_t>{1, 1});
    REQUIRE(betti_numbers(fixtures::filled_triangle(), 2) == std::vector<std::int64_t>{1, 0, 0});
    REQUIRE(betti_numbers(fixtures::tetrahedron_boundary(), 2)
            == std::vector<std::int64_t>{1, 0, 1});
    REQUIRE(betti_numbers(fixtures::two_disjoint_triangles(), 1)
            == std::vector<std::int64_t>{2, 0});
    REQUIRE_THROWS_AS(betti_numbers(fixtures::filled_triangle(), 3), UnsupportedRank);
}

TEST_CASE("kernel dimension of every Hodge Laplacian equals the Betti number") {
    const auto check = [](const SimplicialComplex& cx) {
        const auto betti = betti_numbers(cx, cx.dimension());
        for (int k = 0; k <= cx.dimension(); ++k)
            REQUIRE(count_zero_eigenvalues(hodge_laplacian_matrix(cx, k))
                    == betti[static_cast<std::size_t>(k)]);
    };
    check(fixtures::hollow_triangle());
    check(fixtures::filled_triangle());
    check(fixtures::tetrahedron_boundary());
    check(fixtures::two_disjoint_triangles());

    SplitMix64 rng(0xBB);
    for (int trial = 0; trial < 20; ++trial) check(oracle::random_simplicial_complex(rng));
}

TEST_CASE("connected components of the fixtures") {
    const auto two = connected_components(fixtures::two_disjoint_triangles(), 0);
    REQUIRE(two.size() == 2);
    REQUIRE(two[0].size() == 3);
    REQUIRE(two[1].size() == 3);
    REQUIRE(two[0][0] == CellId::vertex(1));
    REQUIRE(two[1][0] == CellId::vertex(4));

    const auto edges = connected_components(fixtures::hollow_triangle(), 1, 0);
    REQUIRE(edges.size() == 1);
    REQUIRE(edges[0].size() == 3);

    SimplicialComplex isolated = fixtures::hollow_triangle();
    isolated.add_simplex({9});
    const auto parts = connected_components(isolated, 0);
    REQUIRE(parts.size() == 2);
    REQUIRE(parts[1] == std::vector<CellId>{CellId::vertex(9)});
}

TEST_CASE("hop distances on small graphs") {
    const SimplicialComplex tri = fixtures::hollow_triangle();
    REQUIRE(hop_distance(tri, 0, {}, CellId::vertex(1), CellId::vertex(3)) == 1);
    REQUIRE(hop_distance(tri, 0, {}, CellId::vertex(2), CellId::vertex(2)) == 0);

    SimplicialComplex path;
    path.add_simplex({1, 2});
    path.add_simplex({2, 3});
    path.add_simplex({3, 4});
    REQUIRE(hop_distance(path, 0, {}, CellId::vertex(1), CellId::vertex(4)) == 3);

    const SimplicialComplex two = fixtures::two_disjoint_triangles();
    REQUIRE(hop_distance(two, 0, {}, CellId::vertex(1), CellId::vertex(5)) == std::nullopt);
    REQUIRE_THROWS_AS(hop_distance(two, 0, {}, CellId::vertex(1), CellId::vertex(9)), NotFound);
}

TEST_CASE("hop distance is a metric on each component") {
    SplitMix64 rng(0xCC);
    for (int trial = 0; trial < 10; ++trial) {
        const SimplicialComplex cx = oracle::random_graph_complex(rng, 10);
        const auto vertices = cx.skeleton(0);
        const std::size_t n = vertices.size();
        std::vector<std::vector<std::optional<std::int64_t>>> d(
            n, std::vector<std::optional<std::int64_t>>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d[i][j] = hop_distance(cx, 0, {}, vertices[i], vertices[j]);
        for (std::size_t i = 0; i < n; ++i) {
            REQUIRE(d[i][i] == 0);
            for (std::size_t j = 0; j < n; ++j) {
                REQUIRE(d[i][j] == d[j][i]);
                if (!d[i][j]) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (d[i][k] && d[k][j]) REQUIRE(*d[i][j] <= *d[i][k] + *d[k][j]);
            }
        }
    }
}

TEST_CASE("zero eigenvalue multiplicity counts components") {
    SplitMix64 rng(0xDD);
    for (int trial = 0; trial < 25; ++trial) {
        const SimplicialComplex cx = oracle::random_simplicial_complex(rng);
        const auto components = connected_components(cx, 0);
        REQUIRE(count_zero_eigenvalues(hodge_laplacian_matrix(cx, 0))
                == static_cast<int>(components.size()));
    }
}
