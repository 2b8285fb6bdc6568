#pragma once

#include <vector>

#include "topo/transforms.hpp"

namespace topo::fixtures {

/// Three vertices, three edges, no filled face. beta = (1, 1).
inline SimplicialComplex hollow_triangle() {
    SimplicialComplex cx;
    cx.add_simplex({1, 2});
    cx.add_simplex({1, 3});
    cx.add_simplex({2, 3});
    return cx;
}

/// One 2-simplex and its closure. beta = (1, 0).
inline SimplicialComplex filled_triangle() {
    SimplicialComplex cx;
    cx.add_simplex({1, 2, 3});
    return cx;
}

/// All proper faces of the 3-simplex: a combinatorial 2-sphere,
/// beta = (1, 0, 1).
inline SimplicialComplex tetrahedron_boundary() {
    SimplicialComplex cx;
    cx.add_simplex({1, 2, 3});
    cx.add_simplex({1, 2, 4});
    cx.add_simplex({1, 3, 4});
    cx.add_simplex({2, 3, 4});
    return cx;
}

/// Two filled triangles with no shared vertices. beta = (2, 0).
inline SimplicialComplex two_disjoint_triangles() {
    SimplicialComplex cx;
    cx.add_simplex({1, 2, 3});
    cx.add_simplex({4, 5, 6});
    return cx;
}

/// 2-D cell complex with a square and a triangle glued along edge (1,2):
/// 5 vertices, 6 edges, 2 two-cells.
inline CellComplex2D square_triangle_complex() {
    CellComplex2D cx;
    cx.add_cell({1, 2, 3, 4}, 2);
    cx.add_cell({1, 2, 5}, 2);
    return cx;
}

/// Deterministic n-by-n grid triangulation: (n+1)^2 vertices, 2n^2
/// triangles, each unit square split along its (i,j)->(i+1,j+1) diagonal.
inline std::vector<Triangle> grid_mesh(int n) {
    std::vector<Triangle> triangles;
    triangles.reserve(static_cast<std::size_t>(2) * n * n);
    const auto id = [n](int i, int j) { return static_cast<VertexId>(i * (n + 1) + j); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const VertexId a = id(i, j), b = id(i, j + 1), c = id(i + 1, j), d = id(i + 1, j + 1);
            triangles.push_back({a, b, d});
            triangles.push_back({a, d, c});
        }
    }
    return triangles;
}

} // namespace topo::fixtures
