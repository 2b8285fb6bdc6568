#pragma once

// Test-side oracles, independent of the library's matrix builders: dense
// boundary matrices assembled from first principles, naive dense products,
// and deterministic random complex generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "topo/complex.hpp"
#include "topo/rng.hpp"
#include "topo/sparse.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense zeros(std::size_t rows, std::size_t cols) {
    return Dense(rows, std::vector<double>(cols, 0.0));
}

inline Dense to_dense(const topo::SparseMatrix& m) {
    Dense d = zeros(static_cast<std::size_t>(m.nrows()), static_cast<std::size_t>(m.ncols()));
    for (const topo::Triplet& t : m.entries())
        d[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] += t.value;
    return d;
}

inline Dense matmul(const Dense& a, const Dense& b) {
    const std::size_t n = a.size(), k = b.size(), m = k == 0 ? 0 : b[0].size();
    Dense c = zeros(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline Dense transpose(const Dense& a) {
    const std::size_t n = a.size(), m = n == 0 ? 0 : a[0].size();
    Dense t = zeros(m, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

inline double max_abs_diff(const Dense& a, const Dense& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
    return worst;
}

inline bool all_zero(const Dense& a) {
    for (const auto& row : a)
        for (double v : row)
            if (v != 0.0) return false;
    return true;
}

/// Signed simplicial boundary assembled directly from the skeleton lists:
/// face i of a simplex drops vertex i and carries (-1)^i. Row lookup is a
/// linear scan so this path shares nothing with the library builders.
inline Dense simplicial_boundary(const topo::SimplicialComplex& cx, int rank) {
    const auto rows = cx.skeleton(rank - 1);
    const auto cols = cx.skeleton(rank);
    Dense b = zeros(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto verts = cols[j].vertices();
        for (std::size_t drop = 0; drop < verts.size(); ++drop) {
            std::vector<topo::VertexId> face;
            for (std::size_t i = 0; i < verts.size(); ++i)
                if (i != drop) face.push_back(verts[i]);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const auto rv = rows[r].vertices();
                if (std::equal(rv.begin(), rv.end(), face.begin(), face.end()))
                    b[r][j] = drop % 2 == 0 ? 1.0 : -1.0;
            }
        }
    }
    return b;
}

/// Random closure-completed simplicial complex on at most `max_vertices`
/// vertices: a handful of random simplices, closure filled by add_simplex.
inline topo::SimplicialComplex random_simplicial_complex(topo::SplitMix64& rng,
                                                         int max_vertices = 8) {
    topo::SimplicialComplex cx;
    const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_vertices - 1)));
    const int additions = 2 + static_cast<int>(rng.next_below(6));
    for (int a = 0; a < additions; ++a) {
        const int size = 1 + static_cast<int>(rng.next_below(std::min(n, 4)));
        std::vector<topo::VertexId> pool(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
        std::vector<topo::VertexId> verts;
        for (int s = 0; s < size; ++s) {
            const auto pick = rng.next_below(pool.size());
            verts.push_back(pool[pick]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
        }
        cx.add_simplex(verts);
    }
    return cx;
}

/// Random connected-or-not graph as a hollow simplicial complex (edges only).
inline topo::SimplicialComplex random_graph_complex(topo::SplitMix64& rng, int max_vertices = 16) {
    topo::SimplicialComplex cx;
    const int n = 2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_vertices - 1)));
    for (int v = 1; v <= n; ++v) cx.add_simplex({v});
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if (rng.next_double() < 0.3) cx.add_simplex({a, b});
    return cx;
}

} // namespace oracle
