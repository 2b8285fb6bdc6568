// Build a small cell complex, assemble its Hodge Laplacians, and report
// spectra, Betti numbers and connected components.

#include <cstdio>

#include "topo/betti.hpp"
#include "topo/fixtures.hpp"
#include "topo/graph_algorithms.hpp"
#include "topo/spectral.hpp"

int main() {
    topo::CellComplex2D cx;
    cx.add_cell({1, 2, 3, 4}, 2);
    cx.add_cell({1, 2, 5}, 2);

    for (int rank = 0; rank <= cx.dimension(); ++rank) {
        const topo::SparseMatrix l = topo::hodge_laplacian_matrix(cx, rank);
        const int k = static_cast<int>(std::min<std::int64_t>(4, l.nrows()));
        const topo::Spectrum s = topo::eigsh_smallest(l, k);
        std::printf("L_%d (%lld x %lld), smallest eigenvalues:", rank,
                    static_cast<long long>(l.nrows()), static_cast<long long>(l.ncols()));
        for (double v : s.eigenvalues) std::printf(" %.6f", v);
        std::printf("\n");
    }

    const auto betti = topo::betti_numbers(cx, cx.dimension());
    std::printf("betti:");
    for (auto b : betti) std::printf(" %lld", static_cast<long long>(b));
    std::printf("\n");

    const auto components = topo::connected_components(cx, 0);
    std::printf("components at rank 0: %zu\n", components.size());
    return 0;
}
