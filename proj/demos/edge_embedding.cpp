// Embed the edges of a generated triangle mesh with random-walk skip-gram
// and with the spectral eigenmap, then print a few coordinates.

#include <cstdio>

#include "topo/cell2vec.hpp"
#include "topo/eigenmap.hpp"
#include "topo/fixtures.hpp"
#include "topo/transforms.hpp"

int main() {
    const topo::CellComplex2D mesh = topo::mesh_to_cell(topo::fixtures::grid_mesh(4));
    std::printf("mesh: %lld vertices, %lld edges, %lld cells\n",
                static_cast<long long>(mesh.num_cells(0)),
                static_cast<long long>(mesh.num_cells(1)),
                static_cast<long long>(mesh.num_cells(2)));

    topo::Cell2VecParams params;
    params.dim = 16;
    params.via_rank = 1; // edges adjacent through shared 2-cells would be via_rank = 2
    params.seed = 7;
    const topo::EmbeddingTable walks = topo::cell2vec(mesh, 0, params);

    const topo::EmbeddingTable spectral = topo::higher_order_laplacian_eigenmap(mesh, 1, 4);

    std::printf("cell2vec dim %lld over %lld vertices; eigenmap dim %lld over %lld edges\n",
                static_cast<long long>(walks.dim()), static_cast<long long>(walks.size()),
                static_cast<long long>(spectral.dim()), static_cast<long long>(spectral.size()));
    for (int i = 0; i < 3; ++i) {
        const topo::CellId& cell = spectral.cells()[static_cast<std::size_t>(i)];
        const auto vec = spectral.vector(cell);
        std::printf("edge %s ->", cell.to_string().c_str());
        for (double v : vec) std::printf(" %.4f", v);
        std::printf("\n");
    }
    return 0;
}
