#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "topo/embedding.hpp"
#include "topo/operators.hpp"
#include "topo/spectral.hpp"

namespace topo {

/**
 * Spectral eigenmap of one skeleton: coordinates are the eigenvectors of the
 * normalized Hodge Laplacian for the dim smallest eigenvalues after skipping
 * the first eigenvector. Each eigenvector is flipped so its
 * largest-magnitude entry is positive, which pins the sign freedom.
 */
template <Complex C>
EmbeddingTable higher_order_laplacian_eigenmap(const C& cx, int rank, int dim) {
    const auto cells = cx.skeleton(rank);
    const auto n = static_cast<std::int64_t>(cells.size());
    if (n == 0)
        throw EmptyDomain("eigenmap needs a non-empty skeleton at rank " + std::to_string(rank));
    if (dim < 1 || dim > n - 1)
        throw InvalidDim("eigenmap dimension must be in 1..|skeleton|-1, got "
                         + std::to_string(dim) + " for skeleton size " + std::to_string(n));

    const SparseMatrix l = normalized_laplacian(cx, rank);
    const Spectrum spectrum = eigsh_smallest(l, dim + 1);
    const DenseMatrix& vecs = *spectrum.eigenvectors;

    DenseMatrix coords(n, dim);
    for (std::int64_t j = 1; j <= dim; ++j) {
        // Pivot on the largest-magnitude entry; near-ties fall back to the
        // canonical cell order so relabeling cannot move the pivot.
        double max_mag = 0.0;
        for (std::int64_t i = 0; i < n; ++i) max_mag = std::max(max_mag, std::abs(vecs(i, j)));
        const double tie = 1e-9 * std::max(max_mag, 1.0);
        std::int64_t pivot = -1;
        for (std::int64_t i = 0; i < n; ++i) {
            if (std::abs(vecs(i, j)) < max_mag - tie) continue;
            if (pivot < 0
                || cells[static_cast<std::size_t>(i)] < cells[static_cast<std::size_t>(pivot)])
                pivot = i;
        }
        const double flip = vecs(pivot, j) < 0.0 ? -1.0 : 1.0;
        for (std::int64_t i = 0; i < n; ++i) coords(i, j - 1) = flip * vecs(i, j);
    }
    return EmbeddingTable({cells.begin(), cells.end()}, std::move(coords));
}

} // namespace topo
