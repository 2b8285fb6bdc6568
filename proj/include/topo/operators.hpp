#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/sparse.hpp"

namespace topo {

namespace detail {

/// Unsigned incidence between two ranks: rows name skeleton(low_rank),
/// columns skeleton(high_rank), entry 1 where the row cell lies below the
/// column cell. Works for any rank gap.
template <Complex C>
SparseMatrix unsigned_incidence_between(const C& cx, int low_rank, int high_rank) {
    const auto rows = cx.skeleton(low_rank);
    const auto cols = cx.skeleton(high_rank);
    std::vector<Triplet> entries;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        cx.for_each_below(cols[j], low_rank, [&](const CellId& face) {
            const auto i = cx.index_of(face);
            if (!i) throw Error("closure invariant broken: face " + face.to_string() + " missing");
            entries.push_back({*i, static_cast<std::int64_t>(j), 1.0});
        });
    }
    return SparseMatrix::from_triplets(static_cast<std::int64_t>(rows.size()),
                                       static_cast<std::int64_t>(cols.size()), std::move(entries),
                                       {rows.begin(), rows.end()}, {cols.begin(), cols.end()});
}

/// Incidence with the domain's native signedness: signed boundary on
/// oriented domains, subset relation otherwise.
template <Complex C>
SparseMatrix native_incidence(const C& cx, int rank) {
    if constexpr (C::oriented) {
        const auto rows = cx.skeleton(rank - 1);
        const auto cols = cx.skeleton(rank);
        std::vector<Triplet> entries;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            for (const auto& [face, sign] : cx.boundary(cols[j])) {
                const auto i = cx.index_of(face);
                if (!i)
                    throw Error("closure invariant broken: face " + face.to_string() + " missing");
                entries.push_back({*i, static_cast<std::int64_t>(j), sign});
            }
        }
        return SparseMatrix::from_triplets(static_cast<std::int64_t>(rows.size()),
                                           static_cast<std::int64_t>(cols.size()),
                                           std::move(entries), {rows.begin(), rows.end()},
                                           {cols.begin(), cols.end()});
    } else {
        return unsigned_incidence_between(cx, rank - 1, rank);
    }
}

/// Keeps the off-diagonal support of a square matrix as 0/1 entries.
inline SparseMatrix offdiagonal_support(const SparseMatrix& m) {
    std::vector<Triplet> entries;
    for (const Triplet& t : m.entries())
        if (t.row != t.col) entries.push_back({t.row, t.col, 1.0});
    return SparseMatrix::from_triplets(m.nrows(), m.ncols(), std::move(entries), m.row_index(),
                                       m.col_index());
}

} // namespace detail

/**
 * Boundary matrix B_rank: rows name skeleton(rank-1), columns skeleton(rank).
 * Signed entries follow the orientation conventions of the domain (ascending
 * vertex order for simplices, canonical traversal for polygonal 2-cells);
 * unsigned entries are 1 where incident.
 */
template <Complex C>
SparseMatrix incidence_matrix(const C& cx, int rank, bool signed_entries) {
    if (rank < 1) throw UnsupportedRank("incidence requires rank >= 1, got " + std::to_string(rank));
    if (signed_entries) {
        if constexpr (!C::oriented)
            throw UnsupportedSignedIncidence("domain carries no orientation");
        else
            return detail::native_incidence(cx, rank);
    }
    return detail::unsigned_incidence_between(cx, rank - 1, rank);
}

/// L_rank^up = B_{rank+1} B_{rank+1}^T. Zero matrix at the top rank, where
/// no higher cells exist.
template <Complex C>
SparseMatrix up_laplacian_matrix(const C& cx, int rank) {
    if (rank < 0 || rank > cx.dimension())
        throw UnsupportedRank("up Laplacian rank " + std::to_string(rank)
                              + " outside 0.." + std::to_string(cx.dimension()));
    const SparseMatrix b = detail::native_incidence(cx, rank + 1);
    return multiply(b, b.transposed());
}

/// L_rank^down = B_rank^T B_rank.
template <Complex C>
SparseMatrix down_laplacian_matrix(const C& cx, int rank) {
    if (rank < 1 || rank > cx.dimension())
        throw UnsupportedRank("down Laplacian rank " + std::to_string(rank)
                              + " outside 1.." + std::to_string(cx.dimension()));
    const SparseMatrix b = detail::native_incidence(cx, rank);
    return multiply(b.transposed(), b);
}

/// Hodge Laplacian L_rank = B_rank^T B_rank + B_{rank+1} B_{rank+1}^T with
/// the down term omitted at rank 0.
template <Complex C>
SparseMatrix hodge_laplacian_matrix(const C& cx, int rank) {
    if (rank < 0 || rank > cx.dimension())
        throw UnsupportedRank("Hodge Laplacian rank " + std::to_string(rank)
                              + " outside 0.." + std::to_string(cx.dimension()));
    SparseMatrix up = up_laplacian_matrix(cx, rank);
    if (rank == 0) return up;
    return add(down_laplacian_matrix(cx, rank), up);
}

/// Binary symmetric zero-diagonal matrix: A[x,y] = 1 iff distinct rank-cells
/// x, y share a cell at via_rank above them (default rank+1).
template <Complex C>
SparseMatrix adjacency_matrix(const C& cx, int rank, std::optional<int> via_rank = {}) {
    const int via = via_rank.value_or(rank + 1);
    if (via <= rank)
        throw InvalidNeighborhood("adjacency needs via_rank > rank, got via " + std::to_string(via)
                                  + " at rank " + std::to_string(rank));
    const SparseMatrix u = detail::unsigned_incidence_between(cx, rank, via);
    return detail::offdiagonal_support(multiply(u, u.transposed()));
}

/// Dual of adjacency_matrix: shared cells at via_rank below (default rank-1).
template <Complex C>
SparseMatrix coadjacency_matrix(const C& cx, int rank, std::optional<int> via_rank = {}) {
    const int via = via_rank.value_or(rank - 1);
    if (via >= rank || via < 0)
        throw InvalidNeighborhood("coadjacency needs 0 <= via_rank < rank, got via "
                                  + std::to_string(via) + " at rank " + std::to_string(rank));
    const SparseMatrix u = detail::unsigned_incidence_between(cx, via, rank);
    return detail::offdiagonal_support(multiply(u.transposed(), u));
}

/// Picks adjacency or coadjacency depending on which side of rank the via
/// rank falls, defaulting to adjacency through rank+1.
template <Complex C>
SparseMatrix neighborhood_matrix(const C& cx, int rank, std::optional<int> via_rank = {}) {
    const int via = via_rank.value_or(rank + 1);
    return via > rank ? adjacency_matrix(cx, rank, via) : coadjacency_matrix(cx, rank, via);
}

/// Symmetric normalization D^{-1/2} L D^{-1/2} of the Hodge Laplacian with
/// D = diag(L); rows with zero diagonal stay identically zero.
template <Complex C>
SparseMatrix normalized_laplacian(const C& cx, int rank) {
    const SparseMatrix l = hodge_laplacian_matrix(cx, rank);
    const std::vector<double> d = l.diagonal();
    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(l.nnz()));
    for (const Triplet& t : l.entries()) {
        const double dr = d[static_cast<std::size_t>(t.row)];
        const double dc = d[static_cast<std::size_t>(t.col)];
        if (dr <= 0.0 || dc <= 0.0) continue; // zero-diagonal rows stay zero
        entries.push_back({t.row, t.col, t.value / std::sqrt(dr * dc)});
    }
    return SparseMatrix::from_triplets(l.nrows(), l.ncols(), std::move(entries), l.row_index(),
                                       l.col_index());
}

} // namespace topo
