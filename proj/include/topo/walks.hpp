#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "topo/complex.hpp"
#include "topo/operators.hpp"
#include "topo/rng.hpp"

namespace topo {

enum class NeighborhoodKind { Adjacency, Coadjacency };

struct WalkParams {
    int walk_number = 10;
    int walk_length = 20;
    std::uint64_t seed = 0;
};

/// Corpus of uniform random walks over one skeleton. Consecutive cells of a
/// walk are neighbors under the generating matrix; a walk stops early only
/// at an isolated cell.
struct WalkCorpus {
    std::vector<std::vector<CellId>> walks;
    WalkParams params;
};

namespace detail {

template <Complex C>
SparseMatrix neighborhood_for(const C& cx, int rank, NeighborhoodKind kind,
                              std::optional<int> via_rank) {
    if (kind == NeighborhoodKind::Adjacency)
        return adjacency_matrix(cx, rank, via_rank.value_or(rank + 1));
    return coadjacency_matrix(cx, rank, via_rank.value_or(rank - 1));
}

} // namespace detail

/**
 * walk_number uniform walks of at most walk_length cells from every cell of
 * the rank. Walk (cell c, replicate r) draws from the substream
 * hash(seed, index(c), r), so the corpus is independent of evaluation order
 * and reproducible for a fixed seed.
 */
template <Complex C>
WalkCorpus random_walks(const C& cx, int rank, NeighborhoodKind kind, std::optional<int> via_rank,
                        int walk_number, int walk_length, std::uint64_t seed) {
    if (walk_number < 1 || walk_length < 1)
        throw InvalidDim("walk_number and walk_length must be >= 1");
    const auto cells = cx.skeleton(rank);
    const CsrMatrix adj(detail::neighborhood_for(cx, rank, kind, via_rank));

    WalkCorpus corpus;
    corpus.params = {walk_number, walk_length, seed};
    corpus.walks.reserve(cells.size() * static_cast<std::size_t>(walk_number));
    for (std::size_t start = 0; start < cells.size(); ++start) {
        for (int rep = 0; rep < walk_number; ++rep) {
            SplitMix64 rng(substream_seed(seed, start, static_cast<std::uint64_t>(rep)));
            std::vector<CellId> walk;
            walk.reserve(static_cast<std::size_t>(walk_length));
            std::int64_t here = static_cast<std::int64_t>(start);
            walk.push_back(cells[start]);
            for (int step = 1; step < walk_length; ++step) {
                const std::int64_t begin = adj.row_ptr[static_cast<std::size_t>(here)];
                const std::int64_t end = adj.row_ptr[static_cast<std::size_t>(here) + 1];
                const std::int64_t degree = end - begin;
                if (degree == 0) break; // isolated cell: the walk stops
                here = adj.col[static_cast<std::size_t>(
                    begin + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(degree))))];
                walk.push_back(cells[static_cast<std::size_t>(here)]);
            }
            corpus.walks.push_back(std::move(walk));
        }
    }
    return corpus;
}

} // namespace topo
