#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "topo/complex.hpp"
#include "topo/operators.hpp"

namespace topo {

/**
 * Partition of skeleton(rank) into maximal sets connected under the
 * neighborhood graph at via_rank (adjacency above, coadjacency below;
 * default rank+1). Components come out ordered by their smallest member
 * index, members in skeleton order; isolated cells form singletons.
 */
template <Complex C>
std::vector<std::vector<CellId>> connected_components(const C& cx, int rank,
                                                      std::optional<int> via_rank = {}) {
    const auto cells = cx.skeleton(rank);
    const CsrMatrix adj(neighborhood_matrix(cx, rank, via_rank));
    std::vector<std::vector<CellId>> components;
    std::vector<bool> seen(cells.size(), false);
    std::deque<std::int64_t> queue;
    for (std::size_t seed = 0; seed < cells.size(); ++seed) {
        if (seen[seed]) continue;
        std::vector<std::int64_t> members;
        seen[seed] = true;
        queue.push_back(static_cast<std::int64_t>(seed));
        while (!queue.empty()) {
            const std::int64_t i = queue.front();
            queue.pop_front();
            members.push_back(i);
            for (std::int64_t k = adj.row_ptr[static_cast<std::size_t>(i)];
                 k < adj.row_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
                const auto j = static_cast<std::size_t>(adj.col[static_cast<std::size_t>(k)]);
                if (!seen[j]) {
                    seen[j] = true;
                    queue.push_back(static_cast<std::int64_t>(j));
                }
            }
        }
        std::sort(members.begin(), members.end());
        std::vector<CellId> comp;
        comp.reserve(members.size());
        for (std::int64_t i : members) comp.push_back(cells[static_cast<std::size_t>(i)]);
        components.push_back(std::move(comp));
    }
    return components;
}

/**
 * Length of the shortest path between two rank-cells in the neighborhood
 * graph; 0 when source equals target, nullopt when disconnected.
 */
template <Complex C>
std::optional<std::int64_t> hop_distance(const C& cx, int rank, std::optional<int> via_rank,
                                         const CellId& source, const CellId& target) {
    const auto src = cx.index_of(source);
    const auto dst = cx.index_of(target);
    if (!src || source.rank() != rank)
        throw NotFound("source cell " + source.to_string() + " not at rank " + std::to_string(rank));
    if (!dst || target.rank() != rank)
        throw NotFound("target cell " + target.to_string() + " not at rank " + std::to_string(rank));
    if (*src == *dst) return 0;

    const CsrMatrix adj(neighborhood_matrix(cx, rank, via_rank));
    std::vector<std::int64_t> dist(static_cast<std::size_t>(adj.nrows), -1);
    std::deque<std::int64_t> queue;
    dist[static_cast<std::size_t>(*src)] = 0;
    queue.push_back(*src);
    while (!queue.empty()) {
        const std::int64_t i = queue.front();
        queue.pop_front();
        for (std::int64_t k = adj.row_ptr[static_cast<std::size_t>(i)];
             k < adj.row_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
            const std::int64_t j = adj.col[static_cast<std::size_t>(k)];
            if (dist[static_cast<std::size_t>(j)] >= 0) continue;
            dist[static_cast<std::size_t>(j)] = dist[static_cast<std::size_t>(i)] + 1;
            if (j == *dst) return dist[static_cast<std::size_t>(j)];
            queue.push_back(j);
        }
    }
    return std::nullopt;
}

} // namespace topo
