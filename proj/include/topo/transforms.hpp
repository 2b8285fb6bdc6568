#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topo/complex.hpp"

namespace topo {

using Edge = std::pair<VertexId, VertexId>;
using Triangle = std::array<VertexId, 3>;

enum class MeshTarget { Simplicial, Cell };

namespace detail {

/// Bron-Kerbosch with pivoting over sorted neighbor lists. Reports maximal
/// cliques in a deterministic order (candidates scanned ascending).
class MaximalCliques {
public:
    MaximalCliques(std::vector<VertexId> vertices,
                   std::unordered_map<VertexId, std::vector<VertexId>> neighbors)
        : vertices_(std::move(vertices)), neighbors_(std::move(neighbors)) {}

    template <typename F>
    void enumerate(F&& report) {
        if (vertices_.empty()) return;
        std::vector<VertexId> r;
        expand(r, vertices_, {}, report);
    }

private:
    template <typename F>
    void expand(std::vector<VertexId>& r, std::vector<VertexId> p, std::vector<VertexId> x,
                F&& report) {
        if (p.empty() && x.empty()) {
            report(r);
            return;
        }
        const VertexId pivot = choose_pivot(p, x);
        const auto& pivot_nbrs = neighbors_.at(pivot);
        std::vector<VertexId> candidates;
        for (VertexId v : p)
            if (!std::binary_search(pivot_nbrs.begin(), pivot_nbrs.end(), v))
                candidates.push_back(v);
        for (VertexId v : candidates) {
            const auto& nbrs = neighbors_.at(v);
            r.push_back(v);
            expand(r, intersect(p, nbrs), intersect(x, nbrs), report);
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

    VertexId choose_pivot(const std::vector<VertexId>& p, const std::vector<VertexId>& x) const {
        VertexId best = p.empty() ? x.front() : p.front();
        std::size_t best_count = 0;
        bool first = true;
        for (const auto* side : {&p, &x}) {
            for (VertexId u : *side) {
                const std::size_t count = intersect(p, neighbors_.at(u)).size();
                if (first || count > best_count) {
                    best = u;
                    best_count = count;
                    first = false;
                }
            }
        }
        return best;
    }

    static std::vector<VertexId> intersect(const std::vector<VertexId>& a,
                                           const std::vector<VertexId>& b) {
        std::vector<VertexId> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    std::vector<VertexId> vertices_;
    std::unordered_map<VertexId, std::vector<VertexId>> neighbors_;
};

} // namespace detail

/**
 * Clique complex of a graph: the k-simplices (k <= max_rank) are exactly the
 * (k+1)-cliques. Maximal cliques come from Bron-Kerbosch; oversized ones are
 * truncated to their (max_rank+1)-subsets, with closure filling the rest.
 */
inline SimplicialComplex graph_to_clique_complex(const std::vector<Edge>& edges, int max_rank) {
    if (max_rank < 1)
        throw UnsupportedRank("clique lifting needs max_rank >= 1, got " + std::to_string(max_rank));
    std::unordered_map<VertexId, std::vector<VertexId>> neighbors;
    for (const auto& [a, b] : edges) {
        if (a == b) throw InvalidCell("self-loop edge " + std::to_string(a));
        neighbors[a].push_back(b);
        neighbors[b].push_back(a);
    }
    std::vector<VertexId> vertices;
    vertices.reserve(neighbors.size());
    for (auto& [v, nbrs] : neighbors) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        vertices.push_back(v);
    }
    std::sort(vertices.begin(), vertices.end());

    SimplicialComplex cx;
    for (VertexId v : vertices) cx.add_simplex({v});
    const std::size_t max_size = static_cast<std::size_t>(max_rank) + 1;
    detail::MaximalCliques bk(vertices, std::move(neighbors));
    bk.enumerate([&](std::vector<VertexId> clique) {
        std::sort(clique.begin(), clique.end());
        if (clique.size() <= max_size) {
            cx.add_simplex(clique);
        } else {
            detail::for_each_combination(std::span<const VertexId>(clique), max_size,
                                         [&](const std::vector<VertexId>& sub) {
                                             cx.add_simplex(sub);
                                         });
        }
    });
    return cx;
}

/// Forgets the simplicial structure into a combinatorial complex: every
/// k-simplex becomes a rank-k cell over the same vertex set.
inline CombinatorialComplex simplicial_to_combinatorial(const SimplicialComplex& cx) {
    CombinatorialComplex out;
    out.labels() = cx.labels();
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const CellId& cell : cx.skeleton(k))
            out.add_cell({cell.vertices().begin(), cell.vertices().end()}, k);
    return out;
}

/// Same forgetful map for a 2-D cell complex. A 2-cell keeps only its vertex
/// set, so its combinatorial faces are all stored edges inside that set; the
/// incidence matrices agree whenever no 2-cell has a stored chord edge.
inline CombinatorialComplex cell_to_combinatorial(const CellComplex2D& cx) {
    CombinatorialComplex out;
    out.labels() = cx.labels();
    for (int k = 0; k <= cx.dimension(); ++k)
        for (const CellId& cell : cx.skeleton(k))
            out.add_cell({cell.vertices().begin(), cell.vertices().end()}, k);
    return out;
}

inline SimplicialComplex mesh_to_simplicial(const std::vector<Triangle>& triangles) {
    SimplicialComplex cx;
    for (const Triangle& t : triangles) cx.add_simplex({t[0], t[1], t[2]});
    return cx;
}

inline CellComplex2D mesh_to_cell(const std::vector<Triangle>& triangles) {
    CellComplex2D cx;
    for (const Triangle& t : triangles) cx.add_cell({t[0], t[1], t[2]}, 2);
    return cx;
}

/// Ingests a triangle soup as either domain. Degenerate triples are rejected
/// by the underlying add operation.
inline AnyComplex mesh_to_complex(const std::vector<Triangle>& triangles, MeshTarget target) {
    if (target == MeshTarget::Simplicial) return mesh_to_simplicial(triangles);
    return mesh_to_cell(triangles);
}

} // namespace topo
