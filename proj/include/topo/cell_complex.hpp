#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "topo/cell.hpp"
#include "topo/skeleton_store.hpp"

namespace topo {

/**
 * Regular cell complex of dimension at most 2: vertices, edges, and
 * polygonal 2-cells whose boundaries are edge cycles.
 *
 * Insertion auto-closes downwards: adding a 2-cell inserts its boundary
 * edges and vertices in traversal order of the canonical cycle. 2-cells are
 * deduplicated up to rotation and reflection of the cycle.
 */
class CellComplex2D {
public:
    static constexpr bool oriented = true;

    /// Adds a cell of the given rank. Rank 0 expects a single vertex,
    /// rank 1 an edge, rank 2 a simple cycle of length >= 3.
    void add_cell(std::vector<VertexId> vertices, int rank) {
        if (rank < 0 || rank > 2)
            throw UnsupportedRank("cell complex supports ranks 0..2, got " + std::to_string(rank));
        switch (rank) {
        case 0:
            if (vertices.size() != 1) throw InvalidCell("rank-0 cell must be a single vertex");
            insert_vertex(vertices[0]);
            return;
        case 1: {
            if (vertices.size() != 2) throw InvalidCell("rank-1 cell must have two vertices");
            CellId edge = CellId::edge(vertices[0], vertices[1]); // rejects duplicates
            insert_vertex(edge.vertices()[0]);
            insert_vertex(edge.vertices()[1]);
            insert_edge(std::move(edge));
            return;
        }
        default: {
            CellId cell = CellId::polygon(std::move(vertices));
            if (cells_.contains(cell)) return;
            for (VertexId v : cell.vertices()) insert_vertex(v);
            for (const auto& [edge, sign] : polygon_boundary(cell)) {
                (void)sign;
                insert_edge(edge);
                cofaces_[edge].push_back(cell);
            }
            cells_.insert(cell);
            return;
        }
        }
    }

    void add_cell(std::initializer_list<VertexId> vertices, int rank) {
        add_cell(std::vector<VertexId>(vertices), rank);
    }

    int dimension() const { return cells_.dimension(); }
    std::span<const CellId> skeleton(int rank) const { return cells_.skeleton(rank); }
    bool has_cell(const CellId& cell) const { return cells_.contains(cell); }
    std::optional<std::int64_t> index_of(const CellId& cell) const { return cells_.index_of(cell); }
    std::int64_t num_cells() const { return cells_.size(); }
    std::int64_t num_cells(int rank) const { return cells_.size(rank); }

    /// Faces of an edge are its endpoints; faces of a 2-cell are its
    /// boundary edges in canonical traversal order.
    std::vector<CellId> faces(const CellId& cell) const {
        require_present(cell);
        std::vector<CellId> out;
        if (cell.rank() == 1) {
            out.push_back(CellId::vertex(cell.vertices()[0]));
            out.push_back(CellId::vertex(cell.vertices()[1]));
        } else if (cell.rank() == 2) {
            for (const auto& [edge, sign] : polygon_boundary(cell)) {
                (void)sign;
                out.push_back(edge);
            }
        }
        return out;
    }

    /// Cofaces in insertion order of the containing cells.
    std::vector<CellId> cofaces(const CellId& cell) const {
        require_present(cell);
        auto it = cofaces_.find(cell);
        return it == cofaces_.end() ? std::vector<CellId>{} : it->second;
    }

    /// Signed immediate boundary. Edges are oriented from their smaller to
    /// their larger vertex; 2-cells follow their canonical traversal.
    std::vector<std::pair<CellId, double>> boundary(const CellId& cell) const {
        if (cell.rank() == 2) return polygon_boundary(cell);
        if (cell.rank() == 1)
            return {{CellId::vertex(cell.vertices()[0]), -1.0},
                    {CellId::vertex(cell.vertices()[1]), 1.0}};
        return {};
    }

    template <typename F>
    void for_each_below(const CellId& cell, int low_rank, F&& f) const {
        if (low_rank < 0 || low_rank >= cell.rank()) return;
        if (low_rank == cell.rank() - 1) {
            for (auto& face : faces(cell)) f(face);
        } else { // vertices of a 2-cell
            for (VertexId v : cell.vertices()) f(CellId::vertex(v));
        }
    }

    void set_attribute(const CellId& cell, std::string name, AttrValue value) {
        require_present(cell);
        attributes_[cell][std::move(name)] = std::move(value);
    }

    const AttrValue* attribute(const CellId& cell, const std::string& name) const {
        auto it = attributes_.find(cell);
        if (it == attributes_.end()) return nullptr;
        auto jt = it->second.find(name);
        return jt == it->second.end() ? nullptr : &jt->second;
    }

    const AttributeMap& attributes() const { return attributes_; }

    LabelTable& labels() { return labels_; }
    const LabelTable& labels() const { return labels_; }

private:
    void insert_vertex(VertexId v) {
        cells_.insert(CellId::vertex(v));
    }

    void insert_edge(CellId edge) {
        if (cells_.contains(edge)) return;
        cofaces_[CellId::vertex(edge.vertices()[0])].push_back(edge);
        cofaces_[CellId::vertex(edge.vertices()[1])].push_back(edge);
        cells_.insert(std::move(edge));
    }

    void require_present(const CellId& cell) const {
        if (!cells_.contains(cell))
            throw NotFound("cell " + cell.to_string() + " not in complex");
    }

    detail::SkeletonStore cells_;
    std::unordered_map<CellId, std::vector<CellId>, CellIdHash> cofaces_;
    AttributeMap attributes_;
    LabelTable labels_;
};

} // namespace topo
