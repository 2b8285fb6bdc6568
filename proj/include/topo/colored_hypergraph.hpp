#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topo/cell.hpp"
#include "topo/skeleton_store.hpp"

namespace topo {

/**
 * Hypergraph whose hyperedges carry a color, treated as a rank label >= 1
 * for matrix indexing. There is no closure requirement; the same vertex set
 * may appear under several colors. Nodes referenced by a hyperedge are
 * inserted automatically.
 */
class ColoredHyperGraph {
public:
    static constexpr bool oriented = false;

    void add_node(VertexId v) { cells_.insert(node_id(v)); }

    void add_hyperedge(std::vector<VertexId> vertices, int color) {
        if (color < 1)
            throw UnsupportedRank("hyperedge color must be >= 1, got " + std::to_string(color));
        CellId edge = CellId::hyperedge(std::move(vertices), color);
        if (cells_.contains(edge)) return;
        for (VertexId v : edge.vertices()) add_node(v);
        cells_.insert(std::move(edge));
    }

    void add_hyperedge(std::initializer_list<VertexId> vertices, int color) {
        add_hyperedge(std::vector<VertexId>(vertices), color);
    }

    int dimension() const { return cells_.dimension(); }
    std::span<const CellId> skeleton(int rank) const { return cells_.skeleton(rank); }
    bool has_cell(const CellId& cell) const { return cells_.contains(cell); }
    std::optional<std::int64_t> index_of(const CellId& cell) const { return cells_.index_of(cell); }
    std::int64_t num_cells() const { return cells_.size(); }
    std::int64_t num_cells(int rank) const { return cells_.size(rank); }

    std::vector<CellId> faces(const CellId& cell) const {
        require_present(cell);
        std::vector<CellId> out;
        for (const CellId& c : cells_.skeleton(cell.rank() - 1))
            if (is_below(c, cell)) out.push_back(c);
        return out;
    }

    std::vector<CellId> cofaces(const CellId& cell) const {
        require_present(cell);
        std::vector<CellId> out;
        for (const CellId& c : cells_.skeleton(cell.rank() + 1))
            if (is_below(cell, c)) out.push_back(c);
        return out;
    }

    template <typename F>
    void for_each_below(const CellId& cell, int low_rank, F&& f) const {
        if (low_rank < 0 || low_rank >= cell.rank()) return;
        if (low_rank == 0) {
            for (VertexId v : cell.vertices()) f(node_id(v));
            return;
        }
        for (const CellId& c : cells_.skeleton(low_rank))
            if (is_below(c, cell)) f(c);
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
    static CellId node_id(VertexId v) { return CellId::hyperedge({v}, 0); }

    void require_present(const CellId& cell) const {
        if (!cells_.contains(cell))
            throw NotFound("cell " + cell.to_string() + " not in hypergraph");
    }

    detail::SkeletonStore cells_;
    AttributeMap attributes_;
    LabelTable labels_;
};

} // namespace topo
