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
 * Abstract simplicial complex over integer vertex labels.
 *
 * Downward closure is maintained on insertion: adding a simplex adds every
 * face it induces, smallest rank first, lexicographically within each rank.
 * Complexes are built single-threaded and are safe to share read-only
 * afterwards; there is no internal locking.
 */
class SimplicialComplex {
public:
    static constexpr bool oriented = true;

    /// Inserts the simplex spanned by `vertices` together with all of its
    /// faces. Re-adding an existing simplex is a no-op and leaves every
    /// per-rank index unchanged.
    void add_simplex(std::vector<VertexId> vertices) {
        CellId cell = CellId::simplex(std::move(vertices));
        if (cells_.contains(cell)) return;
        const auto verts = cell.vertices();
        for (std::size_t k = 1; k < verts.size(); ++k) {
            detail::for_each_combination(verts, k, [&](const std::vector<VertexId>& face) {
                cells_.insert(CellId::simplex(face));
            });
        }
        cells_.insert(std::move(cell));
    }

    void add_simplex(std::initializer_list<VertexId> vertices) {
        add_simplex(std::vector<VertexId>(vertices));
    }

    int dimension() const { return cells_.dimension(); }
    std::span<const CellId> skeleton(int rank) const { return cells_.skeleton(rank); }
    bool has_cell(const CellId& cell) const { return cells_.contains(cell); }
    std::optional<std::int64_t> index_of(const CellId& cell) const { return cells_.index_of(cell); }
    std::int64_t num_cells() const { return cells_.size(); }
    std::int64_t num_cells(int rank) const { return cells_.size(rank); }

    /// Immediate codimension-1 faces, in lexicographic order.
    std::vector<CellId> faces(const CellId& cell) const {
        require_present(cell);
        std::vector<CellId> out;
        if (cell.rank() == 0) return out;
        detail::for_each_combination(cell.vertices(), cell.size() - 1,
                                     [&](const std::vector<VertexId>& face) {
                                         out.push_back(CellId::simplex(face));
                                     });
        return out;
    }

    /// Immediate cofaces, in skeleton order of rank+1.
    std::vector<CellId> cofaces(const CellId& cell) const {
        require_present(cell);
        std::vector<CellId> out;
        for (const CellId& c : cells_.skeleton(cell.rank() + 1))
            if (is_below(cell, c)) out.push_back(c);
        return out;
    }

    /// Signed immediate boundary, face i with sign (-1)^i.
    std::vector<std::pair<CellId, double>> boundary(const CellId& cell) const {
        return simplex_boundary(cell);
    }

    /// Visits every stored cell of rank `low_rank` lying below `cell`.
    template <typename F>
    void for_each_below(const CellId& cell, int low_rank, F&& f) const {
        if (low_rank < 0 || low_rank >= cell.rank()) return;
        detail::for_each_combination(cell.vertices(), static_cast<std::size_t>(low_rank) + 1,
                                     [&](const std::vector<VertexId>& sub) {
                                         f(CellId::simplex(sub));
                                     });
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
    void require_present(const CellId& cell) const {
        if (!cells_.contains(cell))
            throw NotFound("simplex " + cell.to_string() + " not in complex");
    }

    detail::SkeletonStore cells_;
    AttributeMap attributes_;
    LabelTable labels_;
};

} // namespace topo
