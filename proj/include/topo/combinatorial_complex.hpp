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

namespace detail {
struct VertexVecHash {
    std::size_t operator()(const std::vector<VertexId>& v) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (VertexId x : v)
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ULL
                 + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
} // namespace detail

/**
 * Combinatorial complex: a set system with an explicit rank function that is
 * monotone under inclusion. Every vertex of every cell is kept as a rank-0
 * singleton, and the rank function is single-valued: a vertex set carries
 * exactly one rank, singletons always rank 0.
 */
class CombinatorialComplex {
public:
    static constexpr bool oriented = false;

    /// Adds a cell of the given rank, auto-inserting missing rank-0
    /// singletons first. Throws RankViolation when the insertion would break
    /// rank monotonicity or assign a second rank to a known vertex set.
    void add_cell(std::vector<VertexId> vertices, int rank) {
        CellId cell = CellId::ccc(std::move(vertices), rank);
        if (cell.size() == 1 && rank != 0)
            throw InvalidCell("singleton combinatorial cells must have rank 0");
        if (cell.size() > 1 && rank == 0)
            throw InvalidCell("rank 0 is reserved for singletons");
        if (cells_.contains(cell)) return;

        const std::vector<VertexId> key(cell.vertices().begin(), cell.vertices().end());
        if (auto it = set_rank_.find(key); it != set_rank_.end())
            throw RankViolation("vertex set {" + cell.to_string() + "} already has rank "
                                + std::to_string(it->second));
        validate_monotonicity(cell);

        for (VertexId v : cell.vertices()) insert_singleton(v);
        for (VertexId v : cell.vertices()) by_vertex_[v].push_back(cell);
        set_rank_.emplace(key, rank);
        cells_.insert(std::move(cell));
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

    /// Subset relation restricted to the adjacent rank below.
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
            for (VertexId v : cell.vertices()) f(CellId::ccc({v}, 0));
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
    void insert_singleton(VertexId v) {
        CellId node = CellId::ccc({v}, 0);
        if (cells_.contains(node)) return;
        const std::vector<VertexId> key{v};
        by_vertex_[v].push_back(node);
        set_rank_.emplace(key, 0);
        cells_.insert(std::move(node));
    }

    /// Checks the new cell against every stored cell sharing a vertex:
    /// stored subsets must not out-rank it, stored supersets must not
    /// under-rank it.
    void validate_monotonicity(const CellId& cell) const {
        const auto verts = cell.vertices();
        auto it = by_vertex_.find(verts[0]);
        if (it != by_vertex_.end()) {
            for (const CellId& other : it->second) // supersets all contain verts[0]
                if (other.size() > cell.size() && vertices_subset(cell, other)
                    && other.rank() < cell.rank())
                    throw RankViolation("cell {" + cell.to_string() + "} rank "
                                        + std::to_string(cell.rank()) + " would out-rank superset {"
                                        + other.to_string() + "} rank "
                                        + std::to_string(other.rank()));
        }
        for (VertexId v : verts) {
            auto jt = by_vertex_.find(v);
            if (jt == by_vertex_.end()) continue;
            for (const CellId& other : jt->second)
                if (other.size() < cell.size() && vertices_subset(other, cell)
                    && other.rank() > cell.rank())
                    throw RankViolation("cell {" + cell.to_string() + "} rank "
                                        + std::to_string(cell.rank()) + " under-ranks subset {"
                                        + other.to_string() + "} rank "
                                        + std::to_string(other.rank()));
        }
    }

    void require_present(const CellId& cell) const {
        if (!cells_.contains(cell))
            throw NotFound("cell " + cell.to_string() + " not in complex");
    }

    detail::SkeletonStore cells_;
    std::unordered_map<VertexId, std::vector<CellId>> by_vertex_;
    std::unordered_map<std::vector<VertexId>, int, detail::VertexVecHash> set_rank_;
    AttributeMap attributes_;
    LabelTable labels_;
};

} // namespace topo
