#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

using VertexId = std::int32_t;

enum class CellKind : std::uint8_t {
    Simplex,       ///< vertex set, strictly ascending, rank = |V| - 1
    PolygonalCell, ///< 2-cell stored as a canonical cycle
    HyperEdge,     ///< hyperedge of a colored hypergraph, rank = color
    CCCell,        ///< cell of a combinatorial complex with an explicit rank
};

/**
 * Canonical identifier of a cell.
 *
 * A CellId is a value type: two cells are the same cell exactly when their
 * CellIds compare equal. Each kind has a canonical vertex ordering so that
 * equality is structural:
 *  - Simplex / HyperEdge / CCCell: vertices strictly ascending.
 *  - PolygonalCell: the cycle is rotated so the smallest vertex comes first,
 *    then reflected so the second entry is the smaller neighbor of the first.
 */
class CellId {
public:
    CellId() = default;

    static CellId simplex(std::vector<VertexId> vertices) {
        require_nonempty(vertices);
        std::sort(vertices.begin(), vertices.end());
        require_distinct_sorted(vertices);
        const int rank = static_cast<int>(vertices.size()) - 1;
        return CellId(CellKind::Simplex, rank, std::move(vertices));
    }

    static CellId vertex(VertexId v) { return simplex({v}); }

    static CellId edge(VertexId a, VertexId b) { return simplex({a, b}); }

    /// Canonicalizes a cycle of length >= 3 into a rank-2 polygonal cell.
    static CellId polygon(std::vector<VertexId> cycle) {
        if (cycle.size() < 3)
            throw InvalidCell("polygonal cell needs a cycle of length >= 3");
        {
            auto sorted = cycle;
            std::sort(sorted.begin(), sorted.end());
            require_distinct_sorted(sorted);
        }
        return CellId(CellKind::PolygonalCell, 2, canonical_cycle(std::move(cycle)));
    }

    static CellId hyperedge(std::vector<VertexId> vertices, int color) {
        require_nonempty(vertices);
        if (color < 0)
            throw UnsupportedRank("hyperedge color must be >= 0, got " + std::to_string(color));
        std::sort(vertices.begin(), vertices.end());
        require_distinct_sorted(vertices);
        return CellId(CellKind::HyperEdge, color, std::move(vertices));
    }

    static CellId ccc(std::vector<VertexId> vertices, int rank) {
        require_nonempty(vertices);
        if (rank < 0)
            throw UnsupportedRank("combinatorial cell rank must be >= 0, got " + std::to_string(rank));
        std::sort(vertices.begin(), vertices.end());
        require_distinct_sorted(vertices);
        return CellId(CellKind::CCCell, rank, std::move(vertices));
    }

    CellKind kind() const { return kind_; }
    int rank() const { return rank_; }
    std::span<const VertexId> vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// Comma-joined vertex labels, e.g. "1,2,3". Also the TSV cell key.
    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(vertices_[i]);
        }
        return s;
    }

    friend bool operator==(const CellId& a, const CellId& b) {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.vertices_ == b.vertices_;
    }

    friend bool operator<(const CellId& a, const CellId& b) {
        if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
        if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
        return a.vertices_ < b.vertices_;
    }

private:
    CellId(CellKind kind, int rank, std::vector<VertexId> vertices)
        : kind_(kind), rank_(rank), vertices_(std::move(vertices)) {}

    static void require_nonempty(const std::vector<VertexId>& v) {
        if (v.empty()) throw InvalidCell("cell needs at least one vertex");
    }

    static void require_distinct_sorted(const std::vector<VertexId>& v) {
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw InvalidCell("duplicate vertex in cell");
    }

    /// Rotates the smallest vertex to the front, then picks the traversal
    /// direction whose second vertex is smaller. All 2n rotations and
    /// reflections of a cycle map to the same result.
    static std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
        const std::size_t n = cycle.size();
        const std::size_t start = static_cast<std::size_t>(
            std::min_element(cycle.begin(), cycle.end()) - cycle.begin());
        std::vector<VertexId> forward(n), backward(n);
        for (std::size_t i = 0; i < n; ++i) {
            forward[i] = cycle[(start + i) % n];
            backward[i] = cycle[(start + n - i) % n];
        }
        return forward[1] <= backward[1] ? forward : backward;
    }

    CellKind kind_ = CellKind::Simplex;
    int rank_ = 0;
    std::vector<VertexId> vertices_;
};

struct CellIdHash {
    std::size_t operator()(const CellId& c) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ (static_cast<std::uint64_t>(c.kind()) << 32)
                          ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.rank()));
        for (VertexId v : c.vertices()) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) + 0x9e3779b97f4a7c15ULL
                 + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Signed boundary of a simplex: face i drops vertex i and carries sign (-1)^i.
inline std::vector<std::pair<CellId, double>> simplex_boundary(const CellId& cell) {
    const auto verts = cell.vertices();
    std::vector<std::pair<CellId, double>> out;
    if (verts.size() < 2) return out;
    out.reserve(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        std::vector<VertexId> face;
        face.reserve(verts.size() - 1);
        for (std::size_t j = 0; j < verts.size(); ++j)
            if (j != i) face.push_back(verts[j]);
        out.emplace_back(CellId::simplex(std::move(face)), i % 2 == 0 ? 1.0 : -1.0);
    }
    return out;
}

/// Signed boundary of a polygonal 2-cell. Each edge of the canonical
/// traversal carries +1 when traversed from its smaller to its larger
/// vertex and -1 otherwise, which makes B1 * B2 vanish identically.
inline std::vector<std::pair<CellId, double>> polygon_boundary(const CellId& cell) {
    const auto cyc = cell.vertices();
    const std::size_t n = cyc.size();
    std::vector<std::pair<CellId, double>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId a = cyc[i];
        const VertexId b = cyc[(i + 1) % n];
        out.emplace_back(CellId::edge(a, b), a < b ? 1.0 : -1.0);
    }
    return out;
}

/// Sorted-vector subset test on the vertex sets, ignoring ranks.
inline bool vertices_subset(const CellId& low, const CellId& high) {
    const auto lo = low.vertices();
    const auto hi = high.vertices();
    if (lo.size() > hi.size()) return false;
    std::size_t j = 0;
    for (VertexId v : lo) {
        while (j < hi.size() && hi[j] < v) ++j;
        if (j == hi.size() || hi[j] != v) return false;
        ++j;
    }
    return true;
}

/// Whether `low` is a face (of any codimension) of `high`, using the
/// containment relation of the respective domain: subset order for vertex-set
/// kinds, boundary membership for polygonal cells.
inline bool is_below(const CellId& low, const CellId& high) {
    if (low.rank() >= high.rank()) return false;
    if (high.kind() == CellKind::PolygonalCell) {
        const auto cyc = high.vertices();
        if (low.size() == 1)
            return std::find(cyc.begin(), cyc.end(), low.vertices()[0]) != cyc.end();
        if (low.size() == 2) {
            // An edge lies on the boundary iff its endpoints are cyclically adjacent.
            const std::size_t n = cyc.size();
            for (std::size_t i = 0; i < n; ++i) {
                const VertexId a = cyc[i], b = cyc[(i + 1) % n];
                if ((a == low.vertices()[0] && b == low.vertices()[1]) ||
                    (b == low.vertices()[0] && a == low.vertices()[1]))
                    return true;
            }
            return false;
        }
        return false;
    }
    return vertices_subset(low, high);
}

/// Interns string vertex labels to dense non-negative ids. Complexes store
/// plain integers; the table is only consulted when reading or writing
/// documents that use string labels.
class LabelTable {
public:
    bool empty() const { return names_.empty(); }

    VertexId intern(const std::string& name) {
        auto it = ids_.find(name);
        if (it != ids_.end()) return it->second;
        const VertexId id = static_cast<VertexId>(names_.size());
        ids_.emplace(name, id);
        names_.push_back(name);
        return id;
    }

    std::optional<std::string> name(VertexId id) const {
        if (id < 0 || static_cast<std::size_t>(id) >= names_.size()) return std::nullopt;
        return names_[static_cast<std::size_t>(id)];
    }

private:
    std::unordered_map<std::string, VertexId> ids_;
    std::vector<std::string> names_;
};

/// Flat scalar-or-vector attribute value.
using AttrValue = std::variant<double, std::vector<double>>;
using AttributeMap =
    std::unordered_map<CellId, std::unordered_map<std::string, AttrValue>, CellIdHash>;

} // namespace topo
