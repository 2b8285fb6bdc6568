#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "topo/cell.hpp"
#include "topo/dense.hpp"

namespace topo {

/// Map from cells to fixed-dimension real vectors. Rows are stored in
/// skeleton order so serialization is deterministic.
class EmbeddingTable {
public:
    EmbeddingTable() = default;

    EmbeddingTable(std::vector<CellId> cells, DenseMatrix data)
        : cells_(std::move(cells)), data_(std::move(data)) {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            index_.emplace(cells_[i], static_cast<std::int64_t>(i));
    }

    std::int64_t dim() const { return data_.cols(); }
    std::int64_t size() const { return static_cast<std::int64_t>(cells_.size()); }
    const std::vector<CellId>& cells() const { return cells_; }
    const DenseMatrix& data() const { return data_; }

    bool contains(const CellId& cell) const { return index_.count(cell) > 0; }

    std::span<const double> vector(const CellId& cell) const {
        auto it = index_.find(cell);
        if (it == index_.end()) throw NotFound("no embedding for cell " + cell.to_string());
        return data_.row(it->second);
    }

    friend bool operator==(const EmbeddingTable& a, const EmbeddingTable& b) {
        return a.cells_ == b.cells_ && a.data_ == b.data_;
    }

private:
    std::vector<CellId> cells_;
    DenseMatrix data_;
    std::unordered_map<CellId, std::int64_t, CellIdHash> index_;
};

/// Cosine similarity between two vectors; zero vectors are orthogonal to
/// everything by convention.
inline double cosine_similarity(std::span<const double> a, std::span<const double> b) {
    double num = 0.0, na = 0.0, nb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += a[i] * b[i];
        na += a[i] * a[i];
        nb += b[i] * b[i];
    }
    if (na == 0.0 || nb == 0.0) return 0.0;
    return num / std::sqrt(na * nb);
}

} // namespace topo
