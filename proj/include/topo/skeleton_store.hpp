#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "topo/cell.hpp"

namespace topo::detail {

/// Per-rank, insertion-ordered cell storage shared by every domain class.
/// The index of a cell within its rank is assigned on first insertion and
/// never changes; all matrix builders key their rows and columns off it.
class SkeletonStore {
public:
    std::span<const CellId> skeleton(int rank) const {
        if (rank < 0 || static_cast<std::size_t>(rank) >= ranks_.size()) return {};
        return ranks_[static_cast<std::size_t>(rank)];
    }

    bool contains(const CellId& cell) const { return index_.count(cell) > 0; }

    std::optional<std::int64_t> index_of(const CellId& cell) const {
        auto it = index_.find(cell);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Appends the cell to its rank if absent; returns its stable index.
    std::int64_t insert(CellId cell) {
        auto it = index_.find(cell);
        if (it != index_.end()) return it->second;
        const auto rank = static_cast<std::size_t>(cell.rank());
        if (ranks_.size() <= rank) ranks_.resize(rank + 1);
        const auto idx = static_cast<std::int64_t>(ranks_[rank].size());
        index_.emplace(cell, idx);
        ranks_[rank].push_back(std::move(cell));
        return idx;
    }

    /// Highest rank holding at least one cell; -1 when empty.
    int dimension() const {
        for (auto r = static_cast<std::int64_t>(ranks_.size()) - 1; r >= 0; --r)
            if (!ranks_[static_cast<std::size_t>(r)].empty()) return static_cast<int>(r);
        return -1;
    }

    std::int64_t size() const { return static_cast<std::int64_t>(index_.size()); }

    std::int64_t size(int rank) const {
        return static_cast<std::int64_t>(skeleton(rank).size());
    }

private:
    std::vector<std::vector<CellId>> ranks_;
    std::unordered_map<CellId, std::int64_t, CellIdHash> index_;
};

/// Calls f(combination) for every k-subset of the sorted span, in
/// lexicographic order.
template <typename F>
void for_each_combination(std::span<const VertexId> items, std::size_t k, F&& f) {
    const std::size_t n = items.size();
    if (k == 0 || k > n) return;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    std::vector<VertexId> combo(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) combo[i] = items[pick[i]];
        f(combo);
        std::size_t i = k;
        while (i-- > 0) {
            if (pick[i] != i + n - k) {
                ++pick[i];
                for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
                break;
            }
            if (i == 0) return;
        }
    }
}

} // namespace topo::detail
