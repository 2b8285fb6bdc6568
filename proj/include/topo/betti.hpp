#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/operators.hpp"

namespace topo {

namespace detail {

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
/// Entries stay integral throughout; intermediate products run in 128 bits
/// with an overflow guard that desk-scale boundary matrices never reach.
inline std::int64_t integer_rank(std::vector<std::vector<std::int64_t>> m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    constexpr std::int64_t limit = std::int64_t{1} << 62;

    std::size_t r = 0;
    std::int64_t prev = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const std::int64_t p = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::int64_t f = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                const __int128 num =
                    static_cast<__int128>(m[i][j]) * p - static_cast<__int128>(f) * m[r][j];
                const __int128 q = num / prev; // exact by the Bareiss identity
                if (q >= limit || q <= -limit) throw Error("integer overflow in exact rank");
                m[i][j] = static_cast<std::int64_t>(q);
            }
            m[i][c] = 0;
        }
        prev = p;
        ++r;
    }
    return static_cast<std::int64_t>(r);
}

/// Rounds a sparse incidence matrix to its exact integer entries.
inline std::vector<std::vector<std::int64_t>> to_integer_dense(const SparseMatrix& m) {
    std::vector<std::vector<std::int64_t>> d(
        static_cast<std::size_t>(m.nrows()),
        std::vector<std::int64_t>(static_cast<std::size_t>(m.ncols()), 0));
    for (const Triplet& t : m.entries())
        d[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] =
            static_cast<std::int64_t>(std::llround(t.value));
    return d;
}

} // namespace detail

/**
 * Betti numbers beta_0..beta_max_rank via exact integer elimination:
 * beta_k = n_k - rank(B_k) - rank(B_{k+1}), with rank(B_0) = 0 and the
 * boundary above the top rank empty.
 */
template <Complex C>
std::vector<std::int64_t> betti_numbers(const C& cx, int max_rank) {
    const int dim = cx.dimension();
    if (max_rank < 0 || max_rank > dim)
        throw UnsupportedRank("betti max_rank " + std::to_string(max_rank) + " outside 0.."
                              + std::to_string(dim));

    std::vector<std::int64_t> boundary_rank(static_cast<std::size_t>(max_rank) + 2, 0);
    for (int k = 1; k <= max_rank + 1; ++k) {
        if (k > dim) break; // B_k above the top rank is empty
        const SparseMatrix b = incidence_matrix(cx, k, C::oriented);
        boundary_rank[static_cast<std::size_t>(k)] = detail::integer_rank(detail::to_integer_dense(b));
    }

    std::vector<std::int64_t> betti;
    betti.reserve(static_cast<std::size_t>(max_rank) + 1);
    for (int k = 0; k <= max_rank; ++k) {
        const std::int64_t nk = cx.num_cells(k);
        const std::int64_t bk = nk - boundary_rank[static_cast<std::size_t>(k)]
                                - boundary_rank[static_cast<std::size_t>(k) + 1];
        betti.push_back(std::max<std::int64_t>(bk, 0));
    }
    return betti;
}

} // namespace topo
