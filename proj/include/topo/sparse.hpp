#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "topo/cell.hpp"
#include "topo/errors.hpp"

namespace topo {

struct Triplet {
    std::int64_t row = 0;
    std::int64_t col = 0;
    double value = 0.0;
};

/**
 * Real sparse matrix in finalized triplet form, carrying the cell lists that
 * name its rows and columns. Entries are kept sorted row-major with
 * duplicates summed and exact zeros dropped, so structural equality of two
 * matrices is equality of their entry vectors.
 */
class SparseMatrix {
public:
    SparseMatrix() = default;

    /// Sums duplicate (row, col) contributions and drops entries that cancel
    /// to exactly zero. Index vectors may be empty for anonymous matrices.
    static SparseMatrix from_triplets(std::int64_t nrows, std::int64_t ncols,
                                      std::vector<Triplet> entries,
                                      std::vector<CellId> row_index = {},
                                      std::vector<CellId> col_index = {}) {
        SparseMatrix m;
        m.nrows_ = nrows;
        m.ncols_ = ncols;
        m.row_index_ = std::move(row_index);
        m.col_index_ = std::move(col_index);
        for (const Triplet& t : entries)
            if (t.row < 0 || t.row >= nrows || t.col < 0 || t.col >= ncols)
                throw Error("triplet index out of bounds");
        std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        m.entries_.reserve(entries.size());
        for (const Triplet& t : entries) {
            if (!m.entries_.empty() && m.entries_.back().row == t.row
                && m.entries_.back().col == t.col) {
                m.entries_.back().value += t.value;
                if (m.entries_.back().value == 0.0) m.entries_.pop_back();
            } else if (t.value != 0.0) {
                m.entries_.push_back(t);
            }
        }
        return m;
    }

    std::int64_t nrows() const { return nrows_; }
    std::int64_t ncols() const { return ncols_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(entries_.size()); }
    std::span<const Triplet> entries() const { return entries_; }
    const std::vector<CellId>& row_index() const { return row_index_; }
    const std::vector<CellId>& col_index() const { return col_index_; }

    /// Stored value at (row, col), zero when absent. Binary search.
    double value(std::int64_t row, std::int64_t col) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                                   [](const Triplet& t, const std::pair<std::int64_t, std::int64_t>& k) {
                                       return t.row != k.first ? t.row < k.first : t.col < k.second;
                                   });
        if (it != entries_.end() && it->row == row && it->col == col) return it->value;
        return 0.0;
    }

    SparseMatrix transposed() const {
        std::vector<Triplet> flipped;
        flipped.reserve(entries_.size());
        for (const Triplet& t : entries_) flipped.push_back({t.col, t.row, t.value});
        return from_triplets(ncols_, nrows_, std::move(flipped), col_index_, row_index_);
    }

    /// Matrix with every stored value replaced by its absolute value.
    SparseMatrix abs() const {
        SparseMatrix m = *this;
        for (Triplet& t : m.entries_) t.value = std::abs(t.value);
        return m;
    }

    std::vector<double> diagonal() const {
        std::vector<double> d(static_cast<std::size_t>(std::min(nrows_, ncols_)), 0.0);
        for (const Triplet& t : entries_)
            if (t.row == t.col) d[static_cast<std::size_t>(t.row)] = t.value;
        return d;
    }

    /// Max absolute row sum.
    double infinity_norm() const {
        std::vector<double> sums(static_cast<std::size_t>(nrows_), 0.0);
        for (const Triplet& t : entries_) sums[static_cast<std::size_t>(t.row)] += std::abs(t.value);
        double best = 0.0;
        for (double s : sums) best = std::max(best, s);
        return best;
    }

    bool is_symmetric() const {
        if (nrows_ != ncols_) return false;
        for (const Triplet& t : entries_)
            if (value(t.col, t.row) != t.value) return false;
        return true;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.nrows_ != b.nrows_ || a.ncols_ != b.ncols_) return false;
        if (a.entries_.size() != b.entries_.size()) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (a.entries_[i].row != b.entries_[i].row || a.entries_[i].col != b.entries_[i].col
                || a.entries_[i].value != b.entries_[i].value)
                return false;
        return true;
    }

    void set_row_index(std::vector<CellId> cells) { row_index_ = std::move(cells); }
    void set_col_index(std::vector<CellId> cells) { col_index_ = std::move(cells); }

private:
    std::int64_t nrows_ = 0;
    std::int64_t ncols_ = 0;
    std::vector<Triplet> entries_;
    std::vector<CellId> row_index_;
    std::vector<CellId> col_index_;
};

/// Compressed-row view of a SparseMatrix, for repeated products.
struct CsrMatrix {
    std::int64_t nrows = 0;
    std::int64_t ncols = 0;
    std::vector<std::int64_t> row_ptr;
    std::vector<std::int64_t> col;
    std::vector<double> val;

    explicit CsrMatrix(const SparseMatrix& m)
        : nrows(m.nrows()), ncols(m.ncols()), row_ptr(static_cast<std::size_t>(m.nrows()) + 1, 0) {
        col.reserve(m.entries().size());
        val.reserve(m.entries().size());
        for (const Triplet& t : m.entries()) ++row_ptr[static_cast<std::size_t>(t.row) + 1];
        for (std::size_t i = 1; i < row_ptr.size(); ++i) row_ptr[i] += row_ptr[i - 1];
        // entries are already row-major sorted
        for (const Triplet& t : m.entries()) {
            col.push_back(t.col);
            val.push_back(t.value);
        }
    }

    void matvec(std::span<const double> x, std::span<double> y) const {
        for (std::int64_t i = 0; i < nrows; ++i) {
            double acc = 0.0;
            for (std::int64_t k = row_ptr[static_cast<std::size_t>(i)];
                 k < row_ptr[static_cast<std::size_t>(i) + 1]; ++k)
                acc += val[static_cast<std::size_t>(k)]
                       * x[static_cast<std::size_t>(col[static_cast<std::size_t>(k)])];
            y[static_cast<std::size_t>(i)] = acc;
        }
    }
};

/// Gustavson row-by-row product. Row index of the result comes from `a`,
/// column index from `b`.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.ncols() != b.nrows())
        throw ShapeError("sparse product shape mismatch: " + std::to_string(a.nrows()) + "x"
                         + std::to_string(a.ncols()) + " times " + std::to_string(b.nrows()) + "x"
                         + std::to_string(b.ncols()));
    const CsrMatrix ca(a), cb(b);
    std::vector<Triplet> out;
    std::vector<double> acc(static_cast<std::size_t>(b.ncols()), 0.0);
    std::vector<std::int64_t> touched;
    for (std::int64_t i = 0; i < ca.nrows; ++i) {
        touched.clear();
        for (std::int64_t ka = ca.row_ptr[static_cast<std::size_t>(i)];
             ka < ca.row_ptr[static_cast<std::size_t>(i) + 1]; ++ka) {
            const std::int64_t j = ca.col[static_cast<std::size_t>(ka)];
            const double av = ca.val[static_cast<std::size_t>(ka)];
            for (std::int64_t kb = cb.row_ptr[static_cast<std::size_t>(j)];
                 kb < cb.row_ptr[static_cast<std::size_t>(j) + 1]; ++kb) {
                const std::int64_t c = cb.col[static_cast<std::size_t>(kb)];
                if (acc[static_cast<std::size_t>(c)] == 0.0) touched.push_back(c);
                acc[static_cast<std::size_t>(c)] += av * cb.val[static_cast<std::size_t>(kb)];
            }
        }
        std::sort(touched.begin(), touched.end());
        for (std::int64_t c : touched) {
            const double v = acc[static_cast<std::size_t>(c)];
            acc[static_cast<std::size_t>(c)] = 0.0;
            if (v != 0.0) out.push_back({i, c, v});
        }
    }
    return SparseMatrix::from_triplets(a.nrows(), b.ncols(), std::move(out), a.row_index(),
                                       b.col_index());
}

inline SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.nrows() != b.nrows() || a.ncols() != b.ncols())
        throw ShapeError("sparse sum shape mismatch");
    std::vector<Triplet> entries(a.entries().begin(), a.entries().end());
    entries.insert(entries.end(), b.entries().begin(), b.entries().end());
    return SparseMatrix::from_triplets(a.nrows(), a.ncols(), std::move(entries),
                                       a.row_index().empty() ? b.row_index() : a.row_index(),
                                       a.col_index().empty() ? b.col_index() : a.col_index());
}

} // namespace topo
