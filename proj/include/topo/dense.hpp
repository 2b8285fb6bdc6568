#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "topo/errors.hpp"
#include "topo/sparse.hpp"

namespace topo {

namespace detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double nrm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

} // namespace detail

/// Row-major dense real matrix. Small: used for layer weights, eigenvector
/// blocks, and the dense oracle path of the eigensolver.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::int64_t rows, std::int64_t cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {}

    static DenseMatrix identity(std::int64_t n) {
        DenseMatrix m(n, n);
        for (std::int64_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }

    double& operator()(std::int64_t r, std::int64_t c) {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }
    double operator()(std::int64_t r, std::int64_t c) const {
        return data_[static_cast<std::size_t>(r * cols_ + c)];
    }

    std::span<double> row(std::int64_t r) {
        return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
    }
    std::span<const double> row(std::int64_t r) const {
        return {data_.data() + r * cols_, static_cast<std::size_t>(cols_)};
    }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::int64_t i = 0; i < rows_; ++i)
            for (std::int64_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("dense product shape mismatch");
        DenseMatrix c(a.rows_, b.cols_);
        for (std::int64_t i = 0; i < a.rows_; ++i)
            for (std::int64_t k = 0; k < a.cols_; ++k) {
                const double av = a(i, k);
                if (av == 0.0) continue;
                for (std::int64_t j = 0; j < b.cols_; ++j) c(i, j) += av * b(k, j);
            }
        return c;
    }

    friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("dense sum shape mismatch");
        DenseMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
        return c;
    }

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("dense diff shape mismatch");
        DenseMatrix c = a;
        for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
        return c;
    }

    DenseMatrix scaled(double s) const {
        DenseMatrix c = *this;
        for (double& v : c.data_) v *= s;
        return c;
    }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::int64_t rows_ = 0;
    std::int64_t cols_ = 0;
    std::vector<double> data_;
};

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    return (a - b).max_abs();
}

inline DenseMatrix to_dense(const SparseMatrix& m) {
    DenseMatrix d(m.nrows(), m.ncols());
    for (const Triplet& t : m.entries()) d(t.row, t.col) += t.value;
    return d;
}

/// Sparse-by-dense product, the workhorse of message passing layers.
inline DenseMatrix multiply(const SparseMatrix& a, const DenseMatrix& b) {
    if (a.ncols() != b.rows()) throw ShapeError("sparse-by-dense product shape mismatch");
    DenseMatrix c(a.nrows(), b.cols());
    for (const Triplet& t : a.entries()) {
        const auto src = b.row(t.col);
        auto dst = c.row(t.row);
        for (std::size_t j = 0; j < src.size(); ++j) dst[j] += t.value * src[j];
    }
    return c;
}

struct SymmetricEigen {
    std::vector<double> values; ///< ascending
    DenseMatrix vectors;        ///< orthonormal columns aligned to values
};

/**
 * Cyclic Jacobi eigendecomposition of a symmetric matrix. Deterministic:
 * fixed sweep order, threshold convergence, ascending eigenvalue sort with
 * stable tie order. Intended for the dense oracle path (n <= a few hundred).
 */
inline SymmetricEigen jacobi_eigendecomposition(DenseMatrix a) {
    if (a.rows() != a.cols()) throw NotSymmetric("jacobi needs a square matrix");
    const std::int64_t n = a.rows();
    DenseMatrix v = DenseMatrix::identity(n);
    if (n == 0) return {{}, v};

    double scale = 0.0;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
    if (scale == 0.0) scale = 1.0;
    const double tol = 1e-15 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::int64_t p = 0; p < n; ++p)
            for (std::int64_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off <= tol) break;
        for (std::int64_t p = 0; p < n; ++p) {
            for (std::int64_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) <= tol) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::int64_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::int64_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (std::int64_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int64_t i, std::int64_t j) { return a(i, i) < a(j, j); });

    SymmetricEigen out;
    out.values.reserve(static_cast<std::size_t>(n));
    out.vectors = DenseMatrix(n, n);
    for (std::int64_t j = 0; j < n; ++j) {
        out.values.push_back(a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]));
        for (std::int64_t i = 0; i < n; ++i)
            out.vectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
    }
    return out;
}

} // namespace topo
