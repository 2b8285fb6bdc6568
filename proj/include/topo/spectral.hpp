#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <limits>
#include <string>
#include <vector>

#include "topo/dense.hpp"
#include "topo/rng.hpp"
#include "topo/sparse.hpp"

namespace topo {

/// Result of a symmetric eigensolve: ascending eigenvalues, optional
/// unit-norm eigenvector columns, and the cells naming the coordinates.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::optional<DenseMatrix> eigenvectors;
    std::vector<CellId> rank_index;
};

struct EigshOptions {
    bool force_iterative = false; ///< skip the dense fallback (used to cross-check the two paths)
    int dense_cutoff = 64;        ///< dense solve at or below this order
    std::uint64_t seed = 0x5EED;  ///< start-vector seed; fixed for reproducibility
};

namespace detail {

/**
 * Symmetric tridiagonal eigensolver (QL with implicit shifts). `diag` holds
 * the diagonal, `off` the n-1 subdiagonal entries. Returns ascending
 * eigenvalues; `vectors`, when non-null, receives the eigenvector columns in
 * the tridiagonal basis.
 */
inline std::vector<double> tridiagonal_eigen(std::vector<double> diag, std::vector<double> off,
                                             DenseMatrix* vectors) {
    const std::int64_t n = static_cast<std::int64_t>(diag.size());
    if (vectors) *vectors = DenseMatrix::identity(n);
    if (n == 0) return {};
    off.push_back(0.0);

    for (std::int64_t l = 0; l < n; ++l) {
        int iter = 0;
        std::int64_t m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(off[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 64) throw NoConvergence("tridiagonal QL stalled", std::abs(off[l]));
                double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
                double r = std::hypot(g, 1.0);
                g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                std::int64_t i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * off[i];
                    const double b = c * off[i];
                    r = std::hypot(f, g);
                    off[i + 1] = r;
                    if (r == 0.0) {
                        diag[i + 1] -= p;
                        off[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = diag[i + 1] - p;
                    r = (diag[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    diag[i + 1] = g + p;
                    g = c * r - b;
                    if (vectors) {
                        for (std::int64_t k = 0; k < n; ++k) {
                            f = (*vectors)(k, i + 1);
                            (*vectors)(k, i + 1) = s * (*vectors)(k, i) + c * f;
                            (*vectors)(k, i) = c * (*vectors)(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                diag[l] -= p;
                off[l] = g;
                off[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<std::int64_t> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::int64_t a, std::int64_t b) { return diag[a] < diag[b]; });
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n));
    for (std::int64_t j : order) values.push_back(diag[j]);
    if (vectors) {
        DenseMatrix sorted(n, n);
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t i = 0; i < n; ++i) sorted(i, j) = (*vectors)(i, order[j]);
        *vectors = std::move(sorted);
    }
    return values;
}

/**
 * Lanczos with full reorthogonalization and deflation for the k smallest
 * eigenpairs of a symmetric matrix. Each sweep runs in the orthogonal
 * complement of the locked eigenvectors, so repeated eigenvalues surface in
 * later sweeps; sweeps continue until the complement's smallest eigenvalue
 * clears the current k-th value, the space is exhausted, or the cap of 50k
 * Lanczos iterations is hit.
 */
inline Spectrum lanczos_smallest(const SparseMatrix& m, int k, double tol,
                                 const EigshOptions& opt) {
    const std::int64_t n = m.nrows();
    const CsrMatrix a(m);
    const double norm = std::max(1.0, m.infinity_norm());
    const double resid_tol = tol * norm;
    const std::int64_t matvec_cap = static_cast<std::int64_t>(50) * k;
    const std::int64_t check_every = std::max<std::int64_t>(8, k);

    SplitMix64 rng(opt.seed);
    std::vector<std::vector<double>> locked;
    std::vector<double> locked_values;
    std::int64_t iterations = 0;
    double best_residual = std::numeric_limits<double>::infinity();

    std::vector<double> w(static_cast<std::size_t>(n));

    while (static_cast<std::int64_t>(locked.size()) < n && iterations < matvec_cap) {
        // Fresh deterministic start direction inside the complement.
        std::vector<double> v(static_cast<std::size_t>(n));
        double nv = 0.0;
        for (int attempt = 0; attempt < 64 && nv < 1e-8; ++attempt) {
            for (double& x : v) x = rng.next_uniform(-1.0, 1.0);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : locked) axpy(-dot(b, v), b, v);
            nv = nrm2(v);
        }
        if (nv < 1e-8) throw Error("Lanczos could not draw a start vector in the complement");
        for (double& x : v) x /= nv;

        std::vector<std::vector<double>> basis{std::move(v)};
        std::vector<double> alpha, beta;
        const int want = std::max(1, k - static_cast<int>(locked.size()));

        double sweep_min = std::numeric_limits<double>::infinity();
        bool sweep_locked_any = false;

        while (true) {
            const std::size_t j = basis.size() - 1;
            a.matvec(basis[j], w);
            ++iterations;
            if (j > 0) axpy(-beta[j - 1], basis[j - 1], w);
            const double aj = dot(basis[j], w);
            alpha.push_back(aj);
            axpy(-aj, basis[j], w);
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& b : locked) axpy(-dot(b, w), b, w);
                for (const auto& b : basis) axpy(-dot(b, w), b, w);
            }
            const double bj = nrm2(w);

            const bool breakdown = bj < 1e-12 * norm;
            const bool exhausted =
                breakdown || iterations >= matvec_cap
                || static_cast<std::int64_t>(locked.size() + basis.size()) >= n;

            if (!exhausted) {
                beta.push_back(bj);
                std::vector<double> next = w;
                for (double& x : next) x /= bj;
                basis.push_back(std::move(next));
            }

            const auto count = static_cast<std::int64_t>(alpha.size());
            if (!exhausted && count % check_every != 0) continue;

            // Ritz extraction over the current block.
            DenseMatrix s;
            std::vector<double> offs(beta.begin(),
                                     beta.begin() + static_cast<std::int64_t>(alpha.size()) - 1);
            const std::vector<double> theta = tridiagonal_eigen(alpha, offs, &s);
            const int take = std::min<int>(want, static_cast<int>(theta.size()));

            std::vector<std::vector<double>> candidates;
            std::vector<double> values;
            int converged = 0;
            double worst = 0.0;
            for (int i = 0; i < take; ++i) {
                std::vector<double> y(static_cast<std::size_t>(n), 0.0);
                for (std::size_t b = 0; b < alpha.size(); ++b)
                    axpy(s(static_cast<std::int64_t>(b), i), basis[b], y);
                const double ny = nrm2(y);
                for (double& x : y) x /= ny;
                a.matvec(y, w);
                axpy(-theta[static_cast<std::size_t>(i)], y, w);
                const double residual = nrm2(w);
                worst = std::max(worst, residual);
                if (residual <= resid_tol && converged == i) ++converged; // converged prefix
                candidates.push_back(std::move(y));
                values.push_back(theta[static_cast<std::size_t>(i)]);
            }
            best_residual = std::min(best_residual, worst);

            if (converged == take || exhausted) {
                for (int i = 0; i < converged; ++i) {
                    locked.push_back(std::move(candidates[static_cast<std::size_t>(i)]));
                    locked_values.push_back(values[static_cast<std::size_t>(i)]);
                    sweep_min = std::min(sweep_min, values[static_cast<std::size_t>(i)]);
                    sweep_locked_any = true;
                }
                break;
            }
        }

        if (static_cast<std::int64_t>(locked.size()) >= k && sweep_locked_any) {
            // Later sweeps explore ever smaller complements, so once a whole
            // sweep stays above the current k-th value the top-k is final.
            std::vector<double> sorted = locked_values;
            std::sort(sorted.begin(), sorted.end());
            if (sweep_min > sorted[static_cast<std::size_t>(k) - 1] + resid_tol) break;
        }
        if (!sweep_locked_any && iterations >= matvec_cap) break;
    }

    if (static_cast<std::int64_t>(locked.size()) < k)
        throw NoConvergence("Lanczos hit the cap of " + std::to_string(matvec_cap)
                                + " iterations with residual " + std::to_string(best_residual),
                            best_residual);

    std::vector<std::size_t> order(locked.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return locked_values[x] < locked_values[y];
    });

    Spectrum out;
    out.eigenvectors = DenseMatrix(n, k);
    for (int j = 0; j < k; ++j) {
        out.eigenvalues.push_back(locked_values[order[static_cast<std::size_t>(j)]]);
        const auto& y = locked[order[static_cast<std::size_t>(j)]];
        for (std::int64_t i = 0; i < n; ++i)
            (*out.eigenvectors)(i, j) = y[static_cast<std::size_t>(i)];
    }
    out.rank_index = m.row_index();
    return out;
}

} // namespace detail

/// Counts eigenvalues below `rel_threshold * max(1, ||M||_inf)` using the
/// dense path; the kernel-dimension oracle for the Hodge cross-checks.
inline int count_zero_eigenvalues(const SparseMatrix& m, double rel_threshold = 1e-8) {
    const SymmetricEigen eig = jacobi_eigendecomposition(to_dense(m));
    const double cutoff = rel_threshold * std::max(1.0, m.infinity_norm());
    int count = 0;
    for (double v : eig.values)
        if (v < cutoff) ++count;
    return count;
}

/**
 * k smallest eigenpairs of a symmetric sparse matrix. Matrices of order at
 * most `dense_cutoff` (64) take the dense Jacobi path, which doubles as the
 * oracle the iterative path is tested against; larger ones run Lanczos with
 * full reorthogonalization. Deterministic: the start vector comes from the
 * fixed seed 0x5EED.
 */
inline Spectrum eigsh_smallest(const SparseMatrix& m, int k, double tol = 1e-10,
                               const EigshOptions& opt = {}) {
    if (m.nrows() != m.ncols() || !m.is_symmetric())
        throw NotSymmetric("eigsh_smallest needs a symmetric matrix");
    if (k < 1 || k > m.nrows())
        throw InvalidDim("k must be in 1..n, got " + std::to_string(k) + " for n = "
                         + std::to_string(m.nrows()));

    if (!opt.force_iterative && m.nrows() <= opt.dense_cutoff) {
        const SymmetricEigen eig = jacobi_eigendecomposition(to_dense(m));
        Spectrum out;
        out.eigenvalues.assign(eig.values.begin(), eig.values.begin() + k);
        out.eigenvectors = DenseMatrix(m.nrows(), k);
        for (std::int64_t j = 0; j < k; ++j)
            for (std::int64_t i = 0; i < m.nrows(); ++i)
                (*out.eigenvectors)(i, j) = eig.vectors(i, j);
        out.rank_index = m.row_index();
        return out;
    }
    return detail::lanczos_smallest(m, k, tol, opt);
}

} // namespace topo
