#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/dense.hpp"
#include "topo/operators.hpp"
#include "topo/rng.hpp"

namespace topo {

/// Structural operator an arrow pushes features through.
enum class HompOperator {
    Incidence,          ///< B_source: rank k -> rank k-1
    IncidenceTranspose, ///< B_target^T: rank k -> rank k+1
    Adjacency,
    Coadjacency,
    UpLaplacian,
    DownLaplacian,
    Identity,
};

enum class WithinAgg { Sum, Mean };
enum class MergeOp { Sum, Mean, Concat };
enum class Activation { Identity, ReLU, Tanh, Sigmoid };
enum class InitScheme { Zeros, GlorotUniform };

/// Per-rank feature block: one row per cell of the skeleton.
struct FeatureMatrix {
    int rank = 0;
    std::vector<CellId> rows;
    DenseMatrix data;
};

/// One arrow of a tensor diagram: push the source-rank block through a
/// structural operator, then through a (in_channels x out_channels) weight.
struct HompArrow {
    int source_rank = 0;
    int target_rank = 0;
    HompOperator op = HompOperator::Identity;
    DenseMatrix weight;
};

/**
 * Declarative description of one higher-order message passing layer. Arrows
 * sharing a source realize the split operator, arrows sharing a target are
 * combined by `merge`. All arrows into one target must agree on output
 * channels unless merge is Concat.
 */
struct HompLayerSpec {
    std::vector<HompArrow> arrows;
    WithinAgg within_agg = WithinAgg::Sum;
    MergeOp merge = MergeOp::Sum;
    Activation activation = Activation::Identity;
};

inline const char* to_string(HompOperator op) {
    switch (op) {
    case HompOperator::Incidence: return "incidence";
    case HompOperator::IncidenceTranspose: return "incidence_transpose";
    case HompOperator::Adjacency: return "adjacency";
    case HompOperator::Coadjacency: return "coadjacency";
    case HompOperator::UpLaplacian: return "up_laplacian";
    case HompOperator::DownLaplacian: return "down_laplacian";
    case HompOperator::Identity: return "identity";
    }
    return "?";
}

namespace detail {

inline SparseMatrix zero_square(std::span<const CellId> cells) {
    return SparseMatrix::from_triplets(static_cast<std::int64_t>(cells.size()),
                                       static_cast<std::int64_t>(cells.size()), {},
                                       {cells.begin(), cells.end()}, {cells.begin(), cells.end()});
}

inline SparseMatrix sparse_identity(std::span<const CellId> cells) {
    std::vector<Triplet> entries;
    entries.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        entries.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(i), 1.0});
    return SparseMatrix::from_triplets(static_cast<std::int64_t>(cells.size()),
                                       static_cast<std::int64_t>(cells.size()), std::move(entries),
                                       {cells.begin(), cells.end()}, {cells.begin(), cells.end()});
}

/// Divides each row by its neighbor count (nonzero entries); empty rows stay
/// zero.
inline SparseMatrix row_mean_normalized(const SparseMatrix& m) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(m.nrows()), 0);
    for (const Triplet& t : m.entries()) ++counts[static_cast<std::size_t>(t.row)];
    std::vector<Triplet> entries(m.entries().begin(), m.entries().end());
    for (Triplet& t : entries) t.value /= static_cast<double>(counts[static_cast<std::size_t>(t.row)]);
    return SparseMatrix::from_triplets(m.nrows(), m.ncols(), std::move(entries), m.row_index(),
                                       m.col_index());
}

/// Builds the structural operator of one arrow, mapping skeleton(source) to
/// skeleton(target). Rank-boundary cases that would error as standalone
/// operator calls (down at rank 0, coadjacency at rank 0) contribute zero
/// here, mirroring the zero up term at the top rank.
template <Complex C>
SparseMatrix arrow_operator(const C& cx, const HompArrow& arrow, std::size_t arrow_idx) {
    const auto fail = [&](const std::string& why) -> SparseMatrix {
        throw ShapeError("arrow #" + std::to_string(arrow_idx) + " (" + to_string(arrow.op) + " "
                         + std::to_string(arrow.source_rank) + "->"
                         + std::to_string(arrow.target_rank) + "): " + why);
    };
    const int s = arrow.source_rank;
    const int t = arrow.target_rank;
    switch (arrow.op) {
    case HompOperator::Incidence:
        if (t != s - 1) return fail("incidence arrows must target rank source-1");
        return detail::native_incidence(cx, s);
    case HompOperator::IncidenceTranspose:
        if (t != s + 1) return fail("transposed incidence arrows must target rank source+1");
        return detail::native_incidence(cx, t).transposed();
    case HompOperator::Adjacency:
        if (t != s) return fail("adjacency arrows stay within one rank");
        return adjacency_matrix(cx, s);
    case HompOperator::Coadjacency:
        if (t != s) return fail("coadjacency arrows stay within one rank");
        if (s == 0) return zero_square(cx.skeleton(0));
        return coadjacency_matrix(cx, s);
    case HompOperator::UpLaplacian:
        if (t != s) return fail("up Laplacian arrows stay within one rank");
        return up_laplacian_matrix(cx, s);
    case HompOperator::DownLaplacian:
        if (t != s) return fail("down Laplacian arrows stay within one rank");
        if (s == 0) return zero_square(cx.skeleton(0));
        return down_laplacian_matrix(cx, s);
    case HompOperator::Identity:
        if (t != s) return fail("identity arrows stay within one rank");
        return sparse_identity(cx.skeleton(s));
    }
    return fail("unknown operator");
}

inline void apply_activation(DenseMatrix& m, Activation act) {
    if (act == Activation::Identity) return;
    for (double& v : m.data()) {
        switch (act) {
        case Activation::ReLU: v = v > 0.0 ? v : 0.0; break;
        case Activation::Tanh: v = std::tanh(v); break;
        case Activation::Sigmoid: v = 1.0 / (1.0 + std::exp(-v)); break;
        case Activation::Identity: break;
        }
    }
}

} // namespace detail

/**
 * Forward pass of one message passing layer:
 * H'_t = activation( merge over arrows a->t of G_a H_{src(a)} W_a ),
 * with G_a row-normalized when within_agg is Mean. Target ranks with no
 * incoming arrow are absent from the output. Pure function; arrows are
 * evaluated and merged in spec order.
 */
template <Complex C>
std::map<int, FeatureMatrix> homp_forward(const C& cx, const HompLayerSpec& spec,
                                          const std::map<int, FeatureMatrix>& features) {
    const int dim = cx.dimension();
    std::map<int, std::vector<DenseMatrix>> per_target;

    for (std::size_t a = 0; a < spec.arrows.size(); ++a) {
        const HompArrow& arrow = spec.arrows[a];
        const auto name = [&] {
            return "arrow #" + std::to_string(a) + " (" + to_string(arrow.op) + " "
                   + std::to_string(arrow.source_rank) + "->" + std::to_string(arrow.target_rank)
                   + ")";
        };
        if (arrow.source_rank < 0 || arrow.source_rank > dim || arrow.target_rank < 0
            || arrow.target_rank > dim)
            throw UnsupportedRank(name() + ": rank outside 0.." + std::to_string(dim));
        const auto it = features.find(arrow.source_rank);
        if (it == features.end()) throw ShapeError(name() + ": no feature block for source rank");
        const FeatureMatrix& h = it->second;
        const auto n_src = static_cast<std::int64_t>(cx.skeleton(arrow.source_rank).size());
        if (h.data.rows() != n_src)
            throw ShapeError(name() + ": feature block has " + std::to_string(h.data.rows())
                             + " rows, skeleton has " + std::to_string(n_src));
        if (arrow.weight.rows() != h.data.cols())
            throw ShapeError(name() + ": weight expects " + std::to_string(arrow.weight.rows())
                             + " input channels, features carry " + std::to_string(h.data.cols()));

        SparseMatrix g = detail::arrow_operator(cx, arrow, a);
        if (spec.within_agg == WithinAgg::Mean) g = detail::row_mean_normalized(g);
        per_target[arrow.target_rank].push_back(multiply(g, h.data) * arrow.weight);
    }

    std::map<int, FeatureMatrix> out;
    for (auto& [target, blocks] : per_target) {
        DenseMatrix merged;
        if (spec.merge == MergeOp::Concat) {
            std::int64_t cols = 0;
            for (const DenseMatrix& b : blocks) cols += b.cols();
            merged = DenseMatrix(blocks.front().rows(), cols);
            std::int64_t at = 0;
            for (const DenseMatrix& b : blocks) {
                for (std::int64_t i = 0; i < b.rows(); ++i)
                    for (std::int64_t j = 0; j < b.cols(); ++j) merged(i, at + j) = b(i, j);
                at += b.cols();
            }
        } else {
            for (std::size_t i = 1; i < blocks.size(); ++i)
                if (blocks[i].cols() != blocks[0].cols())
                    throw ShapeError("arrows into rank " + std::to_string(target)
                                     + " disagree on output channels under a non-concat merge");
            merged = blocks.front();
            for (std::size_t i = 1; i < blocks.size(); ++i) merged = merged + blocks[i];
            if (spec.merge == MergeOp::Mean)
                merged = merged.scaled(1.0 / static_cast<double>(blocks.size()));
        }
        detail::apply_activation(merged, spec.activation);
        const auto cells = cx.skeleton(target);
        out.emplace(target,
                    FeatureMatrix{target, {cells.begin(), cells.end()}, std::move(merged)});
    }
    return out;
}

/**
 * Two-operator reference layer
 * activation(L_down H W_down + L_up H W_up + H W_id), expressed as a
 * three-arrow diagram so it is exactly a homp_forward evaluation.
 */
template <Complex C>
FeatureMatrix scconv_reference_layer(const C& cx, int rank, const FeatureMatrix& h,
                                     const DenseMatrix& w_down, const DenseMatrix& w_up,
                                     const DenseMatrix& w_id,
                                     Activation activation = Activation::Identity) {
    HompLayerSpec spec;
    spec.arrows.push_back({rank, rank, HompOperator::DownLaplacian, w_down});
    spec.arrows.push_back({rank, rank, HompOperator::UpLaplacian, w_up});
    spec.arrows.push_back({rank, rank, HompOperator::Identity, w_id});
    spec.activation = activation;
    std::map<int, FeatureMatrix> features;
    features.emplace(rank, h);
    auto out = homp_forward(cx, spec, features);
    return std::move(out.at(rank));
}

/// Deterministic weight initialization. GlorotUniform draws from
/// +-sqrt(6 / (fan_in + fan_out)).
inline DenseMatrix init_weights(std::int64_t rows, std::int64_t cols, InitScheme scheme,
                                std::uint64_t seed = 0) {
    if (rows < 1 || cols < 1) throw InvalidDim("weight matrix needs positive dimensions");
    DenseMatrix w(rows, cols);
    if (scheme == InitScheme::Zeros) return w;
    const double bound = std::sqrt(6.0 / static_cast<double>(rows + cols));
    SplitMix64 rng(mix64(seed));
    for (double& v : w.data()) v = rng.next_uniform(-bound, bound);
    return w;
}

} // namespace topo
