#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/embedding.hpp"
#include "topo/walks.hpp"

namespace topo {

struct Cell2VecParams {
    int dim = 32;
    NeighborhoodKind nbhd = NeighborhoodKind::Adjacency;
    std::optional<int> via_rank = {}; ///< defaults to rank+1 (adjacency) or rank-1 (coadjacency)
    int walk_number = 10;
    int walk_length = 20;
    int window = 5;
    int negative = 5;
    int epochs = 5;
    double learning_rate = 0.025;
    std::uint64_t seed = 0;
};

namespace detail {

inline double sigmoid(double x) {
    if (x > 40.0) return 1.0;
    if (x < -40.0) return 0.0;
    return 1.0 / (1.0 + std::exp(-x));
}

/// Cumulative-weight sampler over the unigram distribution raised to 3/4.
class NoiseDistribution {
public:
    explicit NoiseDistribution(const std::vector<std::int64_t>& counts) {
        cumulative_.reserve(counts.size());
        double total = 0.0;
        for (std::int64_t c : counts) {
            total += std::pow(static_cast<double>(c), 0.75);
            cumulative_.push_back(total);
        }
    }

    std::int64_t sample(SplitMix64& rng) const {
        const double x = rng.next_double() * cumulative_.back();
        const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
        return std::min<std::int64_t>(it - cumulative_.begin(),
                                      static_cast<std::int64_t>(cumulative_.size()) - 1);
    }

private:
    std::vector<double> cumulative_;
};

} // namespace detail

/**
 * Skip-gram with negative sampling over random-walk co-occurrences: for each
 * center/context pair within the window the objective is
 * log sigma(u.v) + sum over negatives of log sigma(-u.v'), with negatives
 * drawn proportional to frequency^0.75 and the learning rate decaying
 * linearly to a tenth of its start value. Training is single-threaded and
 * bitwise reproducible for a fixed seed; the input-side vectors are
 * returned. epoch_losses, when given, receives the average loss per epoch.
 */
template <Complex C>
EmbeddingTable cell2vec(const C& cx, int rank, const Cell2VecParams& p = {},
                        std::vector<double>* epoch_losses = nullptr) {
    const auto cells = cx.skeleton(rank);
    const auto n = static_cast<std::int64_t>(cells.size());
    if (n == 0) throw EmptyDomain("cell2vec needs a non-empty skeleton at rank " + std::to_string(rank));
    if (p.dim < 1) throw InvalidDim("embedding dimension must be >= 1");

    const WalkCorpus corpus =
        random_walks(cx, rank, p.nbhd, p.via_rank, p.walk_number, p.walk_length, p.seed);

    // Token streams as skeleton indices.
    std::vector<std::vector<std::int64_t>> walks;
    walks.reserve(corpus.walks.size());
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
    for (const auto& walk : corpus.walks) {
        std::vector<std::int64_t> w;
        w.reserve(walk.size());
        for (const CellId& cell : walk) {
            const std::int64_t i = *cx.index_of(cell);
            ++counts[static_cast<std::size_t>(i)];
            w.push_back(i);
        }
        walks.push_back(std::move(w));
    }
    const detail::NoiseDistribution noise(counts);

    std::int64_t pairs_per_epoch = 0;
    for (const auto& w : walks) {
        const auto len = static_cast<std::int64_t>(w.size());
        for (std::int64_t i = 0; i < len; ++i)
            pairs_per_epoch += std::min<std::int64_t>(len - 1, i + p.window) -
                               std::max<std::int64_t>(0, i - p.window);
    }
    const std::int64_t total_pairs = std::max<std::int64_t>(1, pairs_per_epoch * p.epochs);

    const auto dim = static_cast<std::int64_t>(p.dim);
    DenseMatrix in(n, dim);
    DenseMatrix out(n, dim);
    SplitMix64 init_rng(substream_seed(p.seed, 0x1217u, 0));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t d = 0; d < dim; ++d)
            in(i, d) = (init_rng.next_double() - 0.5) / static_cast<double>(dim);

    SplitMix64 train_rng(substream_seed(p.seed, 0x7ea1u, 1));
    std::vector<double> grad(static_cast<std::size_t>(dim));
    if (epoch_losses) epoch_losses->clear();

    std::int64_t processed = 0;
    for (int epoch = 0; epoch < p.epochs; ++epoch) {
        double epoch_loss = 0.0;
        for (const auto& w : walks) {
            const auto len = static_cast<std::int64_t>(w.size());
            for (std::int64_t i = 0; i < len; ++i) {
                const std::int64_t center = w[static_cast<std::size_t>(i)];
                const std::int64_t lo = std::max<std::int64_t>(0, i - p.window);
                const std::int64_t hi = std::min<std::int64_t>(len - 1, i + p.window);
                for (std::int64_t j = lo; j <= hi; ++j) {
                    if (j == i) continue;
                    const std::int64_t context = w[static_cast<std::size_t>(j)];
                    const double lr =
                        p.learning_rate
                        * (1.0 - 0.9 * static_cast<double>(processed) / static_cast<double>(total_pairs));
                    ++processed;

                    auto u = in.row(center);
                    std::fill(grad.begin(), grad.end(), 0.0);

                    {
                        auto v = out.row(context);
                        const double f = detail::sigmoid(detail::dot(u, v));
                        const double g = (1.0 - f) * lr;
                        for (std::int64_t d = 0; d < dim; ++d) {
                            grad[static_cast<std::size_t>(d)] += g * v[static_cast<std::size_t>(d)];
                            v[static_cast<std::size_t>(d)] += g * u[static_cast<std::size_t>(d)];
                        }
                        epoch_loss -= std::log(std::max(f, 1e-12));
                    }
                    for (int s = 0; s < p.negative; ++s) {
                        const std::int64_t neg = noise.sample(train_rng);
                        if (neg == context) continue;
                        auto v = out.row(neg);
                        const double f = detail::sigmoid(detail::dot(u, v));
                        const double g = -f * lr;
                        for (std::int64_t d = 0; d < dim; ++d) {
                            grad[static_cast<std::size_t>(d)] += g * v[static_cast<std::size_t>(d)];
                            v[static_cast<std::size_t>(d)] += g * u[static_cast<std::size_t>(d)];
                        }
                        epoch_loss -= std::log(std::max(1.0 - f, 1e-12));
                    }
                    for (std::int64_t d = 0; d < dim; ++d)
                        u[static_cast<std::size_t>(d)] += grad[static_cast<std::size_t>(d)];
                }
            }
        }
        if (epoch_losses)
            epoch_losses->push_back(pairs_per_epoch > 0
                                        ? epoch_loss / static_cast<double>(pairs_per_epoch)
                                        : 0.0);
    }

    return EmbeddingTable({cells.begin(), cells.end()}, std::move(in));
}

} // namespace topo
