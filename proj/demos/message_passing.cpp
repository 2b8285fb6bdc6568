// Run one higher-order message passing layer on edge features of a
// simplicial complex, pushing through the down and up Laplacians.

#include <cstdio>

#include "topo/fixtures.hpp"
#include "topo/homp.hpp"

int main() {
    const topo::SimplicialComplex cx = topo::fixtures::tetrahedron_boundary();
    const auto edges = cx.skeleton(1);

    topo::FeatureMatrix features{1, {edges.begin(), edges.end()},
                                 topo::DenseMatrix(static_cast<std::int64_t>(edges.size()), 2)};
    for (std::size_t i = 0; i < edges.size(); ++i) {
        features.data(static_cast<std::int64_t>(i), 0) = edges[i].vertices()[0];
        features.data(static_cast<std::int64_t>(i), 1) = edges[i].vertices()[1];
    }

    const auto w_down = topo::init_weights(2, 8, topo::InitScheme::GlorotUniform, 1);
    const auto w_up = topo::init_weights(2, 8, topo::InitScheme::GlorotUniform, 2);
    const auto w_id = topo::init_weights(2, 8, topo::InitScheme::GlorotUniform, 3);

    const topo::FeatureMatrix out = topo::scconv_reference_layer(
        cx, 1, features, w_down, w_up, w_id, topo::Activation::ReLU);

    std::printf("layer output: %lld edges x %lld channels\n",
                static_cast<long long>(out.data.rows()), static_cast<long long>(out.data.cols()));
    for (int c = 0; c < 4; ++c) std::printf("  out[0][%d] = %.5f\n", c, out.data(0, c));
    return 0;
}
