// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. Exit code 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/resource.h>
#include <vector>

#include "helpers.hpp"
#include "topo/betti.hpp"
#include "topo/cell2vec.hpp"
#include "topo/cli.hpp"
#include "topo/fixtures.hpp"
#include "topo/graph_algorithms.hpp"
#include "topo/homp.hpp"
#include "topo/spectral.hpp"

using namespace topo;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string fixture_path(const std::string& name) {
    return std::string(TOPO_FIXTURE_DIR) + "/" + name;
}

std::string golden_path(const std::string& name) {
    return std::string(TOPO_TEST_DATA_DIR) + "/golden/" + name;
}

struct Check {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
};

// --- criterion 1: rank-2 Hodge Laplacian of the two-cell complex ----------
Check snippet_reproduction() {
    Check c;
    const auto start = Clock::now();
    CellComplex2D cx;
    cx.add_cell({1, 2, 3, 4}, 2);
    cx.add_cell({1, 2, 5}, 2);
    const SparseMatrix l2 = hodge_laplacian_matrix(cx, 2);
    const double elapsed = seconds_since(start);
    c.require(l2.nrows() == 2 && l2.ncols() == 2, "expected a 2x2 matrix");
    c.require(l2.value(0, 0) == 4.0 && l2.value(1, 1) == 3.0, "diagonal must be (4, 3) exactly");
    c.require(std::abs(l2.value(0, 1)) == 1.0 && std::abs(l2.value(1, 0)) == 1.0,
              "off-diagonal magnitude must be 1 exactly");
    c.require(elapsed < 1e-3, "took " + std::to_string(elapsed) + "s, budget 1ms");
    return c;
}

// --- criterion 2: boundary of boundary vanishes ----------------------------
Check boundary_squared_zero() {
    Check c;
    const auto start = Clock::now();
    SplitMix64 rng(0x5EED2);
    for (int trial = 0; trial < 200; ++trial) {
        const SimplicialComplex cx = oracle::random_simplicial_complex(rng, 8);
        for (int k = 1; k < cx.dimension(); ++k) {
            const SparseMatrix product =
                multiply(incidence_matrix(cx, k, true), incidence_matrix(cx, k + 1, true));
            c.require(product.nnz() == 0, "B_" + std::to_string(k) + " * B_"
                                              + std::to_string(k + 1) + " has "
                                              + std::to_string(product.nnz()) + " nonzeros");
        }
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 5.0, "took " + std::to_string(elapsed) + "s, budget 5s");
    return c;
}

// --- criterion 3: Betti oracle suite with the spectral cross-check --------
Check betti_oracles() {
    Check c;
    const auto check = [&](const SimplicialComplex& cx, std::vector<std::int64_t> expected,
                           const std::string& name) {
        const auto betti = betti_numbers(cx, static_cast<int>(expected.size()) - 1);
        c.require(betti == expected, name + ": betti mismatch");
        for (std::size_t k = 0; k < expected.size(); ++k) {
            const int kernel =
                count_zero_eigenvalues(hodge_laplacian_matrix(cx, static_cast<int>(k)), 1e-8);
            c.require(kernel == expected[k],
                      name + ": dim ker L_" + std::to_string(k) + " = " + std::to_string(kernel)
                          + ", betti = " + std::to_string(expected[k]));
        }
    };
    check(fixtures::hollow_triangle(), {1, 1}, "hollow triangle");
    check(fixtures::filled_triangle(), {1, 0}, "filled triangle");
    check(fixtures::tetrahedron_boundary(), {1, 0, 1}, "tetrahedron boundary");
    check(fixtures::two_disjoint_triangles(), {2, 0}, "two disjoint triangles");
    return c;
}

// --- criterion 4: iterative eigensolver against the dense oracle ----------
Check eigensolver_oracle() {
    Check c;
    SplitMix64 rng(0x5EED4);
    EigshOptions iterative;
    iterative.force_iterative = true;
    for (int trial = 0; trial < 50; ++trial) {
        const SimplicialComplex cx = oracle::random_graph_complex(rng, 64);
        const SparseMatrix l0 = hodge_laplacian_matrix(cx, 0);
        const int k = std::min<int>(6, static_cast<int>(l0.nrows()));
        const Spectrum dense = eigsh_smallest(l0, k);
        const Spectrum lanczos = eigsh_smallest(l0, k, 1e-10, iterative);
        for (int i = 0; i < k; ++i) {
            const double diff = std::abs(dense.eigenvalues[static_cast<std::size_t>(i)]
                                         - lanczos.eigenvalues[static_cast<std::size_t>(i)]);
            c.require(diff <= 1e-8, "trial " + std::to_string(trial) + ": eigenvalue "
                                        + std::to_string(i) + " differs by "
                                        + std::to_string(diff));
        }
    }
    return c;
}

// --- criterion 5: kernel multiplicity counts components --------------------
Check component_laplacian_consistency() {
    Check c;
    SplitMix64 rng(0x5EED5);
    for (int trial = 0; trial < 100; ++trial) {
        const SimplicialComplex cx = oracle::random_simplicial_complex(rng, 8);
        const auto components = connected_components(cx, 0);
        const int zeros = count_zero_eigenvalues(hodge_laplacian_matrix(cx, 0), 1e-8);
        c.require(zeros == static_cast<int>(components.size()),
                  "trial " + std::to_string(trial) + ": " + std::to_string(zeros)
                      + " zero modes vs " + std::to_string(components.size()) + " components");
    }
    return c;
}

// --- criterion 6: HOMP equivariance and linearity ---------------------------
SimplicialComplex reinserted(const SimplicialComplex& cx, SplitMix64& rng) {
    std::vector<CellId> cells;
    for (int r = 0; r <= cx.dimension(); ++r)
        for (const CellId& cell : cx.skeleton(r)) cells.push_back(cell);
    for (std::size_t i = cells.size(); i > 1; --i)
        std::swap(cells[i - 1], cells[rng.next_below(i)]);
    SimplicialComplex out;
    for (const CellId& cell : cells)
        out.add_simplex({cell.vertices().begin(), cell.vertices().end()});
    return out;
}

FeatureMatrix cellwise_features(const SimplicialComplex& cx, int rank, int channels) {
    const auto cells = cx.skeleton(rank);
    FeatureMatrix f{rank, {cells.begin(), cells.end()},
                    DenseMatrix(static_cast<std::int64_t>(cells.size()), channels)};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::uint64_t h = 0;
        for (VertexId v : cells[i].vertices()) h = mix64(h ^ static_cast<std::uint64_t>(v));
        for (int ch = 0; ch < channels; ++ch) {
            SplitMix64 g(mix64(h ^ static_cast<std::uint64_t>(ch)));
            f.data(static_cast<std::int64_t>(i), ch) = g.next_uniform(-1.0, 1.0);
        }
    }
    return f;
}

Check homp_equivariance() {
    Check c;
    SplitMix64 rng(0x5EED6);
    for (int trial = 0; trial < 50; ++trial) {
        SimplicialComplex a = oracle::random_simplicial_complex(rng, 7);
        if (a.dimension() < 1) a.add_simplex({1, 2});
        const int rank = 1 + static_cast<int>(rng.next_below(
                                 static_cast<std::uint64_t>(a.dimension())));
        const SimplicialComplex b = reinserted(a, rng);

        const int in_ch = 2, out_ch = 3;
        HompLayerSpec spec;
        spec.arrows.push_back({rank, rank, HompOperator::DownLaplacian,
                               init_weights(in_ch, out_ch, InitScheme::GlorotUniform, trial * 7 + 1)});
        spec.arrows.push_back({rank, rank, HompOperator::UpLaplacian,
                               init_weights(in_ch, out_ch, InitScheme::GlorotUniform, trial * 7 + 2)});
        spec.arrows.push_back({rank, rank - 1, HompOperator::Incidence,
                               init_weights(in_ch, out_ch, InitScheme::GlorotUniform, trial * 7 + 3)});
        spec.activation = trial % 2 == 0 ? Activation::Identity : Activation::Tanh;

        std::map<int, FeatureMatrix> fa, fb;
        fa.emplace(rank, cellwise_features(a, rank, in_ch));
        fb.emplace(rank, cellwise_features(b, rank, in_ch));
        const auto outa = homp_forward(a, spec, fa);
        const auto outb = homp_forward(b, spec, fb);
        for (const auto& [target, block] : outa) {
            const auto& other = outb.at(target);
            for (const CellId& cell : a.skeleton(target)) {
                const auto ia = *a.index_of(cell);
                const auto ib = *b.index_of(cell);
                for (int ch = 0; ch < out_ch; ++ch) {
                    const double diff = std::abs(block.data(ia, ch) - other.data(ib, ch));
                    c.require(diff <= 1e-9, "trial " + std::to_string(trial)
                                                + ": relabeled output differs by "
                                                + std::to_string(diff));
                }
            }
        }

        // linearity below the activation
        HompLayerSpec linear = spec;
        linear.activation = Activation::Identity;
        const FeatureMatrix h1 = cellwise_features(a, rank, in_ch);
        FeatureMatrix h2 = h1;
        for (double& v : h2.data.data()) v = 1.0 - v;
        FeatureMatrix combo = h1;
        combo.data = h1.data.scaled(0.5) + h2.data.scaled(-2.0);
        std::map<int, FeatureMatrix> m1, m2, mc;
        m1.emplace(rank, h1);
        m2.emplace(rank, h2);
        mc.emplace(rank, combo);
        const auto o1 = homp_forward(a, linear, m1);
        const auto o2 = homp_forward(a, linear, m2);
        const auto oc = homp_forward(a, linear, mc);
        for (const auto& [target, block] : oc) {
            const DenseMatrix expected =
                o1.at(target).data.scaled(0.5) + o2.at(target).data.scaled(-2.0);
            const double diff = max_abs_diff(block.data, expected);
            c.require(diff <= 1e-9,
                      "trial " + std::to_string(trial) + ": linearity off by " + std::to_string(diff));
        }
    }
    return c;
}

// --- criterion 7: embedding separation and determinism ---------------------
Check embedding_separation() {
    Check c;
    const SimplicialComplex cx = fixtures::two_disjoint_triangles();
    Cell2VecParams p;
    p.dim = 8;
    p.seed = 0;
    const EmbeddingTable table = cell2vec(cx, 0, p);
    const auto cells = cx.skeleton(0);
    double intra = 0.0, inter = 0.0;
    int n_intra = 0, n_inter = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
            const double cos = cosine_similarity(table.vector(cells[i]), table.vector(cells[j]));
            const bool same = (cells[i].vertices()[0] <= 3) == (cells[j].vertices()[0] <= 3);
            (same ? intra : inter) += cos;
            (same ? n_intra : n_inter) += 1;
        }
    }
    c.require(intra / n_intra > inter / n_inter,
              "mean intra " + std::to_string(intra / n_intra) + " not above mean inter "
                  + std::to_string(inter / n_inter));
    const EmbeddingTable again = cell2vec(cx, 0, p);
    c.require(table == again, "repeat run is not bitwise identical");
    return c;
}

// --- criterion 8: desk-scale performance ------------------------------------
Check grid_performance() {
    Check c;
    const auto start = Clock::now();
    const CellComplex2D cx = mesh_to_cell(fixtures::grid_mesh(200));
    const SparseMatrix l1 = hodge_laplacian_matrix(cx, 1);
    const double elapsed = seconds_since(start);
    c.require(cx.num_cells(2) == 80000, "expected 80000 triangles");
    c.require(l1.nrows() == 120400, "expected 120400 edges");
    c.require(elapsed < 5.0, "took " + std::to_string(elapsed) + "s, budget 5s");
    struct rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    const double peak_gb = static_cast<double>(usage.ru_maxrss) / (1024.0 * 1024.0);
    c.require(peak_gb < 2.0, "peak RSS " + std::to_string(peak_gb) + " GB, budget 2 GB");
    c.detail = c.pass ? std::to_string(elapsed) + "s, " + std::to_string(peak_gb) + " GB peak"
                      : c.detail;
    return c;
}

// --- criterion 9: CLI golden files ------------------------------------------
Check cli_goldens() {
    Check c;
    const std::vector<std::string> names = {"hollow_triangle", "filled_triangle",
                                            "tetrahedron_boundary", "two_triangles",
                                            "square_triangle"};
    const std::vector<std::string> hodge_ranks = {"0", "1", "0", "0", "2"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string file = fixture_path(names[i] + ".json");
        const auto run = [&](std::vector<std::string> args) {
            std::ostringstream out, err;
            const int code = run_cli(std::move(args), out, err);
            c.require(code == 0, names[i] + ": exit " + std::to_string(code) + " " + err.str());
            return out.str();
        };
        c.require(run({"betti", file}) == slurp(golden_path(names[i] + ".betti.txt")),
                  names[i] + ": betti output differs from golden");
        c.require(run({"components", file, "--rank", "0"})
                      == slurp(golden_path(names[i] + ".components.txt")),
                  names[i] + ": components output differs from golden");
        const std::string mtx = run({"matrix", file, "--kind", "hodge", "--rank", hodge_ranks[i]});
        c.require(mtx == slurp(golden_path(names[i] + ".hodge" + hodge_ranks[i] + ".mtx")),
                  names[i] + ": matrix output differs from golden");
        c.require(mtx.rfind("%%MatrixMarket matrix coordinate real general\n", 0) == 0,
                  names[i] + ": Matrix Market header is wrong");
    }
    return c;
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"criterion 1 (two-cell complex rank-2 Hodge Laplacian)", snippet_reproduction},
        {"criterion 2 (boundary-of-boundary vanishes on 200 random complexes)", boundary_squared_zero},
        {"criterion 3 (Betti oracle suite with spectral cross-check)", betti_oracles},
        {"criterion 4 (iterative eigensolver matches dense oracle, 50 matrices)", eigensolver_oracle},
        {"criterion 5 (kernel multiplicity equals component count, 100 complexes)",
         component_laplacian_consistency},
        {"criterion 6 (HOMP equivariance and linearity, 50 triples)", homp_equivariance},
        {"criterion 7 (embedding separation and determinism)", embedding_separation},
        {"criterion 8 (200x200 grid build + hodge(1) under 5s / 2GB)", grid_performance},
        {"criterion 9 (CLI golden files byte-match)", cli_goldens},
    };

    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check result;
        try {
            result = run();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        if (result.pass) {
            std::printf("PASS  %s%s%s\n", name.c_str(), result.detail.empty() ? "" : " — ",
                        result.detail.c_str());
        } else {
            ++failures;
            std::printf("FAIL  %s — %s\n", name.c_str(), result.detail.c_str());
        }
    }
    return failures == 0 ? 0 : 1;
}
