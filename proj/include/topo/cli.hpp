#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "topo/betti.hpp"
#include "topo/cell2vec.hpp"
#include "topo/eigenmap.hpp"
#include "topo/fixtures.hpp"
#include "topo/graph_algorithms.hpp"
#include "topo/io.hpp"

namespace topo {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write " + path);
    file << content;
}

template <Complex C>
SparseMatrix build_matrix(const C& cx, const std::string& kind, int rank, std::optional<int> via,
                          bool signed_entries) {
    if (kind == "incidence") return incidence_matrix(cx, rank, signed_entries);
    if (kind == "hodge") return hodge_laplacian_matrix(cx, rank);
    if (kind == "up") return up_laplacian_matrix(cx, rank);
    if (kind == "down") return down_laplacian_matrix(cx, rank);
    if (kind == "adjacency") return adjacency_matrix(cx, rank, via);
    if (kind == "coadjacency") return coadjacency_matrix(cx, rank, via);
    if (kind == "normalized") return normalized_laplacian(cx, rank);
    throw Error("unknown matrix kind " + kind);
}

inline std::vector<Edge> one_skeleton_edges(const AnyComplex& cx) {
    std::vector<Edge> edges;
    std::visit(
        [&](const auto& c) {
            for (const CellId& cell : c.skeleton(1)) {
                if (cell.size() != 2)
                    throw InvalidCell("rank-1 cell " + cell.to_string()
                                      + " is not an edge; cannot lift to a clique complex");
                edges.emplace_back(cell.vertices()[0], cell.vertices()[1]);
            }
        },
        cx);
    return edges;
}

} // namespace detail

/**
 * Command line front end. Returns 0 on success, 1 for domain errors
 * (one-line message on err), 2 for usage errors.
 */
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"topo: build topological domains, their operators, embeddings and message passing layers"};
    app.require_subcommand(1);

    // ---- info ---------------------------------------------------------
    struct {
        std::string file;
    } info;
    auto* info_cmd = app.add_subcommand("info", "per-rank cell counts and dimension");
    info_cmd->add_option("file", info.file, "complex document (JSON)")->required();
    info_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(info.file));
        std::string text = "domain: " + to_string(domain_of(cx)) + "\n";
        std::visit(
            [&](const auto& c) {
                text += "dimension: " + std::to_string(c.dimension()) + "\n";
                for (int r = 0; r <= c.dimension(); ++r)
                    text += "rank " + std::to_string(r) + ": " + std::to_string(c.num_cells(r))
                            + "\n";
                text += "total: " + std::to_string(c.num_cells()) + "\n";
            },
            cx);
        out << text;
    });

    // ---- matrix -------------------------------------------------------
    struct {
        std::string file, kind, output;
        int rank = 0;
        std::optional<int> via;
        bool signed_entries = false;
    } matrix;
    auto* matrix_cmd = app.add_subcommand("matrix", "export a structural operator as Matrix Market");
    matrix_cmd->add_option("file", matrix.file, "complex document (JSON)")->required();
    matrix_cmd->add_option("--kind", matrix.kind, "operator")
        ->required()
        ->check(CLI::IsMember(
            {"incidence", "hodge", "up", "down", "adjacency", "coadjacency", "normalized"}));
    matrix_cmd->add_option("--rank", matrix.rank, "rank")->required();
    matrix_cmd->add_option("--via", matrix.via, "via rank for (co)adjacency");
    matrix_cmd->add_flag("--signed", matrix.signed_entries, "signed incidence entries");
    matrix_cmd->add_option("-o,--output", matrix.output, "output file (stdout when absent)");
    matrix_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(matrix.file));
        const SparseMatrix m = std::visit(
            [&](const auto& c) {
                return detail::build_matrix(c, matrix.kind, matrix.rank, matrix.via,
                                            matrix.signed_entries);
            },
            cx);
        detail::emit(matrix.output, write_matrix_market(m), out);
    });

    // ---- betti --------------------------------------------------------
    struct {
        std::string file;
        std::optional<int> max_rank;
    } betti;
    auto* betti_cmd = app.add_subcommand("betti", "Betti numbers via exact integer rank");
    betti_cmd->add_option("file", betti.file, "complex document (JSON)")->required();
    betti_cmd->add_option("--max-rank", betti.max_rank, "highest rank (default: dimension)");
    betti_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(betti.file));
        const auto numbers = std::visit(
            [&](const auto& c) { return betti_numbers(c, betti.max_rank.value_or(c.dimension())); },
            cx);
        std::string text;
        for (std::size_t i = 0; i < numbers.size(); ++i) {
            if (i > 0) text += ' ';
            text += std::to_string(numbers[i]);
        }
        out << text << "\n";
    });

    // ---- components ---------------------------------------------------
    struct {
        std::string file;
        int rank = 0;
        std::optional<int> via;
    } components;
    auto* comp_cmd = app.add_subcommand("components", "connected components of one skeleton");
    comp_cmd->add_option("file", components.file, "complex document (JSON)")->required();
    comp_cmd->add_option("--rank", components.rank, "rank")->required();
    comp_cmd->add_option("--via", components.via, "via rank (default rank+1)");
    comp_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(components.file));
        const auto parts = std::visit(
            [&](const auto& c) { return connected_components(c, components.rank, components.via); },
            cx);
        std::string text;
        for (const auto& part : parts) {
            for (std::size_t i = 0; i < part.size(); ++i) {
                if (i > 0) text += ' ';
                text += part[i].to_string();
            }
            text += '\n';
        }
        out << text;
    });

    // ---- embed --------------------------------------------------------
    struct {
        std::string file, method, nbhd = "adj", output;
        int rank = 0, dim = 32;
        std::optional<int> via;
        std::uint64_t seed = 0;
        Cell2VecParams defaults;
        int walk_number = 10, walk_length = 20, window = 5, negative = 5, epochs = 5;
        double lr = 0.025;
    } embed;
    auto* embed_cmd = app.add_subcommand("embed", "embed one skeleton into Euclidean space");
    embed_cmd->add_option("file", embed.file, "complex document (JSON)")->required();
    embed_cmd->add_option("--method", embed.method, "algorithm")
        ->required()
        ->check(CLI::IsMember({"cell2vec", "eigenmap"}));
    embed_cmd->add_option("--rank", embed.rank, "rank to embed")->required();
    embed_cmd->add_option("--dim", embed.dim, "embedding dimension")->required();
    embed_cmd->add_option("--seed", embed.seed, "random seed (default 0)");
    embed_cmd->add_option("--nbhd", embed.nbhd, "neighborhood: adj or coadj")
        ->check(CLI::IsMember({"adj", "coadj"}));
    embed_cmd->add_option("--via", embed.via, "via rank");
    embed_cmd->add_option("--walk-number", embed.walk_number, "walks per cell");
    embed_cmd->add_option("--walk-length", embed.walk_length, "walk length");
    embed_cmd->add_option("--window", embed.window, "context window");
    embed_cmd->add_option("--negative", embed.negative, "negative samples per pair");
    embed_cmd->add_option("--epochs", embed.epochs, "training epochs");
    embed_cmd->add_option("--lr", embed.lr, "start learning rate");
    embed_cmd->add_option("-o,--output", embed.output, "output TSV (stdout when absent)");
    embed_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(embed.file));
        const EmbeddingTable table = std::visit(
            [&](const auto& c) {
                if (embed.method == "eigenmap")
                    return higher_order_laplacian_eigenmap(c, embed.rank, embed.dim);
                Cell2VecParams p;
                p.dim = embed.dim;
                p.nbhd = embed.nbhd == "adj" ? NeighborhoodKind::Adjacency
                                             : NeighborhoodKind::Coadjacency;
                p.via_rank = embed.via;
                p.walk_number = embed.walk_number;
                p.walk_length = embed.walk_length;
                p.window = embed.window;
                p.negative = embed.negative;
                p.epochs = embed.epochs;
                p.learning_rate = embed.lr;
                p.seed = embed.seed;
                return cell2vec(c, embed.rank, p);
            },
            cx);
        detail::emit(embed.output, write_embeddings(table), out);
    });

    // ---- homp ---------------------------------------------------------
    struct {
        std::string file, spec, features, output;
    } homp;
    auto* homp_cmd = app.add_subcommand("homp", "run one message passing layer forward");
    homp_cmd->add_option("file", homp.file, "complex document (JSON)")->required();
    homp_cmd->add_option("--spec", homp.spec, "layer spec (JSON)")->required();
    homp_cmd->add_option("--features", homp.features, "input features (TSV)")->required();
    homp_cmd->add_option("-o,--output", homp.output, "output TSV (stdout when absent)");
    homp_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(homp.file));
        const HompLayerSpec spec = parse_homp_spec(detail::read_file(homp.spec));
        const std::string feature_text = detail::read_file(homp.features);
        const auto result = std::visit(
            [&](const auto& c) {
                return homp_forward(c, spec, parse_features(feature_text, c));
            },
            cx);
        detail::emit(homp.output, write_features(result), out);
    });

    // ---- transform ----------------------------------------------------
    struct {
        std::string file, to, output;
        int max_rank = 2;
    } transform;
    auto* transform_cmd = app.add_subcommand("transform", "convert between domains");
    transform_cmd->add_option("file", transform.file, "complex document (JSON)")->required();
    transform_cmd->add_option("--to", transform.to, "target domain")
        ->required()
        ->check(CLI::IsMember(
            {"clique-complex", "combinatorial", "simplicial", "cell", "hypergraph"}));
    transform_cmd->add_option("--max-rank", transform.max_rank, "clique lifting cutoff (default 2)");
    transform_cmd->add_option("-o,--output", transform.output, "output JSON (stdout when absent)");
    transform_cmd->callback([&] {
        const AnyComplex cx = parse_complex(detail::read_file(transform.file));
        AnyComplex result;
        if (transform.to == "clique-complex") {
            result = graph_to_clique_complex(detail::one_skeleton_edges(cx), transform.max_rank);
        } else if (transform.to == to_string(domain_of(cx))) {
            result = cx; // re-serialization round trip
        } else if (transform.to == "combinatorial") {
            if (const auto* sc = std::get_if<SimplicialComplex>(&cx))
                result = simplicial_to_combinatorial(*sc);
            else if (const auto* cc = std::get_if<CellComplex2D>(&cx))
                result = cell_to_combinatorial(*cc);
            else
                throw Error("cannot convert " + to_string(domain_of(cx)) + " to combinatorial");
        } else {
            throw Error("cannot convert " + to_string(domain_of(cx)) + " to " + transform.to);
        }
        detail::emit(transform.output, write_complex(result), out);
    });

    // ---- mesh ---------------------------------------------------------
    struct {
        std::string file, as, output;
    } mesh;
    auto* mesh_cmd = app.add_subcommand("mesh", "ingest an OFF triangle mesh as a complex");
    mesh_cmd->add_option("file", mesh.file, "OFF mesh")->required();
    mesh_cmd->add_option("--as", mesh.as, "target domain")
        ->required()
        ->check(CLI::IsMember({"simplicial", "cell"}));
    mesh_cmd->add_option("-o,--output", mesh.output, "output JSON (stdout when absent)");
    mesh_cmd->callback([&] {
        const OffMesh off = parse_off(detail::read_file(mesh.file));
        const AnyComplex cx = mesh_to_complex(
            off.faces, mesh.as == "simplicial" ? MeshTarget::Simplicial : MeshTarget::Cell);
        detail::emit(mesh.output, write_complex(cx), out);
    });

    // ---- mesh-gen -----------------------------------------------------
    struct {
        int n = 1;
        std::string output;
    } mesh_gen;
    auto* gen_cmd = app.add_subcommand("mesh-gen", "generate an n-by-n grid triangulation (OFF)");
    gen_cmd->add_option("n", mesh_gen.n, "grid size")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("-o,--output", mesh_gen.output, "output OFF (stdout when absent)");
    gen_cmd->callback([&] {
        const int n = mesh_gen.n;
        std::vector<std::array<double, 3>> coords;
        coords.reserve(static_cast<std::size_t>(n + 1) * (n + 1));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                coords.push_back({static_cast<double>(j), static_cast<double>(i), 0.0});
        detail::emit(mesh_gen.output, write_off(coords, fixtures::grid_mesh(n)), out);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace topo
