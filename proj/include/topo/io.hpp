#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "topo/complex.hpp"
#include "topo/embedding.hpp"
#include "topo/homp.hpp"
#include "topo/transforms.hpp"

namespace topo {

enum class Domain { Simplicial, Cell, Combinatorial, Hypergraph };

inline std::string to_string(Domain d) {
    switch (d) {
    case Domain::Simplicial: return "simplicial";
    case Domain::Cell: return "cell";
    case Domain::Combinatorial: return "combinatorial";
    case Domain::Hypergraph: return "hypergraph";
    }
    return "?";
}

inline Domain domain_from_string(const std::string& s) {
    if (s == "simplicial") return Domain::Simplicial;
    if (s == "cell") return Domain::Cell;
    if (s == "combinatorial") return Domain::Combinatorial;
    if (s == "hypergraph") return Domain::Hypergraph;
    throw ParseError("unknown domain \"" + s + "\"");
}

inline Domain domain_of(const AnyComplex& cx) {
    if (std::holds_alternative<SimplicialComplex>(cx)) return Domain::Simplicial;
    if (std::holds_alternative<CellComplex2D>(cx)) return Domain::Cell;
    if (std::holds_alternative<CombinatorialComplex>(cx)) return Domain::Combinatorial;
    return Domain::Hypergraph;
}

/// Shortest round-trip decimal form of a double; the byte-deterministic
/// number format of every text writer here.
inline std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

namespace detail {

inline void reject_unknown_fields(const nlohmann::json& obj, const char* where,
                                  std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* name : allowed)
            if (item.key() == name) ok = true;
        if (!ok)
            throw ParseError(std::string(where) + ": unknown field \"" + item.key() + "\"");
    }
}

inline VertexId parse_vertex(const nlohmann::json& v, LabelTable& labels, const char* where) {
    if (v.is_number_integer()) {
        const auto x = v.get<std::int64_t>();
        if (x < 0) throw ParseError(std::string(where) + ": vertex labels must be non-negative");
        return static_cast<VertexId>(x);
    }
    if (v.is_string()) return labels.intern(v.get<std::string>());
    throw ParseError(std::string(where) + ": vertex must be an integer or a string");
}

/// Scalar-or-vector attribute value from JSON.
inline AttrValue parse_attr_value(const nlohmann::json& v, const char* where) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array()) {
        std::vector<double> vec;
        for (const auto& x : v) {
            if (!x.is_number())
                throw ParseError(std::string(where) + ": attribute vectors hold numbers only");
            vec.push_back(x.get<double>());
        }
        return vec;
    }
    throw ParseError(std::string(where) + ": attribute must be a number or an array of numbers");
}

template <Complex C>
void apply_attributes(C& cx, const nlohmann::json& attrs) {
    // Keys are the canonical comma-joined cell strings; a key matches every
    // stored cell with that string (colors of a hypergraph may share one).
    std::unordered_map<std::string, std::vector<CellId>> by_key;
    for (int r = 0; r <= cx.dimension(); ++r)
        for (const CellId& cell : cx.skeleton(r)) by_key[cell.to_string()].push_back(cell);
    for (const auto& item : attrs.items()) {
        auto it = by_key.find(item.key());
        if (it == by_key.end())
            throw ParseError("attributes: no cell \"" + item.key() + "\" in complex");
        if (!item.value().is_object())
            throw ParseError("attributes[\"" + item.key() + "\"] must be an object");
        for (const auto& kv : item.value().items())
            for (const CellId& cell : it->second)
                cx.set_attribute(cell, kv.key(),
                                 parse_attr_value(kv.value(), "attributes"));
    }
}

struct DocumentCell {
    std::vector<VertexId> vertices;
    std::optional<int> rank;
    std::string where;
};

} // namespace detail

/**
 * Parses a complex document:
 *   {"schema_version": "1", "domain": "...", "cells": [{"vertices": [...],
 *    "rank": r}, ...], "attributes": {...}}
 * Cells are replayed in order through the domain's add operation, so the
 * document order defines every matrix index. Unknown fields are rejected.
 */
inline AnyComplex parse_complex(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document root must be an object");
    detail::reject_unknown_fields(j, "document", {"schema_version", "domain", "cells", "attributes"});
    if (!j.contains("schema_version") || !j["schema_version"].is_string()
        || j["schema_version"].get<std::string>() != "1")
        throw ParseError("schema_version must be the string \"1\"");
    if (!j.contains("domain") || !j["domain"].is_string())
        throw ParseError("domain: required string field");
    const Domain domain = domain_from_string(j["domain"].get<std::string>());
    if (!j.contains("cells") || !j["cells"].is_array())
        throw ParseError("cells: required array field");

    LabelTable labels;
    std::vector<detail::DocumentCell> cells;
    std::size_t pos = 0;
    for (const auto& entry : j["cells"]) {
        const std::string where = "cells[" + std::to_string(pos++) + "]";
        if (!entry.is_object()) throw ParseError(where + ": must be an object");
        detail::reject_unknown_fields(entry, where.c_str(), {"vertices", "rank"});
        if (!entry.contains("vertices") || !entry["vertices"].is_array()
            || entry["vertices"].empty())
            throw ParseError(where + ".vertices: required non-empty array");
        detail::DocumentCell cell;
        cell.where = where;
        for (const auto& v : entry["vertices"])
            cell.vertices.push_back(detail::parse_vertex(v, labels, where.c_str()));
        if (entry.contains("rank")) {
            if (!entry["rank"].is_number_integer())
                throw ParseError(where + ".rank: must be an integer");
            cell.rank = entry["rank"].get<int>();
        }
        cells.push_back(std::move(cell));
    }

    AnyComplex out;
    switch (domain) {
    case Domain::Simplicial: {
        SimplicialComplex cx;
        for (auto& cell : cells) {
            const int inferred = static_cast<int>(cell.vertices.size()) - 1;
            if (cell.rank && *cell.rank != inferred)
                throw ParseError(cell.where + ".rank: " + std::to_string(*cell.rank)
                                 + " does not match simplex on "
                                 + std::to_string(cell.vertices.size()) + " vertices");
            cx.add_simplex(std::move(cell.vertices));
        }
        out = std::move(cx);
        break;
    }
    case Domain::Cell: {
        CellComplex2D cx;
        for (auto& cell : cells) {
            const int inferred = cell.vertices.size() == 1 ? 0 : cell.vertices.size() == 2 ? 1 : 2;
            if (cell.rank && *cell.rank != inferred)
                throw ParseError(cell.where + ".rank: " + std::to_string(*cell.rank)
                                 + " does not match a cycle of length "
                                 + std::to_string(cell.vertices.size()));
            cx.add_cell(std::move(cell.vertices), inferred);
        }
        out = std::move(cx);
        break;
    }
    case Domain::Combinatorial: {
        CombinatorialComplex cx;
        for (auto& cell : cells) {
            if (!cell.rank) throw ParseError(cell.where + ".rank: required for combinatorial cells");
            cx.add_cell(std::move(cell.vertices), *cell.rank);
        }
        out = std::move(cx);
        break;
    }
    case Domain::Hypergraph: {
        ColoredHyperGraph cx;
        for (auto& cell : cells) {
            if (!cell.rank) throw ParseError(cell.where + ".rank: required for hyperedges");
            if (*cell.rank == 0) {
                if (cell.vertices.size() != 1)
                    throw ParseError(cell.where + ": rank-0 entries must be single nodes");
                cx.add_node(cell.vertices[0]);
            } else {
                cx.add_hyperedge(std::move(cell.vertices), *cell.rank);
            }
        }
        out = std::move(cx);
        break;
    }
    }

    std::visit([&](auto& cx) { cx.labels() = labels; }, out);
    if (j.contains("attributes")) {
        if (!j["attributes"].is_object()) throw ParseError("attributes: must be an object");
        std::visit([&](auto& cx) { detail::apply_attributes(cx, j["attributes"]); }, out);
    }
    return out;
}

namespace detail {

template <Complex C>
std::string cell_entry_json(const C& cx, const CellId& cell) {
    std::string s = "{\"vertices\": [";
    bool first = true;
    for (VertexId v : cell.vertices()) {
        if (!first) s += ", ";
        first = false;
        if (auto name = cx.labels().name(v))
            s += nlohmann::json(*name).dump();
        else
            s += std::to_string(v);
    }
    s += "], \"rank\": " + std::to_string(cell.rank()) + "}";
    return s;
}

} // namespace detail

/// Serializes any complex as a document that parses back to identical
/// per-rank skeletons: cells are listed rank by rank in insertion order, so
/// replaying them reproduces every index. One cell per line,
/// byte-deterministic.
inline std::string write_complex(const AnyComplex& cx) {
    std::string out = "{\n";
    out += "  \"schema_version\": \"1\",\n";
    out += "  \"domain\": \"" + to_string(domain_of(cx)) + "\",\n";
    out += "  \"cells\": [";
    bool first = true;
    bool any_attrs = false;
    std::visit(
        [&](const auto& c) {
            any_attrs = !c.attributes().empty();
            for (int r = 0; r <= c.dimension(); ++r) {
                for (const CellId& cell : c.skeleton(r)) {
                    out += first ? "\n    " : ",\n    ";
                    first = false;
                    out += detail::cell_entry_json(c, cell);
                }
            }
        },
        cx);
    out += first ? "]" : "\n  ]";

    if (any_attrs) {
        out += ",\n  \"attributes\": {";
        bool first_cell = true;
        std::visit(
            [&](const auto& c) {
                for (int r = 0; r <= c.dimension(); ++r) {
                    for (const CellId& cell : c.skeleton(r)) {
                        auto it = c.attributes().find(cell);
                        if (it == c.attributes().end()) continue;
                        std::vector<std::string> names;
                        for (const auto& [name, value] : it->second) names.push_back(name);
                        std::sort(names.begin(), names.end());
                        nlohmann::ordered_json entry;
                        for (const std::string& name : names) {
                            const AttrValue& value = it->second.at(name);
                            if (std::holds_alternative<double>(value))
                                entry[name] = std::get<double>(value);
                            else
                                entry[name] = std::get<std::vector<double>>(value);
                        }
                        out += first_cell ? "\n    " : ",\n    ";
                        first_cell = false;
                        out += nlohmann::json(cell.to_string()).dump() + ": " + entry.dump();
                    }
                }
            },
            cx);
        out += "\n  }";
    }
    out += "\n}\n";
    return out;
}

/// Triangle mesh read from an OFF document. Coordinates are kept for
/// writers; complex construction uses only the faces.
struct OffMesh {
    std::vector<std::array<double, 3>> coordinates;
    std::vector<Triangle> faces;
};

inline OffMesh parse_off(const std::string& text) {
    // Token stream with '#' comments stripped.
    std::string clean;
    clean.reserve(text.size());
    for (std::size_t i = 0; i < text.size();) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else {
            clean.push_back(text[i++]);
        }
    }
    std::istringstream in(clean);
    std::string magic;
    if (!(in >> magic) || magic != "OFF") throw ParseError("OFF: malformed header");
    std::int64_t nv = 0, nf = 0, ne = 0;
    if (!(in >> nv >> nf >> ne) || nv < 0 || nf < 0)
        throw ParseError("OFF: malformed counts line");

    OffMesh mesh;
    mesh.coordinates.reserve(static_cast<std::size_t>(nv));
    for (std::int64_t i = 0; i < nv; ++i) {
        std::array<double, 3> p{};
        if (!(in >> p[0] >> p[1] >> p[2]))
            throw ParseError("OFF: truncated vertex " + std::to_string(i));
        mesh.coordinates.push_back(p);
    }
    mesh.faces.reserve(static_cast<std::size_t>(nf));
    for (std::int64_t i = 0; i < nf; ++i) {
        std::int64_t arity = 0;
        if (!(in >> arity)) throw ParseError("OFF: truncated face " + std::to_string(i));
        if (arity != 3)
            throw UnsupportedFace("OFF face " + std::to_string(i) + " has "
                                  + std::to_string(arity) + " vertices; only triangles load");
        Triangle t{};
        for (int k = 0; k < 3; ++k) {
            std::int64_t v = 0;
            if (!(in >> v)) throw ParseError("OFF: truncated face " + std::to_string(i));
            if (v < 0 || v >= nv)
                throw ParseError("OFF: face " + std::to_string(i) + " references vertex "
                                 + std::to_string(v) + " of " + std::to_string(nv));
            t[static_cast<std::size_t>(k)] = static_cast<VertexId>(v);
        }
        mesh.faces.push_back(t);
    }
    return mesh;
}

inline std::string write_off(const std::vector<std::array<double, 3>>& coordinates,
                             const std::vector<Triangle>& faces) {
    std::string out = "OFF\n";
    out += std::to_string(coordinates.size()) + " " + std::to_string(faces.size()) + " 0\n";
    for (const auto& p : coordinates)
        out += format_double(p[0]) + " " + format_double(p[1]) + " " + format_double(p[2]) + "\n";
    for (const Triangle& t : faces)
        out += "3 " + std::to_string(t[0]) + " " + std::to_string(t[1]) + " "
               + std::to_string(t[2]) + "\n";
    return out;
}

inline constexpr const char* kMatrixMarketHeader = "%%MatrixMarket matrix coordinate real general";

/// Matrix Market coordinate text: 1-based indices, entries sorted by
/// (column, row), shortest round-trip values. Byte-deterministic.
inline std::string write_matrix_market(const SparseMatrix& m) {
    std::vector<Triplet> ordered(m.entries().begin(), m.entries().end());
    std::sort(ordered.begin(), ordered.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
    std::string out = std::string(kMatrixMarketHeader) + "\n";
    out += std::to_string(m.nrows()) + " " + std::to_string(m.ncols()) + " "
           + std::to_string(ordered.size()) + "\n";
    for (const Triplet& t : ordered)
        out += std::to_string(t.row + 1) + " " + std::to_string(t.col + 1) + " "
               + format_double(t.value) + "\n";
    return out;
}

inline SparseMatrix parse_matrix_market(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header) || header != kMatrixMarketHeader)
        throw ParseError("Matrix Market: unsupported or malformed header");
    std::string line;
    while (std::getline(in, line) && (line.empty() || line[0] == '%')) {
    }
    std::istringstream dims(line);
    std::int64_t nrows = 0, ncols = 0, nnz = 0;
    if (!(dims >> nrows >> ncols >> nnz)) throw ParseError("Matrix Market: malformed size line");
    std::vector<Triplet> entries;
    entries.reserve(static_cast<std::size_t>(nnz));
    for (std::int64_t i = 0; i < nnz; ++i) {
        std::int64_t r = 0, c = 0;
        double v = 0.0;
        if (!(in >> r >> c >> v)) throw ParseError("Matrix Market: truncated entries");
        entries.push_back({r - 1, c - 1, v});
    }
    return SparseMatrix::from_triplets(nrows, ncols, std::move(entries));
}

/// Embedding TSV: `cell<TAB>v1<TAB>...<TAB>vdim`, one row per cell in
/// skeleton order, cell keys comma-joined.
inline std::string write_embeddings(const EmbeddingTable& table) {
    std::string out;
    for (std::int64_t i = 0; i < table.size(); ++i) {
        out += table.cells()[static_cast<std::size_t>(i)].to_string();
        const auto row = table.data().row(i);
        for (double v : row) {
            out += '\t';
            out += format_double(v);
        }
        out += '\n';
    }
    return out;
}

/// Feature TSV: `rank<TAB>cell<TAB>v1<TAB>...`, ranks grouped ascending,
/// rows in skeleton order.
inline std::string write_features(const std::map<int, FeatureMatrix>& features) {
    std::string out;
    for (const auto& [rank, block] : features) {
        for (std::size_t i = 0; i < block.rows.size(); ++i) {
            out += std::to_string(rank);
            out += '\t';
            out += block.rows[i].to_string();
            const auto row = block.data.row(static_cast<std::int64_t>(i));
            for (double v : row) {
                out += '\t';
                out += format_double(v);
            }
            out += '\n';
        }
    }
    return out;
}

/// Reads a feature TSV against a complex: every cell of each mentioned rank
/// must appear exactly once with a uniform channel count; rows are reordered
/// to skeleton order.
template <Complex C>
std::map<int, FeatureMatrix> parse_features(const std::string& text, const C& cx) {
    std::map<int, std::unordered_map<std::string, std::vector<double>>> raw;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string rank_str, cell_key;
        if (!std::getline(fields, rank_str, '\t') || !std::getline(fields, cell_key, '\t'))
            throw ParseError("features line " + std::to_string(lineno) + ": expected rank<TAB>cell");
        int rank = 0;
        try {
            rank = std::stoi(rank_str);
        } catch (...) {
            throw ParseError("features line " + std::to_string(lineno) + ": bad rank \"" + rank_str
                             + "\"");
        }
        std::vector<double> values;
        std::string field;
        while (std::getline(fields, field, '\t')) {
            try {
                values.push_back(std::stod(field));
            } catch (...) {
                throw ParseError("features line " + std::to_string(lineno) + ": bad value \""
                                 + field + "\"");
            }
        }
        if (values.empty())
            throw ParseError("features line " + std::to_string(lineno) + ": no channels");
        if (!raw[rank].emplace(cell_key, std::move(values)).second)
            throw ParseError("features line " + std::to_string(lineno) + ": duplicate cell \""
                             + cell_key + "\"");
    }

    std::map<int, FeatureMatrix> out;
    for (auto& [rank, rows] : raw) {
        const auto cells = cx.skeleton(rank);
        if (cells.empty()) throw ParseError("features: complex has no cells at rank "
                                            + std::to_string(rank));
        const auto channels = static_cast<std::int64_t>(rows.begin()->second.size());
        FeatureMatrix block{rank, {cells.begin(), cells.end()},
                            DenseMatrix(static_cast<std::int64_t>(cells.size()), channels)};
        std::size_t matched = 0;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            auto it = rows.find(cells[i].to_string());
            if (it == rows.end())
                throw ParseError("features: missing row for cell " + cells[i].to_string()
                                 + " at rank " + std::to_string(rank));
            if (static_cast<std::int64_t>(it->second.size()) != channels)
                throw ParseError("features: cell " + cells[i].to_string()
                                 + " has a different channel count");
            for (std::int64_t j = 0; j < channels; ++j)
                block.data(static_cast<std::int64_t>(i), j) = it->second[static_cast<std::size_t>(j)];
            ++matched;
        }
        if (matched != rows.size())
            throw ParseError("features: rows at rank " + std::to_string(rank)
                             + " name cells outside the skeleton");
        out.emplace(rank, std::move(block));
    }
    return out;
}

namespace detail {

inline HompOperator homp_operator_from_string(const std::string& s) {
    if (s == "incidence") return HompOperator::Incidence;
    if (s == "incidence_transpose") return HompOperator::IncidenceTranspose;
    if (s == "adjacency") return HompOperator::Adjacency;
    if (s == "coadjacency") return HompOperator::Coadjacency;
    if (s == "up_laplacian") return HompOperator::UpLaplacian;
    if (s == "down_laplacian") return HompOperator::DownLaplacian;
    if (s == "identity") return HompOperator::Identity;
    throw ParseError("unknown operator \"" + s + "\"");
}

} // namespace detail

/**
 * Layer spec document:
 *   {"arrows": [{"source_rank": s, "target_rank": t, "op": "...",
 *    "weight": [[...], ...]}, ...],
 *    "within_agg": "sum"|"mean", "merge": "sum"|"mean"|"concat",
 *    "activation": "identity"|"relu"|"tanh"|"sigmoid"}
 * Aggregations default to sum, activation to identity.
 */
inline HompLayerSpec parse_homp_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("spec root must be an object");
    detail::reject_unknown_fields(j, "spec", {"arrows", "within_agg", "merge", "activation"});
    if (!j.contains("arrows") || !j["arrows"].is_array() || j["arrows"].empty())
        throw ParseError("spec.arrows: required non-empty array");

    HompLayerSpec spec;
    std::size_t pos = 0;
    for (const auto& a : j["arrows"]) {
        const std::string where = "arrows[" + std::to_string(pos++) + "]";
        if (!a.is_object()) throw ParseError(where + ": must be an object");
        detail::reject_unknown_fields(a, where.c_str(),
                                      {"source_rank", "target_rank", "op", "weight"});
        for (const char* field : {"source_rank", "target_rank"})
            if (!a.contains(field) || !a[field].is_number_integer())
                throw ParseError(where + "." + field + ": required integer");
        if (!a.contains("op") || !a["op"].is_string())
            throw ParseError(where + ".op: required string");
        if (!a.contains("weight") || !a["weight"].is_array() || a["weight"].empty())
            throw ParseError(where + ".weight: required non-empty matrix");
        const auto& w = a["weight"];
        const auto rows = static_cast<std::int64_t>(w.size());
        if (!w[0].is_array() || w[0].empty())
            throw ParseError(where + ".weight: rows must be non-empty arrays");
        const auto cols = static_cast<std::int64_t>(w[0].size());
        DenseMatrix weight(rows, cols);
        for (std::int64_t i = 0; i < rows; ++i) {
            const auto& row = w[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<std::int64_t>(row.size()) != cols)
                throw ParseError(where + ".weight: ragged matrix");
            for (std::int64_t k = 0; k < cols; ++k) {
                const auto& v = row[static_cast<std::size_t>(k)];
                if (!v.is_number()) throw ParseError(where + ".weight: entries must be numbers");
                weight(i, k) = v.get<double>();
            }
        }
        spec.arrows.push_back({a["source_rank"].get<int>(), a["target_rank"].get<int>(),
                               detail::homp_operator_from_string(a["op"].get<std::string>()),
                               std::move(weight)});
    }

    if (j.contains("within_agg")) {
        const auto s = j["within_agg"].get<std::string>();
        if (s == "sum")
            spec.within_agg = WithinAgg::Sum;
        else if (s == "mean")
            spec.within_agg = WithinAgg::Mean;
        else
            throw ParseError("spec.within_agg: \"sum\" or \"mean\", got \"" + s + "\"");
    }
    if (j.contains("merge")) {
        const auto s = j["merge"].get<std::string>();
        if (s == "sum")
            spec.merge = MergeOp::Sum;
        else if (s == "mean")
            spec.merge = MergeOp::Mean;
        else if (s == "concat")
            spec.merge = MergeOp::Concat;
        else
            throw ParseError("spec.merge: \"sum\", \"mean\" or \"concat\", got \"" + s + "\"");
    }
    if (j.contains("activation")) {
        const auto s = j["activation"].get<std::string>();
        if (s == "identity")
            spec.activation = Activation::Identity;
        else if (s == "relu")
            spec.activation = Activation::ReLU;
        else if (s == "tanh")
            spec.activation = Activation::Tanh;
        else if (s == "sigmoid")
            spec.activation = Activation::Sigmoid;
        else
            throw ParseError("spec.activation: unknown \"" + s + "\"");
    }
    return spec;
}

} // namespace topo
