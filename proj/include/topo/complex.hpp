#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "topo/cell.hpp"
#include "topo/cell_complex.hpp"
#include "topo/colored_hypergraph.hpp"
#include "topo/combinatorial_complex.hpp"
#include "topo/simplicial_complex.hpp"

namespace topo {

/// The structural interface every domain class exposes to the operator and
/// algorithm layers.
template <typename C>
concept Complex = requires(const C& cx, const CellId& cell, int rank) {
    { C::oriented } -> std::convertible_to<bool>;
    { cx.dimension() } -> std::convertible_to<int>;
    { cx.skeleton(rank) } -> std::convertible_to<std::span<const CellId>>;
    { cx.has_cell(cell) } -> std::convertible_to<bool>;
    { cx.index_of(cell) } -> std::convertible_to<std::optional<std::int64_t>>;
    { cx.faces(cell) } -> std::convertible_to<std::vector<CellId>>;
    { cx.cofaces(cell) } -> std::convertible_to<std::vector<CellId>>;
};

static_assert(Complex<SimplicialComplex>);
static_assert(Complex<CellComplex2D>);
static_assert(Complex<CombinatorialComplex>);
static_assert(Complex<ColoredHyperGraph>);

/// Type-erased complex, the unit the document parser and the CLI work with.
using AnyComplex =
    std::variant<SimplicialComplex, CellComplex2D, CombinatorialComplex, ColoredHyperGraph>;

} // namespace topo
