#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lightsout/graph.hpp"

namespace lightsout {

enum class SelfAffect { all, none };

[[nodiscard]] std::string to_string(SelfAffect s);
/// Accepts "all" or "none"; throws ValidationError otherwise.
[[nodiscard]] SelfAffect parse_self_affect(std::string_view s);

/// k-ary n-dimensional grid. Cells are numbered row-major over dims (last
/// axis fastest). wrap is either empty (no wrapping) or one flag per axis.
struct GridSpec {
    std::vector<std::size_t> dims;
    std::vector<bool> wrap;
    bool diagonal = false;  // Moore neighbourhood instead of von Neumann
    SelfAffect self_affect = SelfAffect::all;
};

/// Empty iff the spec is usable by grid().
[[nodiscard]] std::vector<std::string> validate(const GridSpec& spec);

/// Green lamps self-affect; every other vertex is red.
struct LampColoring {
    std::vector<std::size_t> green;
};

/// Throws ValidationError for an invalid spec.
[[nodiscard]] Graph grid(const GridSpec& spec);

/// Triangles as cells: row r holds 2r+1 triangles alternating up/down
/// starting with up; cells sharing a side are adjacent. Throws
/// ValidationError when rows == 0.
[[nodiscard]] Graph triangular_lattice(std::size_t rows, SelfAffect self_affect);

/// Hexagons within the given hex distance of a centre cell, in axial
/// coordinates, numbered in a spiral from the centre outwards.
[[nodiscard]] Graph hexagonal_lattice(std::size_t radius, SelfAffect self_affect);

/// Induced subgraph on keep (original order preserved, renumbered from 0).
/// Duplicates in keep are ignored. Throws ValidationError on an out-of-range index.
[[nodiscard]] Graph mask_subgraph(const Graph& g, const std::vector<std::size_t>& keep);

/// Replaces the self-loop set with coloring.green. Throws ValidationError on
/// an out-of-range index.
[[nodiscard]] Graph apply_coloring(const Graph& g, const LampColoring& coloring);

/// Parameters for one catalog entry, as accepted by the CLI `gen` command
/// and the service's template endpoint.
///
/// family is one of "grid", "torus" (grid wrapped on every axis),
/// "triangular" or "hexagonal". dims/wrap/diagonal apply to the grid
/// families, rows to triangular, radius to hexagonal. mask (induced
/// subgraph) is applied before green (self-loop recolouring).
struct TemplateSpec {
    std::string family = "grid";
    std::vector<std::size_t> dims;
    std::vector<bool> wrap;
    bool diagonal = false;
    SelfAffect self_affect = SelfAffect::all;
    std::size_t rows = 1;
    std::size_t radius = 0;
    std::optional<std::vector<std::size_t>> mask;
    std::optional<std::vector<std::size_t>> green;
};

/// Throws ValidationError for an unknown family or invalid parameters.
[[nodiscard]] Graph generate(const TemplateSpec& spec);

}  // namespace lightsout
