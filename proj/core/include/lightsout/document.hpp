#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lightsout/errors.hpp"
#include "lightsout/solver.hpp"

namespace lightsout {

inline constexpr int document_version = 1;

/// Malformed or structurally invalid puzzle document.
class DocumentError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// On-disk puzzle. Serialised as JSON with a fixed key order:
///
///   {"version": 1,
///    "graph": {"n_vertices": N, "edges": [[i,j],...], "self_loops": [k,...],
///              "labels": [{"name": "...", "coords": [x, y]}, ...]},
///    "state": "0101..."}
///
/// "labels" is omitted when the graph has none.
struct PuzzleDocument {
    int version = document_version;
    Puzzle puzzle;

    friend bool operator==(const PuzzleDocument&, const PuzzleDocument&) = default;
};

[[nodiscard]] std::string to_text(const PuzzleDocument& doc);

/// Throws DocumentError on syntax errors, missing keys, an unsupported
/// version, graph invariant violations or a state of the wrong length.
[[nodiscard]] PuzzleDocument parse_document(std::string_view text);

[[nodiscard]] PuzzleDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const PuzzleDocument& doc);

/// Click script: a bare 0/1 string, surrounding whitespace ignored.
[[nodiscard]] BitVec parse_click_script(std::string_view text);
[[nodiscard]] BitVec read_click_script(const std::filesystem::path& path);

}  // namespace lightsout
