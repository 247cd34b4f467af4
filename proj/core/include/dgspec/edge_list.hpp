#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dgspec/graph.hpp"

namespace dgspec {

/// Parses the edge-list format: one `tail head` pair of whitespace-separated
/// tokens per line, blank lines and `#` comment lines ignored. Vertices are
/// numbered by first appearance and keep their tokens as labels.
///
/// Throws ParseError on a line without exactly two tokens, on a repeated
/// edge, or when no edge is present.
DirectedGraph parse_edge_list(std::string_view text);

DirectedGraph read_edge_list(const std::filesystem::path& path);

/// Canonical edge-list text for g, using labels as tokens. Edges are grouped
/// by their larger endpoint and, within a group, arcs pointing up come first,
/// so re-parsing usually reproduces g's numbering (it does whenever each
/// vertex v > 0 has an arc from a lower index, and 0 has an arc to 1 or a
/// self-loop). Isolated vertices cannot be expressed.
std::string format_edge_list(const DirectedGraph& g);

void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path);

}  // namespace dgspec
