#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dgspec {

using Vertex = std::uint32_t;

struct Edge {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple directed graph on vertices 0..n-1. Self-loops are allowed,
/// parallel edges are not. Optional labels record the tokens a graph was
/// read from (or generated with) so reports can speak the caller's names.
class DirectedGraph {
public:
    explicit DirectedGraph(std::size_t vertex_count);

    /// Throws PreconditionError on out-of-range endpoints, duplicate edges,
    /// zero vertices, or a label vector whose size is neither 0 nor n.
    DirectedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                  std::vector<std::string> labels = {});

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return heads_.size(); }

    /// Edges sorted by (tail, head).
    std::vector<Edge> edges() const;

    /// Heads of the edges leaving v, ascending.
    std::span<const Vertex> out_neighbors(Vertex v) const;
    std::size_t out_degree(Vertex v) const;
    std::size_t in_degree(Vertex v) const;
    bool has_edge(Vertex tail, Vertex head) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// The vertex's label, or its decimal index when unlabeled.
    std::string label(Vertex v) const;
    std::optional<Vertex> find_label(std::string_view token) const;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> heads_;
    std::vector<std::size_t> in_degrees_;
    std::vector<std::string> labels_;
};

struct SccDecomposition {
    /// component_id[v] in [0, component_count); ids are assigned in order of
    /// each component's smallest vertex.
    std::vector<std::size_t> component_id;
    std::size_t component_count = 0;
};

/// Tarjan's algorithm, iterative.
SccDecomposition scc(const DirectedGraph& g);

bool is_strongly_connected(const DirectedGraph& g);

/// Gcd of all directed cycle lengths. Throws PreconditionError unless g is
/// strongly connected.
std::size_t period(const DirectedGraph& g);

/// Subgraph on `keep` (any order, duplicates rejected). Vertices are
/// renumbered in ascending original order; labels, if any, follow them.
DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const Vertex> keep);

/// Same graph with vertex v renamed to permutation[v].
DirectedGraph relabel(const DirectedGraph& g, std::span<const Vertex> permutation);

/// True when (u,v) in E implies (v,u) in E, i.e. an undirected graph under
/// the two-arcs-per-edge convention.
bool is_symmetric(const DirectedGraph& g);

/// Common in/out degree k of a symmetric regular graph, if it is one.
std::optional<std::size_t> symmetric_regular_degree(const DirectedGraph& g);

}  // namespace dgspec
