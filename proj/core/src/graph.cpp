#include "dgspec/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "dgspec/errors.hpp"

namespace dgspec {

DirectedGraph::DirectedGraph(std::size_t vertex_count)
    : DirectedGraph(vertex_count, {}) {}

DirectedGraph::DirectedGraph(std::size_t vertex_count, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count_ == 0) {
        throw PreconditionError("graph must have at least one vertex");
    }
    if (!labels_.empty() && labels_.size() != vertex_count_) {
        throw PreconditionError("label count " + std::to_string(labels_.size()) +
                                " does not match vertex count " +
                                std::to_string(vertex_count_));
    }
    for (const Edge& e : edges) {
        if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
            throw PreconditionError("edge (" + std::to_string(e.tail) + ", " +
                                    std::to_string(e.head) + ") out of range for n = " +
                                    std::to_string(vertex_count_));
        }
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
        throw PreconditionError("duplicate edge (" + std::to_string(dup->tail) + ", " +
                                std::to_string(dup->head) + ")");
    }

    offsets_.assign(vertex_count_ + 1, 0);
    in_degrees_.assign(vertex_count_, 0);
    heads_.reserve(edges.size());
    for (const Edge& e : edges) {
        ++offsets_[e.tail + 1];
        ++in_degrees_[e.head];
        heads_.push_back(e.head);
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
}

std::vector<Edge> DirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(heads_.size());
    for (Vertex u = 0; u < vertex_count_; ++u) {
        for (Vertex v : out_neighbors(u)) out.push_back({u, v});
    }
    return out;
}

std::span<const Vertex> DirectedGraph::out_neighbors(Vertex v) const {
    return {heads_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t DirectedGraph::out_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

std::size_t DirectedGraph::in_degree(Vertex v) const { return in_degrees_[v]; }

bool DirectedGraph::has_edge(Vertex tail, Vertex head) const {
    auto nbrs = out_neighbors(tail);
    return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

std::string DirectedGraph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> DirectedGraph::find_label(std::string_view token) const {
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (label(v) == token) return v;
    }
    return std::nullopt;
}

SccDecomposition scc(const DirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, unvisited), lowlink(n, 0), raw_id(n, unvisited);
    std::vector<bool> on_stack(n, false);
    std::vector<Vertex> stack;
    // (vertex, position in its adjacency list)
    std::vector<std::pair<Vertex, std::size_t>> call_stack;
    std::size_t next_index = 0;
    std::size_t raw_count = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited) continue;
        call_stack.emplace_back(root, 0);
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call_stack.empty()) {
            auto& [v, pos] = call_stack.back();
            auto nbrs = g.out_neighbors(v);
            if (pos < nbrs.size()) {
                Vertex w = nbrs[pos++];
                if (index[w] == unvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call_stack.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            call_stack.pop_back();
            if (!call_stack.empty()) {
                Vertex parent = call_stack.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
            }
            if (lowlink[done] == index[done]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    raw_id[w] = raw_count;
                } while (w != done);
                ++raw_count;
            }
        }
    }

    SccDecomposition out;
    out.component_id.assign(n, 0);
    std::vector<std::size_t> renumber(raw_count, unvisited);
    for (Vertex v = 0; v < n; ++v) {
        std::size_t& id = renumber[raw_id[v]];
        if (id == unvisited) id = out.component_count++;
        out.component_id[v] = id;
    }
    return out;
}

bool is_strongly_connected(const DirectedGraph& g) { return scc(g).component_count == 1; }

std::size_t period(const DirectedGraph& g) {
    if (!is_strongly_connected(g)) {
        throw PreconditionError("period is defined only for strongly connected graphs");
    }
    const std::size_t n = g.vertex_count();
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> depth(n, unseen);
    std::queue<Vertex> frontier;
    depth[0] = 0;
    frontier.push(0);
    while (!frontier.empty()) {
        Vertex u = frontier.front();
        frontier.pop();
        for (Vertex v : g.out_neighbors(u)) {
            if (depth[v] == unseen) {
                depth[v] = depth[u] + 1;
                frontier.push(v);
            }
        }
    }
    std::size_t result = 0;
    for (const Edge& e : g.edges()) {
        // depth(u) + 1 - depth(v) >= 0 always holds for BFS depths.
        std::size_t diff = depth[e.tail] + 1 - depth[e.head];
        result = std::gcd(result, diff);
    }
    // A strongly connected graph with at least one edge has a cycle; a single
    // isolated vertex (no edges) is reported as period 1 by convention.
    return result == 0 ? 1 : result;
}

DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const Vertex> keep) {
    if (keep.empty()) throw PreconditionError("induced subgraph needs a nonempty vertex set");
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("induced subgraph vertex set has duplicates");
    }
    if (sorted.back() >= g.vertex_count()) {
        throw PreconditionError("induced subgraph vertex out of range");
    }
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> new_index(g.vertex_count(), absent);
    std::vector<std::string> labels;
    for (Vertex i = 0; i < sorted.size(); ++i) {
        new_index[sorted[i]] = i;
        if (g.has_labels()) labels.push_back(g.labels()[sorted[i]]);
    }
    std::vector<Edge> edges;
    for (Vertex u : sorted) {
        for (Vertex v : g.out_neighbors(u)) {
            if (new_index[v] != absent) edges.push_back({new_index[u], new_index[v]});
        }
    }
    return DirectedGraph(sorted.size(), std::move(edges), std::move(labels));
}

DirectedGraph relabel(const DirectedGraph& g, std::span<const Vertex> permutation) {
    const std::size_t n = g.vertex_count();
    if (permutation.size() != n) throw PreconditionError("permutation size mismatch");
    std::vector<bool> seen(n, false);
    for (Vertex p : permutation) {
        if (p >= n || seen[p]) throw PreconditionError("not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) edges.push_back({permutation[e.tail], permutation[e.head]});
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(n);
        for (Vertex v = 0; v < n; ++v) labels[permutation[v]] = g.labels()[v];
    }
    return DirectedGraph(n, std::move(edges), std::move(labels));
}

bool is_symmetric(const DirectedGraph& g) {
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v : g.out_neighbors(u)) {
            if (!g.has_edge(v, u)) return false;
        }
    }
    return true;
}

std::optional<std::size_t> symmetric_regular_degree(const DirectedGraph& g) {
    if (!is_symmetric(g)) return std::nullopt;
    const std::size_t k = g.out_degree(0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) != k || g.in_degree(v) != k) return std::nullopt;
    }
    return k;
}

}  // namespace dgspec
