#include "dgspec/edge_list.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

DirectedGraph parse_edge_list(std::string_view text) {
    std::map<std::string, Vertex, std::less<>> index_of;
    std::vector<std::string> labels;
    std::vector<Edge> edges;
    std::map<std::pair<Vertex, Vertex>, std::size_t> first_line;

    auto vertex_for = [&](std::string_view token) {
        if (auto it = index_of.find(token); it != index_of.end()) return it->second;
        auto v = static_cast<Vertex>(labels.size());
        index_of.emplace(std::string(token), v);
        labels.emplace_back(token);
        return v;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 2 tokens, found " +
                             std::to_string(tokens.size()));
        }
        Vertex tail = vertex_for(tokens[0]);
        Vertex head = vertex_for(tokens[1]);
        auto [it, inserted] = first_line.emplace(std::pair{tail, head}, line_no);
        if (!inserted) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::string(tokens[0]) + " -> " + std::string(tokens[1]) +
                             " (first on line " + std::to_string(it->second) + ")");
        }
        edges.push_back({tail, head});
    }
    if (edges.empty()) throw ParseError("edge list contains no edges");
    const std::size_t n = labels.size();
    return DirectedGraph(n, std::move(edges), std::move(labels));
}

DirectedGraph read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

std::string format_edge_list(const DirectedGraph& g) {
    auto edges = g.edges();
    auto key = [](const Edge& e) {
        Vertex top = std::max(e.tail, e.head);
        Vertex other = std::min(e.tail, e.head);
        // Within a group: upward arcs, then downward arcs, then the self-loop.
        int kind = e.tail < e.head ? 0 : (e.tail > e.head ? 1 : 2);
        return std::tuple{top, kind, other};
    };
    std::sort(edges.begin(), edges.end(),
              [&](const Edge& a, const Edge& b) { return key(a) < key(b); });
    std::string out;
    for (const Edge& e : edges) {
        out += g.label(e.tail);
        out += ' ';
        out += g.label(e.head);
        out += '\n';
    }
    return out;
}

void write_edge_list(const DirectedGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw PreconditionError("cannot write " + path.string());
    out << format_edge_list(g);
    if (!out) throw PreconditionError("write failed for " + path.string());
}

}  // namespace dgspec
