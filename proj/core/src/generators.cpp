#include "dgspec/generators.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <random>

#include "dgspec/errors.hpp"

namespace dgspec {

namespace {

constexpr std::array<std::pair<GraphFamily, std::string_view>, 6> kFamilyNames{{
    {GraphFamily::complete_bidirected, "complete_bidirected"},
    {GraphFamily::undirected_cycle, "undirected_cycle"},
    {GraphFamily::petersen, "petersen"},
    {GraphFamily::de_bruijn, "de_bruijn"},
    {GraphFamily::chord_cycle, "chord_cycle"},
    {GraphFamily::random_strongly_connected, "random_strongly_connected"},
}};

void require_order(std::size_t n, std::string_view family) {
    if (n < 2) {
        throw PreconditionError(std::string(family) + " needs n >= 2, got " + std::to_string(n));
    }
}

std::vector<Edge> both_directions(const std::vector<std::pair<Vertex, Vertex>>& undirected) {
    std::vector<Edge> edges;
    edges.reserve(2 * undirected.size());
    for (auto [a, b] : undirected) {
        edges.push_back({a, b});
        edges.push_back({b, a});
    }
    return edges;
}

template <typename T>
T parse_number(std::string_view token, std::string_view what) {
    T value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw PreconditionError("invalid " + std::string(what) + ": '" + std::string(token) + "'");
    }
    return value;
}

// libstdc++ 11 lacks from_chars for double.
double parse_probability(const std::string& token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || token.empty()) {
        throw PreconditionError("invalid probability: '" + token + "'");
    }
    return value;
}

void require_arity(const std::vector<std::string>& args, std::size_t lo, std::size_t hi,
                   std::string_view family) {
    if (args.size() < lo || args.size() > hi) {
        throw PreconditionError(std::string(family) + ": wrong number of parameters");
    }
}

}  // namespace

std::string_view family_name(GraphFamily family) {
    for (auto [f, name] : kFamilyNames) {
        if (f == family) return name;
    }
    return "unknown";
}

GraphFamily parse_family(std::string_view name) {
    for (auto [f, known] : kFamilyNames) {
        if (known == name) return f;
    }
    throw PreconditionError("unknown graph family '" + std::string(name) + "'");
}

DirectedGraph complete_bidirected(std::size_t n) {
    require_order(n, "complete_bidirected");
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1));
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = 0; j < n; ++j) {
            if (i != j) edges.push_back({i, j});
        }
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph undirected_cycle(std::size_t n) {
    require_order(n, "undirected_cycle");
    std::vector<std::pair<Vertex, Vertex>> undirected;
    // For n = 2 the "cycle" is the single edge 0 - 1.
    const std::size_t edge_count = n == 2 ? 1 : n;
    for (Vertex i = 0; i < edge_count; ++i) {
        undirected.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    }
    return DirectedGraph(n, both_directions(undirected));
}

DirectedGraph petersen() {
    std::vector<std::pair<Vertex, Vertex>> undirected;
    for (Vertex i = 0; i < 5; ++i) {
        undirected.emplace_back(i, (i + 1) % 5);               // outer cycle
        undirected.emplace_back(i, i + 5);                     // spokes
        undirected.emplace_back(i + 5, 5 + (i + 2) % 5);       // inner pentagram
    }
    return DirectedGraph(10, both_directions(undirected));
}

DirectedGraph de_bruijn(std::size_t symbols, std::size_t word_length) {
    if (symbols < 2 || symbols > 10) {
        throw PreconditionError("de_bruijn needs 2 <= symbols <= 10");
    }
    if (word_length < 1) throw PreconditionError("de_bruijn needs word length >= 1");
    std::size_t n = 1;
    for (std::size_t i = 0; i < word_length; ++i) {
        n *= symbols;
        if (n > (1u << 20)) throw PreconditionError("de_bruijn graph too large");
    }
    std::vector<std::string> labels(n);
    std::vector<Edge> edges;
    edges.reserve(n * symbols);
    for (std::size_t v = 0; v < n; ++v) {
        std::string word(word_length, '0');
        for (std::size_t i = 0, rest = v; i < word_length; ++i, rest /= symbols) {
            word[word_length - 1 - i] = static_cast<char>('0' + rest % symbols);
        }
        labels[v] = std::move(word);
        for (std::size_t s = 0; s < symbols; ++s) {
            edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v * symbols) % n + s)});
        }
    }
    return DirectedGraph(n, std::move(edges), std::move(labels));
}

DirectedGraph chord_cycle(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& chords) {
    require_order(n, "chord_cycle");
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
    for (auto [a, b] : chords) {
        if (a >= n || b >= n) throw PreconditionError("chord endpoint out of range");
        edges.push_back({a, b});
    }
    return DirectedGraph(n, std::move(edges));
}

std::vector<std::pair<Vertex, Vertex>> default_chords() { return {{0, 2}}; }

DirectedGraph random_strongly_connected(std::size_t n, double p, std::uint64_t seed,
                                        std::size_t max_attempts) {
    require_order(n, "random_strongly_connected");
    if (!(p > 0.0 && p <= 1.0)) {
        throw PreconditionError("random_strongly_connected needs p in (0, 1]");
    }
    std::mt19937_64 engine(seed);
    auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<Edge> edges;
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                if (i != j && uniform() < p) edges.push_back({i, j});
            }
        }
        DirectedGraph g(n, std::move(edges));
        if (is_strongly_connected(g)) return g;
    }
    throw PreconditionError("no strongly connected sample after " + std::to_string(max_attempts) +
                            " attempts");
}

DirectedGraph generate(const GeneratorParams& params) {
    switch (params.family) {
        case GraphFamily::complete_bidirected: return complete_bidirected(params.n);
        case GraphFamily::undirected_cycle: return undirected_cycle(params.n);
        case GraphFamily::petersen: return petersen();
        case GraphFamily::de_bruijn: return de_bruijn(params.symbols, params.word_length);
        case GraphFamily::chord_cycle:
            return chord_cycle(params.n, params.chords.empty() ? default_chords() : params.chords);
        case GraphFamily::random_strongly_connected:
            return random_strongly_connected(params.n, params.p, params.seed);
    }
    throw PreconditionError("unknown graph family");
}

GeneratorParams parse_generator_args(std::string_view family,
                                     const std::vector<std::string>& args,
                                     std::uint64_t default_seed) {
    GeneratorParams params;
    params.family = parse_family(family);
    switch (params.family) {
        case GraphFamily::complete_bidirected:
        case GraphFamily::undirected_cycle:
            require_arity(args, 1, 1, family);
            params.n = parse_number<std::size_t>(args[0], "vertex count");
            break;
        case GraphFamily::petersen:
            require_arity(args, 0, 0, family);
            break;
        case GraphFamily::de_bruijn:
            require_arity(args, 2, 2, family);
            params.symbols = parse_number<std::size_t>(args[0], "symbol count");
            params.word_length = parse_number<std::size_t>(args[1], "word length");
            break;
        case GraphFamily::chord_cycle:
            if (args.empty()) throw PreconditionError("chord_cycle needs a vertex count");
            params.n = parse_number<std::size_t>(args[0], "vertex count");
            for (std::size_t i = 1; i < args.size(); ++i) {
                std::string_view chord = args[i];
                auto colon = chord.find(':');
                if (colon == std::string_view::npos) {
                    throw PreconditionError("chord must look like A:B, got '" + args[i] + "'");
                }
                params.chords.emplace_back(parse_number<Vertex>(chord.substr(0, colon), "chord tail"),
                                           parse_number<Vertex>(chord.substr(colon + 1), "chord head"));
            }
            break;
        case GraphFamily::random_strongly_connected:
            require_arity(args, 2, 3, family);
            params.n = parse_number<std::size_t>(args[0], "vertex count");
            params.p = parse_probability(args[1]);
            params.seed = args.size() == 3 ? parse_number<std::uint64_t>(args[2], "seed")
                                           : default_seed;
            break;
    }
    return params;
}

}  // namespace dgspec
