#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dgspec/graph.hpp"

namespace dgspec {

enum class GraphFamily {
    complete_bidirected,
    undirected_cycle,
    petersen,
    de_bruijn,
    chord_cycle,
    random_strongly_connected,
};

std::string_view family_name(GraphFamily family);
/// Throws PreconditionError for unknown names.
GraphFamily parse_family(std::string_view name);

// Undirected families use two opposite arcs per edge.
DirectedGraph complete_bidirected(std::size_t n);
DirectedGraph undirected_cycle(std::size_t n);
DirectedGraph petersen();

/// Vertices are the words of length `word_length` over `symbols` letters
/// (labelled by the word itself, index = base-`symbols` value); each word
/// points at its one-letter left shifts.
DirectedGraph de_bruijn(std::size_t symbols, std::size_t word_length);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 plus the listed chords.
/// Chords that duplicate a cycle arc are rejected.
DirectedGraph chord_cycle(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& chords);

/// Chord list used when chord_cycle is requested without one: {0 -> 2}.
std::vector<std::pair<Vertex, Vertex>> default_chords();

inline constexpr std::size_t kRandomGraphAttempts = 1000;

/// Each ordered pair (i, j), i != j, becomes an arc independently with
/// probability p; the draw is repeated until strongly connected.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`; a uniform
/// double is (engine() >> 11) * 2^-53, so a seed reproduces the same graph
/// on every conforming standard library.
DirectedGraph random_strongly_connected(std::size_t n, double p, std::uint64_t seed,
                                        std::size_t max_attempts = kRandomGraphAttempts);

struct GeneratorParams {
    GraphFamily family = GraphFamily::complete_bidirected;
    std::size_t n = 0;
    std::size_t symbols = 2;
    std::size_t word_length = 2;
    std::vector<std::pair<Vertex, Vertex>> chords;
    double p = 0.5;
    std::uint64_t seed = 0;
};

DirectedGraph generate(const GeneratorParams& params);

/// Builds GeneratorParams from positional tokens, as on the command line:
///   complete_bidirected N | undirected_cycle N | petersen |
///   de_bruijn SYMBOLS WORD_LEN | chord_cycle N [A:B ...] |
///   random_strongly_connected N P [SEED]
/// A missing random seed falls back to `default_seed`.
GeneratorParams parse_generator_args(std::string_view family,
                                     const std::vector<std::string>& args,
                                     std::uint64_t default_seed = 0);

}  // namespace dgspec
