#include "corpus.hpp"

#include <cmath>
#include <numbers>

#include "dgspec/errors.hpp"
#include "dgspec/generators.hpp"
#include "dgspec/markov.hpp"

namespace corpus {

std::vector<Entry> named_graphs() {
    std::vector<Entry> out;
    for (std::size_t n = 3; n <= 6; ++n) {
        out.push_back({"complete_bidirected_" + std::to_string(n), dgspec::complete_bidirected(n),
                       n - 1, 1.0});
    }
    for (std::size_t n : {5u, 7u}) {
        out.push_back({"undirected_cycle_" + std::to_string(n), dgspec::undirected_cycle(n), 2,
                       2.0 * std::cos(std::numbers::pi / static_cast<double>(n))});
    }
    out.push_back({"chord_cycle_3", dgspec::chord_cycle(3, dgspec::default_chords()), {}, {}});
    out.push_back({"petersen", dgspec::petersen(), 3, 2.0});
    return out;
}

std::vector<Entry> random_graphs(std::size_t count) {
    std::vector<Entry> out;
    for (std::uint64_t seed = 1; out.size() < count; ++seed) {
        const std::size_t n = 4 + seed % 6;
        const double p = seed % 2 == 0 ? 0.5 : 0.3;
        dgspec::DirectedGraph g = dgspec::random_strongly_connected(n, p, seed);
        try {
            (void)dgspec::spectral_profile(g);
        } catch (const dgspec::Error&) {
            continue;  // periodic or not diagonalizable
        }
        char name[64];
        std::snprintf(name, sizeof name, "random_n%zu_p%.1f_seed%llu", n, p,
                      static_cast<unsigned long long>(seed));
        out.push_back({name, std::move(g), {}, {}});
    }
    return out;
}

std::vector<Entry> full() {
    auto out = named_graphs();
    for (auto& e : random_graphs()) out.push_back(std::move(e));
    return out;
}

}  // namespace corpus
