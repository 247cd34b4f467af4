#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "dgspec/errors.hpp"
#include "dgspec/generators.hpp"
#include "dgspec/toughness.hpp"
#include "oracles.hpp"

using namespace dgspec;

namespace {

DirectedGraph chord() { return chord_cycle(3, default_chords()); }

double formula(double k, double mu) { return (k * k / (k * mu + mu * mu) - 1.0) / 3.0; }

std::uint64_t mask_of(const std::vector<Vertex>& s) {
    std::uint64_t m = 0;
    for (Vertex v : s) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_SUITE("toughness") {

TEST_CASE("complete graphs are infinitely tough") {
    for (std::size_t n = 2; n <= 7; ++n) {
        const ToughnessResult r = exact_toughness(complete_bidirected(n));
        CHECK(r.is_infinite());
        CHECK(std::isinf(r.value));
        CHECK(r.witness.empty());
    }
}

TEST_CASE("known values") {
    const ToughnessResult c5 = exact_toughness(undirected_cycle(5));
    CHECK(c5.value == 1.0);
    CHECK(c5.witness == std::vector<Vertex>{0, 2});
    CHECK(c5.component_count_at_witness == 2);

    const ToughnessResult c = exact_toughness(chord());
    CHECK(c.value == 0.5);
    CHECK(c.witness == std::vector<Vertex>{0});

    const ToughnessResult pg = exact_toughness(petersen());
    CHECK(pg.value == 4.0 / 3.0);
    CHECK(pg.witness.size() == 4);
    CHECK(pg.component_count_at_witness == 3);
}

TEST_CASE("witness is consistent") {
    for (const auto& entry : corpus::full()) {
        const ToughnessResult r = exact_toughness(entry.graph);
        if (r.is_infinite()) continue;
        const std::size_t n = entry.graph.vertex_count();
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < n; ++v)
            if (std::find(r.witness.begin(), r.witness.end(), v) == r.witness.end()) keep.push_back(v);
        const std::size_t c = scc(induced_subgraph(entry.graph, keep)).component_count;
        CHECK(c >= 2);
        CHECK(c == r.component_count_at_witness);
        CHECK(r.value == static_cast<double>(r.witness.size()) / static_cast<double>(c));
    }
}

TEST_CASE("agrees with the Kosaraju enumeration oracle") {
    auto check = [](const DirectedGraph& g) {
        const ToughnessResult r = exact_toughness(g);
        const oracle::Toughness o = oracle::toughness(g);
        CHECK(r.is_infinite() == o.infinite);
        if (!o.infinite) {
            CHECK(r.value == o.value());
            CHECK(mask_of(r.witness) == o.mask);
            CHECK(r.component_count_at_witness == o.components);
        }
    };
    for (const auto& entry : corpus::full()) check(entry.graph);
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        check(random_strongly_connected(3 + seed % 8, seed % 3 == 0 ? 0.25 : 0.45, seed));
    }
}

TEST_CASE("thread count does not change the answer") {
    const DirectedGraph g = random_strongly_connected(16, 0.2, 5);
    ToughnessOptions one;
    one.threads = 1;
    ToughnessOptions many;
    many.threads = 8;
    CHECK(exact_toughness(g, one) == exact_toughness(g, many));
}

TEST_CASE("relabeling preserves the value") {
    std::mt19937_64 rng(51);
    for (const auto& entry : corpus::full()) {
        const std::size_t n = entry.graph.vertex_count();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const double a = exact_toughness(entry.graph).value;
        const double b = exact_toughness(relabel(entry.graph, perm)).value;
        CHECK(a == b);
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(exact_toughness(DirectedGraph(3, {{0, 1}, {1, 2}})), PreconditionError);
    CHECK_THROWS_AS(exact_toughness(undirected_cycle(21)), PreconditionError);
    ToughnessOptions small_cap;
    small_cap.enumeration_cap = 5;
    CHECK_THROWS_AS(exact_toughness(undirected_cycle(6), small_cap), PreconditionError);
    small_cap.allow_over_cap = true;
    CHECK(exact_toughness(undirected_cycle(6), small_cap).value == 1.0);
    ToughnessOptions unlimited;
    unlimited.allow_over_cap = true;
    CHECK_THROWS_AS(exact_toughness(undirected_cycle(31), unlimited), PreconditionError);
}

TEST_CASE("spectral bound examples") {
    const double mu5 = 2.0 * std::cos(std::numbers::pi / 5.0);
    const SpectralProfile c5 = spectral_profile(undirected_cycle(5));
    CHECK(std::abs(toughness_spectral_bound(c5) - formula(2.0, mu5)) <= 1e-9);
    CHECK(toughness_spectral_bound(c5) == doctest::Approx(-0.1055).epsilon(1e-3));
    CHECK(alon_toughness_bound(undirected_cycle(5)) == doctest::Approx(formula(2.0, mu5)).epsilon(1e-10));
    CHECK(alon_toughness_bound(petersen()) == doctest::Approx(-1.0 / 30.0).epsilon(1e-10));
    CHECK(alon_toughness_bound(complete_bidirected(4)) == doctest::Approx(5.0 / 12.0).epsilon(1e-10));
    CHECK(alon_toughness_formula(3.0, 0.0) == kInfinite);
    CHECK_THROWS_AS(alon_toughness_bound(chord()), PreconditionError);
}

TEST_CASE("chord cycle bound from independently recomputed inputs") {
    const SpectralProfile p = spectral_profile(chord());
    const auto sv = oracle::singular_values(p.decomposition.basis);
    const double norm_c = sv.front(), kappa = sv.front() / sv.back();
    const double rho = std::sqrt(2.0) / 2.0, ratio = 0.2 / 0.4;
    const double want = (ratio / (rho * kappa) - 1.0 / (1.0 + rho * norm_c * norm_c * ratio / kappa) - 1.0) / 3.0;
    CHECK(toughness_spectral_bound(p) == doctest::Approx(want).epsilon(1e-8));
}

TEST_CASE("spectral bound reduces to the regular-graph formula") {
    for (const auto& entry : corpus::named_graphs()) {
        if (!entry.k) continue;
        CAPTURE(entry.name);
        const double want = formula(static_cast<double>(*entry.k), *entry.mu);
        const SpectralProfile p = spectral_profile(entry.graph);
        CHECK(std::abs(toughness_spectral_bound(p) - want) <= 1e-9);
        CHECK(std::abs(toughness_spectral_bound(p) - alon_toughness_bound(entry.graph)) <= 1e-9);
        CHECK(exact_toughness(entry.graph).value >= want - 1e-9);
    }
}

TEST_CASE("zero rho gives an unbounded bound") {
    SpectralProfile p = spectral_profile(complete_bidirected(3));
    p.rho = 0.0;
    CHECK(toughness_spectral_bound(p) == kInfinite);
}

TEST_CASE("comparisons") {
    const BoundComparison k4 = compare_bounds(complete_bidirected(4));
    CHECK(k4.exact.is_infinite());
    CHECK(k4.holds);
    CHECK(k4.gap == kInfinite);

    const BoundComparison c5 = compare_bounds(undirected_cycle(5));
    CHECK(c5.exact.value == 1.0);
    CHECK(c5.holds);
    CHECK(c5.gap == doctest::Approx(1.0 - c5.spectral_bound));

    const BoundComparison c = compare_bounds(chord());
    CHECK(c.exact.value == 0.5);
    CHECK(c.gap == doctest::Approx(0.5 - c.spectral_bound));
    CHECK(c.holds == (0.5 >= c.spectral_bound - 1e-9));

    CHECK_THROWS_AS(compare_bounds(undirected_cycle(4)), PreconditionError);
}

}  // TEST_SUITE
