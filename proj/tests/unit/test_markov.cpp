#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "corpus.hpp"
#include "dgspec/errors.hpp"
#include "dgspec/generators.hpp"
#include "dgspec/linalg.hpp"
#include "dgspec/markov.hpp"

using namespace dgspec;

namespace {

DirectedGraph chord() { return chord_cycle(3, default_chords()); }

double fixed_point_error(const SpectralProfile& p) {
    double worst = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) s += p.pi[i] * p.transition.p(i, j).real();
        worst = std::max(worst, std::abs(s - p.pi[j]));
    }
    return worst;
}

}  // namespace

TEST_SUITE("markov") {

TEST_CASE("transition matrices") {
    const TransitionMatrix k3 = build_transition_matrix(complete_bidirected(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(k3.p(i, j) == Complex(i == j ? 0.0 : 0.5));
    const TransitionMatrix c = build_transition_matrix(chord());
    CHECK(c.p == DenseMatrix{{0.0, 0.5, 0.5}, {0.0, 0.0, 1.0}, {1.0, 0.0, 0.0}});
    try {
        build_transition_matrix(DirectedGraph(3, {{0, 1}, {1, 2}}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()) == "vertex 2 has outdegree 0");
    }
}

TEST_CASE("rows are stochastic") {
    for (const auto& entry : corpus::full()) {
        const TransitionMatrix t = build_transition_matrix(entry.graph);
        for (std::size_t i = 0; i < t.p.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < t.p.cols(); ++j) {
                CHECK(t.p(i, j).real() >= 0.0);
                CHECK((t.p(i, j).real() > 0.0) == entry.graph.has_edge(i, j));
                s += t.p(i, j).real();
            }
            CHECK(std::abs(s - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("stationary distributions") {
    for (std::size_t n = 3; n <= 7; ++n) {
        for (double x : stationary_distribution(build_transition_matrix(complete_bidirected(n)))) {
            CHECK(x == doctest::Approx(1.0 / n).epsilon(1e-12));
        }
    }
    const auto pi = stationary_distribution(build_transition_matrix(chord()));
    CHECK(std::abs(pi[0] - 0.4) <= 1e-10);
    CHECK(std::abs(pi[1] - 0.2) <= 1e-10);
    CHECK(std::abs(pi[2] - 0.4) <= 1e-10);
    for (double x : stationary_distribution(build_transition_matrix(undirected_cycle(5)))) {
        CHECK(x == doctest::Approx(0.2).epsilon(1e-12));
    }
    CHECK_THROWS_AS(stationary_distribution(build_transition_matrix(undirected_cycle(4))), PreconditionError);
    CHECK_THROWS_AS(stationary_distribution(build_transition_matrix(DirectedGraph(2, {{0, 0}, {0, 1}, {1, 1}}))),
                    PreconditionError);
}

TEST_CASE("spectral profile of complete graphs") {
    for (std::size_t n = 3; n <= 8; ++n) {
        const SpectralProfile p = spectral_profile(complete_bidirected(n));
        CHECK(std::abs(p.rho - 1.0 / static_cast<double>(n - 1)) <= 1e-9);
        CHECK(std::abs(p.kappa - 1.0) <= 1e-8);
        CHECK(std::abs(p.decomposition.eigenvalues[0] - 1.0) <= 1e-10);
        for (std::size_t k = 1; k < n; ++k) {
            CHECK(std::abs(p.decomposition.eigenvalues[k] + 1.0 / static_cast<double>(n - 1)) <= 1e-10);
        }
    }
}

TEST_CASE("spectral profile of the chord cycle") {
    const SpectralProfile p = spectral_profile(chord());
    CHECK(std::abs(p.rho - std::sqrt(2.0) / 2.0) <= 1e-9);
    CHECK(p.pi_min == doctest::Approx(0.2).epsilon(1e-10));
    CHECK(p.pi_max == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(p.kappa >= 1.0 - 1e-12);
    const SymbolCheck check = eml_symbol_check(p);
    CHECK(check.first_row_deviation <= 1e-8);
    CHECK(check.dominant_eigenvalue_deviation <= 1e-8);
}

TEST_CASE("spectral profile of odd cycles matches the circulant spectrum") {
    for (std::size_t n : {3u, 5u, 7u, 9u, 11u}) {
        const SpectralProfile p = spectral_profile(undirected_cycle(n));
        CHECK(std::abs(p.rho - std::cos(std::numbers::pi / static_cast<double>(n))) <= 1e-9);
        std::vector<double> want, got;
        for (std::size_t k = 0; k < n; ++k) {
            want.push_back(std::cos(2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n)));
        }
        for (const Complex& z : p.decomposition.eigenvalues) {
            CHECK(std::abs(z.imag()) <= 1e-12);
            got.push_back(z.real());
        }
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(want[k] - got[k]) <= 1e-8);
    }
}

TEST_CASE("first column is the normalized constant vector") {
    for (const auto& entry : corpus::full()) {
        const SpectralProfile p = spectral_profile(entry.graph);
        const double c = 1.0 / std::sqrt(static_cast<double>(p.size()));
        for (const Complex& z : p.decomposition.basis.column(0)) CHECK(z == Complex(c));
        CHECK(p.decomposition.eigenvalues.size() == p.size());
    }
}

TEST_CASE("profile invariants on the corpus") {
    for (const auto& entry : corpus::full()) {
        CAPTURE(entry.name);
        const SpectralProfile p = spectral_profile(entry.graph);
        CHECK(p.rho < 1.0);
        CHECK(p.kappa >= 1.0 - 1e-12);
        CHECK(p.kappa == doctest::Approx(p.norm_c * p.norm_c_inv));
        CHECK(fixed_point_error(p) <= 1e-12);
        CHECK(std::abs(std::accumulate(p.pi.begin(), p.pi.end(), 0.0) - 1.0) <= 1e-12);
        for (double x : p.pi) CHECK(x > 0.0);
        CHECK(eml_symbol_check(p).first_row_deviation <= 1e-8);
        CHECK(eml_symbol_check(p).dominant_eigenvalue_deviation <= 1e-10);
        CHECK(p.decomposition.residual <= 1e-10 * p.transition.p.frobenius_norm());
        if (is_symmetric(entry.graph)) CHECK(p.kappa - 1.0 <= 1e-8);
    }
}

TEST_CASE("rho is invariant under relabeling") {
    std::mt19937_64 rng(31);
    for (const auto& entry : corpus::full()) {
        const std::size_t n = entry.graph.vertex_count();
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const double a = spectral_profile(entry.graph).rho;
        const double b = spectral_profile(relabel(entry.graph, perm)).rho;
        CHECK(std::abs(a - b) <= 1e-9);
    }
}

TEST_CASE("rejected inputs") {
    CHECK_THROWS_AS(spectral_profile(undirected_cycle(4)), PreconditionError);
    CHECK_THROWS_AS(spectral_profile(DirectedGraph(3, {{0, 1}, {1, 2}})), PreconditionError);
    CHECK_THROWS_AS(spectral_profile(de_bruijn(2, 2)), DefectiveMatrixError);
    try {
        spectral_profile(DirectedGraph(3, {{0, 1}, {1, 2}, {1, 0}}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()) == "vertex 2 has outdegree 0");
    }
    try {
        spectral_profile(DirectedGraph(3, {{0, 1}, {1, 0}, {2, 2}, {2, 0}}));
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("strongly connected") != std::string::npos);
    }
}

}  // TEST_SUITE
