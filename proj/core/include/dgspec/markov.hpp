#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "dgspec/dense_matrix.hpp"
#include "dgspec/eigen.hpp"
#include "dgspec/graph.hpp"

namespace dgspec {

/// Random-walk matrix of a digraph: p_ij = 1/outdeg(i) on each arc (i, j),
/// zero elsewhere. Every row sums to one.
struct TransitionMatrix {
    DenseMatrix p;
    DirectedGraph graph;
};

/// Throws PreconditionError naming the first vertex with outdegree 0.
TransitionMatrix build_transition_matrix(const DirectedGraph& g);

struct StationaryOptions {
    double tolerance = 1e-14;        // successive iterates, infinity norm
    std::size_t max_iterations = 1'000'000;
    double fixed_point_tolerance = 1e-12;
};

/// Left Perron vector by power iteration on P^T from the uniform vector.
/// Throws PreconditionError unless the graph is strongly connected and
/// aperiodic, NumericalError if the iteration does not settle.
std::vector<double> stationary_distribution(const TransitionMatrix& t,
                                            const StationaryOptions& options = {});

struct SpectralOptions {
    EigenOptions eigen;
    StationaryOptions stationary;
    /// rho >= 1 - aperiodicity_margin is rejected as numerically periodic.
    double aperiodicity_margin = 1e-12;
};

struct SpectralProfile {
    explicit SpectralProfile(TransitionMatrix t) : transition(std::move(t)) {}

    TransitionMatrix transition;
    /// Column 0 of the basis is exactly (1/sqrt n) * ones, paired with the
    /// eigenvalue closest to 1.
    EigenDecomposition decomposition;
    /// Largest modulus among eigenvalues 2..n.
    double rho = 0.0;
    std::vector<double> pi;
    double pi_min = 0.0;
    double pi_max = 0.0;
    double norm_c = 0.0;
    double norm_c_inv = 0.0;
    double kappa = 0.0;

    std::size_t size() const noexcept { return pi.size(); }
};

/// Throws PreconditionError for graphs that are not strongly connected or
/// are periodic, DefectiveMatrixError when P is not diagonalizable, and
/// NumericalError when rho is numerically 1.
SpectralProfile spectral_profile(const TransitionMatrix& t, const SpectralOptions& options = {});
SpectralProfile spectral_profile(const DirectedGraph& g, const SpectralOptions& options = {});

/// Measured deviations from two identities tied to the x_1 choice: the
/// first row of C^-1 equals sqrt(n) * pi^T, and lambda_1 = 1.
struct SymbolCheck {
    double first_row_deviation = 0.0;        // infinity norm
    double dominant_eigenvalue_deviation = 0.0;
};

SymbolCheck eml_symbol_check(const SpectralProfile& profile);

/// Checks strong connectivity and aperiodicity with a PreconditionError
/// whose message names the failure.
void require_ergodic(const DirectedGraph& g);

}  // namespace dgspec
