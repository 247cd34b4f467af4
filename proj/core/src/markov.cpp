#include "dgspec/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dgspec/errors.hpp"
#include "dgspec/linalg.hpp"

namespace dgspec {

TransitionMatrix build_transition_matrix(const DirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    DenseMatrix p(n, n);
    for (Vertex i = 0; i < n; ++i) {
        const std::size_t degree = g.out_degree(i);
        if (degree == 0) {
            throw PreconditionError("vertex " + g.label(i) + " has outdegree 0");
        }
        const double weight = 1.0 / static_cast<double>(degree);
        for (Vertex j : g.out_neighbors(i)) p(i, j) = weight;
    }
    return {std::move(p), g};
}

void require_ergodic(const DirectedGraph& g) {
    const SccDecomposition components = scc(g);
    if (components.component_count != 1) {
        throw PreconditionError("graph is not strongly connected (" +
                                std::to_string(components.component_count) + " components)");
    }
    if (const std::size_t d = period(g); d != 1) {
        throw PreconditionError("graph is periodic (period " + std::to_string(d) + ")");
    }
}

std::vector<double> stationary_distribution(const TransitionMatrix& t,
                                            const StationaryOptions& options) {
    require_ergodic(t.graph);
    const std::size_t n = t.p.rows();
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);

    auto step = [&](const std::vector<double>& from, std::vector<double>& to) {
        std::fill(to.begin(), to.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double mass = from[i];
            for (Vertex j : t.graph.out_neighbors(static_cast<Vertex>(i))) {
                to[j] += mass * t.p(i, j).real();
            }
        }
    };
    auto change = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
        return worst;
    };

    bool converged = false;
    for (std::size_t it = 0; it < options.max_iterations; ++it) {
        step(pi, next);
        const double delta = change(pi, next);
        pi.swap(next);
        if (delta < options.tolerance) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw NumericalError("stationary distribution did not converge in " +
                             std::to_string(options.max_iterations) + " iterations");
    }
    const double total = std::accumulate(pi.begin(), pi.end(), 0.0);
    for (double& x : pi) x /= total;

    step(pi, next);
    if (const double residual = change(pi, next); residual > options.fixed_point_tolerance) {
        std::ostringstream msg;
        msg << "stationary distribution fails the fixed-point check (residual " << residual << ")";
        throw NumericalError(msg.str());
    }
    return pi;
}

SpectralProfile spectral_profile(const TransitionMatrix& t, const SpectralOptions& options) {
    require_ergodic(t.graph);
    const std::size_t n = t.p.rows();

    EigenDecomposition eig = eigendecompose_nonsymmetric(t.p, options.eigen);

    std::size_t dominant = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (std::abs(eig.eigenvalues[k] - 1.0) < std::abs(eig.eigenvalues[dominant] - 1.0)) {
            dominant = k;
        }
    }
    // Move the dominant pair to the front, keeping the rest in order, and
    // pin its eigenvector to the analytic constant vector.
    auto rotate_front = [dominant](auto& items) {
        std::rotate(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(dominant),
                    items.begin() + static_cast<std::ptrdiff_t>(dominant) + 1);
    };
    rotate_front(eig.eigenvalues);
    rotate_front(eig.eigenspace);
    DenseMatrix basis(n, n);
    const std::vector<Complex> constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    basis.set_column(0, constant);
    for (std::size_t k = 0, dst = 1; k < n; ++k) {
        if (k == dominant) continue;
        basis.set_column(dst++, eig.basis.column(k));
    }
    eig.basis = std::move(basis);
    try {
        eig.basis_inverse = invert(eig.basis);
    } catch (const NumericalError&) {
        throw DefectiveMatrixError("eigenvector matrix became singular after fixing x_1");
    }
    eig.inverse_residual =
        (eig.basis * eig.basis_inverse - DenseMatrix::identity(n)).frobenius_norm();
    DenseMatrix ac = t.p * eig.basis;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) ac(r, c) -= eig.basis(r, c) * eig.eigenvalues[c];
    }
    eig.residual = ac.frobenius_norm();
    const double allowed = options.eigen.residual_tolerance * t.p.frobenius_norm();
    if (eig.residual > allowed) {
        std::ostringstream msg;
        msg << "eigen residual " << eig.residual << " exceeds tolerance " << allowed;
        throw NumericalError(msg.str());
    }

    double rho = 0.0;
    for (std::size_t k = 1; k < n; ++k) rho = std::max(rho, std::abs(eig.eigenvalues[k]));
    if (rho >= 1.0 - options.aperiodicity_margin) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "second eigenvalue modulus " << rho << " is numerically 1";
        throw NumericalError(msg.str());
    }

    SpectralProfile profile(t);
    profile.rho = rho;
    profile.norm_c = operator_norm(eig.basis);
    profile.norm_c_inv = operator_norm(eig.basis_inverse);
    profile.kappa = profile.norm_c * profile.norm_c_inv;
    eig.basis_sigma_min = 1.0 / profile.norm_c_inv;
    eig.basis_condition = profile.kappa;
    profile.decomposition = std::move(eig);

    profile.pi = stationary_distribution(t, options.stationary);
    auto [lo, hi] = std::minmax_element(profile.pi.begin(), profile.pi.end());
    profile.pi_min = *lo;
    profile.pi_max = *hi;
    return profile;
}

SpectralProfile spectral_profile(const DirectedGraph& g, const SpectralOptions& options) {
    // A sink vertex is the more specific diagnosis, so check outdegrees first.
    return spectral_profile(build_transition_matrix(g), options);
}

SymbolCheck eml_symbol_check(const SpectralProfile& profile) {
    const std::size_t n = profile.size();
    const double root_n = std::sqrt(static_cast<double>(n));
    SymbolCheck check;
    for (std::size_t j = 0; j < n; ++j) {
        const double dev = std::abs(profile.decomposition.basis_inverse(0, j) - root_n * profile.pi[j]);
        check.first_row_deviation = std::max(check.first_row_deviation, dev);
    }
    check.dominant_eigenvalue_deviation = std::abs(profile.decomposition.eigenvalues[0] - 1.0);
    return check;
}

}  // namespace dgspec
