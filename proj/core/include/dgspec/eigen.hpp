#pragma once

#include <cstddef>
#include <vector>

#include "dgspec/dense_matrix.hpp"

namespace dgspec {

struct EigenOptions {
    /// Accept only if ||A C - C diag(lambda)||_F <= residual_tolerance * ||A||_F.
    double residual_tolerance = 1e-10;
    /// Eigenvalues closer than cluster_tolerance * ||A||_inf share an
    /// eigenspace, which is then given an orthonormal basis.
    double cluster_tolerance = 1e-8;
    /// A clustered eigenvalue of multiplicity m must have m singular values
    /// of (A - mu I) below null_space_tolerance * ||A||_inf.
    double null_space_tolerance = 1e-7;
    /// Defective if sigma_min(C) falls below this ...
    double min_basis_singular_value = 1e-10;
    /// ... or kappa(C) exceeds this.
    double max_basis_condition = 1e10;
    /// Francis QR gives up after this many sweeps per row.
    std::size_t max_qr_iterations_per_row = 100;
};

/// A = C diag(eigenvalues) C^-1.
///
/// Columns of C have unit Euclidean norm and are phase-normalized so the
/// first entry of largest modulus is real and positive. Repeated eigenvalues
/// (per cluster_tolerance) get one shared value and an orthonormal basis for
/// their eigenspace. Columns are ordered by descending modulus, then
/// descending real part, then descending imaginary part, so conjugate pairs
/// are adjacent with the positive imaginary part first and exactly
/// conjugate vectors.
struct EigenDecomposition {
    std::vector<Complex> eigenvalues;
    DenseMatrix basis;
    DenseMatrix basis_inverse;
    /// ||A C - C diag(lambda)||_F
    double residual = 0.0;
    /// ||C C^-1 - I||_F
    double inverse_residual = 0.0;
    /// Eigenspace index of each column; columns sharing an index span one
    /// eigenspace.
    std::vector<std::size_t> eigenspace;
    double basis_sigma_min = 0.0;
    double basis_condition = 0.0;
};

struct RealSchurForm {
    std::vector<double> t;  // n x n row-major, quasi upper triangular
    std::vector<double> z;  // n x n row-major, orthogonal, A = Z T Z^T
    std::vector<Complex> eigenvalues;  // diagonal-block order
    std::size_t n = 0;
    std::size_t iterations = 0;
};

/// Hessenberg reduction followed by Francis double-shift QR.
/// Throws NumericalError if QR has not converged after
/// max_qr_iterations_per_row * n sweeps, PreconditionError unless A is
/// square, real, and finite.
RealSchurForm real_schur(const DenseMatrix& a, const EigenOptions& options = {});

/// Eigenvalues only, in no particular order.
std::vector<Complex> eigenvalues_nonsymmetric(const DenseMatrix& a, const EigenOptions& options = {});

/// Throws DefectiveMatrixError when A lacks a basis of eigenvectors at
/// working precision, NumericalError on non-convergence or excess residual.
EigenDecomposition eigendecompose_nonsymmetric(const DenseMatrix& a, const EigenOptions& options = {});

/// Scales v to unit norm and rotates its phase so that its first entry of
/// largest modulus becomes real positive.
void normalize_eigenvector(std::vector<Complex>& v);

/// Sort key used for eigenvalue listings: descending modulus, then real
/// part, then imaginary part.
bool eigenvalue_order(const Complex& a, const Complex& b);

}  // namespace dgspec
