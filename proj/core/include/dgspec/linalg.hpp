#pragma once

#include <cstddef>
#include <vector>

#include "dgspec/dense_matrix.hpp"

namespace dgspec {

/// PA = LU with partial pivoting, L unit lower triangular, both packed in `lu`.
struct LuDecomposition {
    DenseMatrix lu;
    std::vector<std::size_t> pivots;  // row i of PA is row pivots[i] of A
    int permutation_sign = 1;
};

/// Pivots smaller than this multiple of ||a||_inf count as zero.
inline constexpr double kSingularPivotTolerance = 1e-13;

/// Throws NumericalError when a pivot falls below
/// kSingularPivotTolerance * ||a||_inf, PreconditionError when a is not square.
LuDecomposition lu_factor(const DenseMatrix& a);

DenseMatrix lu_solve(const LuDecomposition& lu, const DenseMatrix& b);
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix invert(const DenseMatrix& a);

/// Returns 0 for matrices that are singular to working precision.
Complex determinant(const DenseMatrix& a);

struct PowerIterationOptions {
    double relative_tolerance = 1e-11;
    std::size_t max_iterations = 200000;
};

struct NormEstimate {
    double value = 0.0;
    /// Rayleigh residual ||B x - theta x|| for B = A^H A: some eigenvalue of
    /// B lies in [theta - r, theta + r], and value^2 = theta <= sigma_max^2.
    double residual = 0.0;
    std::size_t iterations = 0;
};

/// Largest singular value by power iteration on A^H A.
NormEstimate operator_norm_estimate(const DenseMatrix& a, const PowerIterationOptions& options = {});
double operator_norm(const DenseMatrix& a, const PowerIterationOptions& options = {});

/// ||c|| * ||c^-1||; throws NumericalError when c is singular.
double condition_number(const DenseMatrix& c);

struct SingularValueDecomposition {
    std::vector<double> singular_values;  // descending
    DenseMatrix right_vectors;            // columns, matching singular_values
};

/// One-sided (Hestenes) Jacobi. Real input stays real.
SingularValueDecomposition jacobi_svd(const DenseMatrix& a);

}  // namespace dgspec
