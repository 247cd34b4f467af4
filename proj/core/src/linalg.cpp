#include "dgspec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dgspec/errors.hpp"

namespace dgspec {

LuDecomposition lu_factor(const DenseMatrix& a) {
    if (!a.is_square()) throw PreconditionError("LU needs a square matrix");
    const std::size_t n = a.rows();
    LuDecomposition out{a, std::vector<std::size_t>(n), 1};
    std::iota(out.pivots.begin(), out.pivots.end(), std::size_t{0});
    DenseMatrix& lu = out.lu;
    const double threshold = kSingularPivotTolerance * a.inf_norm();

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(lu(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (double mag = std::abs(lu(i, k)); mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (best <= threshold || best == 0.0) {
            throw NumericalError("matrix is singular to working precision (pivot " +
                                 std::to_string(best) + " at column " + std::to_string(k) + ")");
        }
        if (pivot != k) {
            std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(pivot).begin());
            std::swap(out.pivots[k], out.pivots[pivot]);
            out.permutation_sign = -out.permutation_sign;
        }
        const Complex inv_pivot = 1.0 / lu(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            Complex factor = lu(i, k) * inv_pivot;
            lu(i, k) = factor;
            if (factor == Complex{}) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
        }
    }
    return out;
}

DenseMatrix lu_solve(const LuDecomposition& f, const DenseMatrix& b) {
    const std::size_t n = f.lu.rows();
    if (b.rows() != n) throw PreconditionError("right-hand side has the wrong row count");
    DenseMatrix x(n, b.cols());
    for (std::size_t i = 0; i < n; ++i) {
        auto src = b.row(f.pivots[i]);
        std::copy(src.begin(), src.end(), x.row(i).begin());
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t i = 0; i < n; ++i) {
            Complex sum = x(i, c);
            for (std::size_t j = 0; j < i; ++j) sum -= f.lu(i, j) * x(j, c);
            x(i, c) = sum;
        }
        for (std::size_t i = n; i-- > 0;) {
            Complex sum = x(i, c);
            for (std::size_t j = i + 1; j < n; ++j) sum -= f.lu(i, j) * x(j, c);
            x(i, c) = sum / f.lu(i, i);
        }
    }
    return x;
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b) {
    return lu_solve(lu_factor(a), b);
}

DenseMatrix invert(const DenseMatrix& a) {
    return lu_solve(lu_factor(a), DenseMatrix::identity(a.rows()));
}

Complex determinant(const DenseMatrix& a) {
    LuDecomposition f;
    try {
        f = lu_factor(a);
    } catch (const NumericalError&) {
        return 0.0;
    }
    Complex det = static_cast<double>(f.permutation_sign);
    for (std::size_t i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
    return det;
}

NormEstimate operator_norm_estimate(const DenseMatrix& a, const PowerIterationOptions& options) {
    NormEstimate out;
    if (a.empty() || a.max_abs() == 0.0) return out;

    const DenseMatrix gram = a.adjoint() * a;
    const std::size_t n = gram.rows();

    // Start from A^H e_k for the heaviest row k, which has a nonzero
    // component along the top right singular vector unless that row is
    // orthogonal to it.
    std::size_t heavy = 0;
    double heavy_norm = -1.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        double rn = norm2(a.row(r));
        if (rn > heavy_norm) {
            heavy_norm = rn;
            heavy = r;
        }
    }
    std::vector<Complex> x(n);
    for (std::size_t c = 0; c < n; ++c) x[c] = std::conj(a(heavy, c));
    // A slight all-ones admixture guards against that orthogonality.
    const double nudge = 1e-3 / std::sqrt(static_cast<double>(n));
    {
        double xn = norm2(x);
        for (Complex& z : x) z = z / xn + nudge;
        xn = norm2(x);
        for (Complex& z : x) z /= xn;
    }

    double theta = 0.0;
    double previous = -1.0;
    std::size_t stalled = 0;
    for (std::size_t it = 1; it <= options.max_iterations; ++it) {
        std::vector<Complex> y = gram.apply(x);
        theta = dot(x, y).real();
        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual += std::norm(y[i] - theta * x[i]);
        residual = std::sqrt(residual);
        out.iterations = it;
        out.residual = residual;
        if (residual <= options.relative_tolerance * theta) break;
        if (std::abs(theta - previous) <= 1e-15 * theta) {
            // Rayleigh quotient has stopped moving while the vector still
            // wanders inside a near-degenerate top singular subspace.
            if (++stalled >= 5) break;
        } else {
            stalled = 0;
        }
        previous = theta;
        double yn = norm2(y);
        if (yn == 0.0) break;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / yn;
    }
    out.value = std::sqrt(std::max(theta, 0.0));
    return out;
}

double operator_norm(const DenseMatrix& a, const PowerIterationOptions& options) {
    return operator_norm_estimate(a, options).value;
}

double condition_number(const DenseMatrix& c) {
    return operator_norm(c) * operator_norm(invert(c));
}

SingularValueDecomposition jacobi_svd(const DenseMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // Work on columns: store A^T row-major so each column is contiguous.
    DenseMatrix cols = a.transpose();
    DenseMatrix v = DenseMatrix::identity(n);  // also stored transposed: row j = column j
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 80;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                auto cp = cols.row(p);
                auto cq = cols.row(q);
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(cp[i]);
                    beta += std::norm(cq[i]);
                    gamma += std::conj(cp[i]) * cq[i];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                const Complex conj_phase = std::conj(phase);
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex xp = cp[i], xq = cq[i];
                    cp[i] = c * xp - s * conj_phase * xq;
                    cq[i] = s * phase * xp + c * xq;
                }
                auto vp = v.row(p);
                auto vq = v.row(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex xp = vp[i], xq = vq[i];
                    vp[i] = c * xp - s * conj_phase * xq;
                    vq[i] = s * phase * xp + c * xq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = norm2(cols.row(j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SingularValueDecomposition out;
    out.singular_values.reserve(n);
    out.right_vectors = DenseMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.singular_values.push_back(sigma[order[k]]);
        out.right_vectors.set_column(k, v.row(order[k]));
    }
    return out;
}

}  // namespace dgspec
