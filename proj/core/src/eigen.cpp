#include "dgspec/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "dgspec/errors.hpp"
#include "dgspec/linalg.hpp"

namespace dgspec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

class RealView {
public:
    RealView(std::vector<double>& data, std::size_t n) : data_(data), n_(n) {}
    double& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }

private:
    std::vector<double>& data_;
    std::size_t n_;
};

// Householder reduction to upper Hessenberg form; on return h holds H and
// q holds Q with A = Q H Q^T.
void hessenberg(std::vector<double>& h_data, std::vector<double>& q_data, std::size_t n) {
    RealView h(h_data, n);
    q_data.assign(n * n, 0.0);
    RealView q(q_data, n);
    for (std::size_t i = 0; i < n; ++i) q(i, i) = 1.0;
    std::vector<double> v(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        double scale = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) scale += std::abs(h(i, k));
        if (scale == 0.0) continue;
        double sigma = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            v[i] = h(i, k) / scale;
            sigma += v[i] * v[i];
        }
        double alpha = std::sqrt(sigma);
        if (v[k + 1] > 0) alpha = -alpha;
        // v = x - alpha e1, H_k = I - 2 v v^T / (v^T v)
        const double vtv = sigma - 2.0 * alpha * v[k + 1] + alpha * alpha;
        v[k + 1] -= alpha;
        if (vtv == 0.0) continue;
        const double beta = 2.0 / vtv;

        // H := H_k H
        for (std::size_t j = k; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) s += v[i] * h(i, j);
            s *= beta;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= s * v[i];
        }
        // H := H H_k, Q := Q H_k
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += h(i, j) * v[j];
            s *= beta;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= s * v[j];

            double sq = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) sq += q(i, j) * v[j];
            sq *= beta;
            for (std::size_t j = k + 1; j < n; ++j) q(i, j) -= sq * v[j];
        }
        h(k + 1, k) = alpha * scale;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

// Francis double-shift QR on a Hessenberg matrix, accumulating the
// orthogonal factor into z. Follows the EISPACK hqr2 iteration (Schur part).
void francis_qr(std::vector<double>& h_data, std::vector<double>& z_data, std::size_t nn,
                std::vector<double>& wr, std::vector<double>& wi, std::size_t max_iterations,
                std::size_t& total_iterations) {
    RealView h(h_data, nn);
    RealView v(z_data, nn);
    wr.assign(nn, 0.0);
    wi.assign(nn, 0.0);

    double norm = 0.0;
    for (std::size_t i = 0; i < nn; ++i) {
        for (std::size_t j = (i == 0 ? 0 : i - 1); j < nn; ++j) norm += std::abs(h(i, j));
    }

    long n = static_cast<long>(nn) - 1;
    const long low = 0;
    double exshift = 0.0;
    double p = 0, q = 0, r = 0, s = 0, z = 0, w, x, y;
    int iter = 0;
    total_iterations = 0;

    while (n >= low) {
        long l = n;
        while (l > low) {
            s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = norm;
            if (std::abs(h(l, l - 1)) < kEps * s) break;
            --l;
        }

        if (l == n) {
            // One root.
            h(n, n) = h(n, n) + exshift;
            wr[n] = h(n, n);
            wi[n] = 0.0;
            if (n > 0) h(n, n - 1) = 0.0;
            --n;
            iter = 0;
        } else if (l == n - 1) {
            // Two roots.
            w = h(n, n - 1) * h(n - 1, n);
            p = (h(n - 1, n - 1) - h(n, n)) / 2.0;
            q = p * p + w;
            z = std::sqrt(std::abs(q));
            h(n, n) = h(n, n) + exshift;
            h(n - 1, n - 1) = h(n - 1, n - 1) + exshift;
            x = h(n, n);

            if (q >= 0) {
                // Real pair: rotate the block to upper triangular.
                z = (p >= 0) ? p + z : p - z;
                wr[n - 1] = x + z;
                wr[n] = wr[n - 1];
                if (z != 0.0) wr[n] = x - w / z;
                wi[n - 1] = 0.0;
                wi[n] = 0.0;
                x = h(n, n - 1);
                s = std::abs(x) + std::abs(z);
                p = x / s;
                q = z / s;
                r = std::sqrt(p * p + q * q);
                p = p / r;
                q = q / r;
                for (std::size_t j = n - 1; j < nn; ++j) {
                    z = h(n - 1, j);
                    h(n - 1, j) = q * z + p * h(n, j);
                    h(n, j) = q * h(n, j) - p * z;
                }
                for (long i = 0; i <= n; ++i) {
                    z = h(i, n - 1);
                    h(i, n - 1) = q * z + p * h(i, n);
                    h(i, n) = q * h(i, n) - p * z;
                }
                for (std::size_t i = 0; i < nn; ++i) {
                    z = v(i, n - 1);
                    v(i, n - 1) = q * z + p * v(i, n);
                    v(i, n) = q * v(i, n) - p * z;
                }
                h(n, n - 1) = 0.0;
            } else {
                // Complex pair stays as a 2x2 block.
                wr[n - 1] = x + p;
                wr[n] = x + p;
                wi[n - 1] = z;
                wi[n] = -z;
            }
            if (n - 1 > 0) h(n - 1, n - 2) = 0.0;
            n -= 2;
            iter = 0;
        } else {
            if (++total_iterations > max_iterations) {
                throw NumericalError("QR iteration did not converge within " +
                                     std::to_string(max_iterations) + " sweeps");
            }
            x = h(n, n);
            y = 0.0;
            w = 0.0;
            if (l < n) {
                y = h(n - 1, n - 1);
                w = h(n, n - 1) * h(n - 1, n);
            }

            // Wilkinson's ad hoc shift.
            if (iter == 10) {
                exshift += x;
                for (long i = low; i <= n; ++i) h(i, i) -= x;
                s = std::abs(h(n, n - 1)) + std::abs(h(n - 1, n - 2));
                x = y = 0.75 * s;
                w = -0.4375 * s * s;
            }
            // MATLAB's ad hoc shift.
            if (iter == 30) {
                s = (y - x) / 2.0;
                s = s * s + w;
                if (s > 0) {
                    s = std::sqrt(s);
                    if (y < x) s = -s;
                    s = x - w / ((y - x) / 2.0 + s);
                    for (long i = low; i <= n; ++i) h(i, i) -= s;
                    exshift += s;
                    x = y = w = 0.964;
                }
            }
            ++iter;

            // Look for two consecutive small subdiagonal elements.
            long m = n - 2;
            while (m >= l) {
                z = h(m, m);
                r = x - z;
                s = y - z;
                p = (r * s - w) / h(m + 1, m) + h(m, m + 1);
                q = h(m + 1, m + 1) - z - r - s;
                r = h(m + 2, m + 1);
                s = std::abs(p) + std::abs(q) + std::abs(r);
                p = p / s;
                q = q / s;
                r = r / s;
                if (m == l) break;
                if (std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r)) <
                    kEps * (std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                           std::abs(h(m + 1, m + 1))))) {
                    break;
                }
                --m;
            }

            for (long i = m + 2; i <= n; ++i) {
                h(i, i - 2) = 0.0;
                if (i > m + 2) h(i, i - 3) = 0.0;
            }

            // Double QR step on rows l..n, columns m..n.
            for (long k = m; k <= n - 1; ++k) {
                const bool notlast = (k != n - 1);
                if (k != m) {
                    p = h(k, k - 1);
                    q = h(k + 1, k - 1);
                    r = notlast ? h(k + 2, k - 1) : 0.0;
                    x = std::abs(p) + std::abs(q) + std::abs(r);
                    if (x == 0.0) continue;
                    p = p / x;
                    q = q / x;
                    r = r / x;
                }
                s = std::sqrt(p * p + q * q + r * r);
                if (p < 0) s = -s;
                if (s != 0) {
                    if (k != m) {
                        h(k, k - 1) = -s * x;
                    } else if (l != m) {
                        h(k, k - 1) = -h(k, k - 1);
                    }
                    p = p + s;
                    x = p / s;
                    y = q / s;
                    z = r / s;
                    q = q / p;
                    r = r / p;

                    for (std::size_t j = k; j < nn; ++j) {
                        p = h(k, j) + q * h(k + 1, j);
                        if (notlast) {
                            p = p + r * h(k + 2, j);
                            h(k + 2, j) = h(k + 2, j) - p * z;
                        }
                        h(k, j) = h(k, j) - p * x;
                        h(k + 1, j) = h(k + 1, j) - p * y;
                    }
                    for (long i = 0; i <= std::min(n, k + 3); ++i) {
                        p = x * h(i, k) + y * h(i, k + 1);
                        if (notlast) {
                            p = p + z * h(i, k + 2);
                            h(i, k + 2) = h(i, k + 2) - p * r;
                        }
                        h(i, k) = h(i, k) - p;
                        h(i, k + 1) = h(i, k + 1) - p * q;
                    }
                    for (std::size_t i = 0; i < nn; ++i) {
                        p = x * v(i, k) + y * v(i, k + 1);
                        if (notlast) {
                            p = p + z * v(i, k + 2);
                            v(i, k + 2) = v(i, k + 2) - p * r;
                        }
                        v(i, k) = v(i, k) - p;
                        v(i, k + 1) = v(i, k + 1) - p * q;
                    }
                }
            }
        }
    }
}

void require_real_square(const DenseMatrix& a) {
    if (!a.is_square() || a.rows() == 0) throw PreconditionError("eigensolver needs a square matrix");
    if (!a.is_real()) throw PreconditionError("eigensolver needs a real matrix");
    if (!a.all_finite()) throw PreconditionError("matrix has non-finite entries");
}

// Complex Schur form T (upper triangular) and unitary U with A = U T U^H,
// obtained by splitting each 2x2 block of the real Schur form with a
// complex Givens rotation.
void complex_schur(const RealSchurForm& rs, DenseMatrix& t, DenseMatrix& u) {
    const std::size_t n = rs.n;
    t = DenseMatrix::from_real(n, n, rs.t);
    u = DenseMatrix::from_real(n, n, rs.z);
    for (std::size_t m = n - 1; m >= 1; --m) {
        if (t(m, m - 1) != Complex{}) {
            const Complex a = t(m - 1, m - 1), b = t(m - 1, m), c = t(m, m - 1), d = t(m, m);
            const Complex half_trace = (a + d) / 2.0;
            const Complex disc = std::sqrt((a - d) * (a - d) / 4.0 + b * c);
            const Complex mu = half_trace + disc - d;
            const double rr = std::hypot(std::abs(mu), std::abs(c));
            const Complex cs = mu / rr;
            const Complex sn = c / rr;
            // G = [conj(cs) sn; -sn cs]
            for (std::size_t j = m - 1; j < n; ++j) {
                const Complex x = t(m - 1, j), y = t(m, j);
                t(m - 1, j) = std::conj(cs) * x + sn * y;
                t(m, j) = -sn * x + cs * y;
            }
            for (std::size_t i = 0; i <= m; ++i) {
                const Complex x = t(i, m - 1), y = t(i, m);
                t(i, m - 1) = x * cs + y * std::conj(sn);
                t(i, m) = -x * sn + y * std::conj(cs);
            }
            for (std::size_t i = 0; i < n; ++i) {
                const Complex x = u(i, m - 1), y = u(i, m);
                u(i, m - 1) = x * cs + y * std::conj(sn);
                u(i, m) = -x * sn + y * std::conj(cs);
            }
            t(m, m - 1) = 0.0;
        }
        if (m == 1) break;
    }
}

// Eigenvector of the upper triangular T for its k-th diagonal entry,
// mapped back through U.
std::vector<Complex> triangular_eigenvector(const DenseMatrix& t, const DenseMatrix& u,
                                            std::size_t k) {
    const std::size_t n = t.rows();
    const double small = std::max(kEps * t.frobenius_norm(), std::numeric_limits<double>::min());
    const Complex lambda = t(k, k);
    std::vector<Complex> x(n);
    x[k] = 1.0;
    for (std::size_t i = k; i-- > 0;) {
        Complex sum = 0.0;
        for (std::size_t j = i + 1; j <= k; ++j) sum += t(i, j) * x[j];
        Complex denom = t(i, i) - lambda;
        if (std::abs(denom) < small) denom = small;
        x[i] = -sum / denom;
        // Rescale on growth so the recurrence cannot overflow.
        const double mag = std::abs(x[i]);
        if (mag > 1e100) {
            for (std::size_t j = i; j <= k; ++j) x[j] /= mag;
        }
    }
    std::vector<Complex> v(n);
    for (std::size_t r = 0; r < n; ++r) {
        Complex sum = 0.0;
        for (std::size_t j = 0; j <= k; ++j) sum += u(r, j) * x[j];
        v[r] = sum;
    }
    return v;
}

struct Cluster {
    std::vector<std::size_t> members;  // Schur positions
    Complex center;
    bool self_conjugate = false;
};

std::vector<Cluster> cluster_eigenvalues(const std::vector<Complex>& values, double tol) {
    const std::size_t n = values.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    std::vector<bool> conj_link(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        // A value within tol of its own conjugate sits on the real axis; its
        // whole cluster is then treated as real.
        conj_link[i] = 2.0 * std::abs(values[i].imag()) <= tol;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values[i] - values[j]) <= tol) parent[find(i)] = find(j);
        }
    }
    std::vector<Cluster> clusters;
    std::vector<std::size_t> slot(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = find(i);
        if (slot[root] == n) {
            slot[root] = clusters.size();
            clusters.emplace_back();
        }
        Cluster& c = clusters[slot[root]];
        c.members.push_back(i);
        c.self_conjugate = c.self_conjugate || conj_link[i];
    }
    for (Cluster& c : clusters) {
        Complex sum = 0.0;
        for (std::size_t i : c.members) sum += values[i];
        c.center = sum / static_cast<double>(c.members.size());
        if (c.self_conjugate) c.center = c.center.real();
    }
    return clusters;
}

std::string describe(Complex z) {
    std::ostringstream out;
    out.precision(6);
    out << z.real();
    if (z.imag() != 0.0) out << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return out.str();
}

// Orthonormal basis of the null space of (A - mu I), `dimension` vectors.
std::vector<std::vector<Complex>> eigenspace_basis(const DenseMatrix& a, Complex mu,
                                                   std::size_t dimension, double tolerance) {
    DenseMatrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= mu;
    const SingularValueDecomposition svd = jacobi_svd(shifted);
    const std::size_t n = a.rows();
    const double boundary = svd.singular_values[n - dimension];
    if (boundary > tolerance) {
        std::size_t geometric = 0;
        for (double s : svd.singular_values) geometric += s <= tolerance ? 1 : 0;
        throw DefectiveMatrixError("eigenvalue " + describe(mu) + " has algebraic multiplicity " +
                                   std::to_string(dimension) + " but geometric multiplicity " +
                                   std::to_string(geometric) + "; matrix is not diagonalizable");
    }
    std::vector<std::vector<Complex>> basis;
    for (std::size_t k = n - dimension; k < n; ++k) basis.push_back(svd.right_vectors.column(k));
    return basis;
}

}  // namespace

RealSchurForm real_schur(const DenseMatrix& a, const EigenOptions& options) {
    require_real_square(a);
    const std::size_t n = a.rows();
    RealSchurForm out;
    out.n = n;
    out.t.resize(n * n);
    for (std::size_t i = 0; i < n * n; ++i) out.t[i] = a.entries()[i].real();
    hessenberg(out.t, out.z, n);
    std::vector<double> wr, wi;
    francis_qr(out.t, out.z, n, wr, wi, options.max_qr_iterations_per_row * n, out.iterations);

    // Clear rounding debris below the quasi-triangular pattern.
    RealView t(out.t, n);
    for (std::size_t i = 1; i < n; ++i) {
        const bool block = wi[i - 1] > 0.0 && wi[i] < 0.0;
        for (std::size_t j = 0; j + 1 < i; ++j) t(i, j) = 0.0;
        if (!block) t(i, i - 1) = 0.0;
    }
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = {wr[i], wi[i]};
    return out;
}

std::vector<Complex> eigenvalues_nonsymmetric(const DenseMatrix& a, const EigenOptions& options) {
    return real_schur(a, options).eigenvalues;
}

void normalize_eigenvector(std::vector<Complex>& v) {
    const double len = norm2(v);
    if (len == 0.0) return;
    double biggest = 0.0;
    for (const Complex& z : v) biggest = std::max(biggest, std::abs(z));
    // First entry within rounding of the largest modulus decides the phase.
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) >= biggest * (1.0 - 1e-10)) {
            anchor = i;
            break;
        }
    }
    const Complex phase = std::conj(v[anchor]) / std::abs(v[anchor]);
    for (Complex& z : v) z = z * phase / len;
    v[anchor] = std::abs(v[anchor]);
}

bool eigenvalue_order(const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma > mb;
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
}

EigenDecomposition eigendecompose_nonsymmetric(const DenseMatrix& a, const EigenOptions& options) {
    const RealSchurForm schur = real_schur(a, options);
    const std::size_t n = schur.n;
    DenseMatrix t, u;
    complex_schur(schur, t, u);

    std::vector<Complex> diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = t(i, i);

    const double scale = a.inf_norm();
    const std::vector<Cluster> clusters =
        cluster_eigenvalues(diag, options.cluster_tolerance * scale);

    struct Column {
        Complex value;
        std::vector<Complex> vector;
        std::size_t cluster;
    };
    std::vector<Column> columns;
    columns.reserve(n);
    std::vector<bool> done(clusters.size(), false);

    auto compute = [&](std::size_t ci) {
        const Cluster& c = clusters[ci];
        std::vector<std::vector<Complex>> vectors;
        if (c.members.size() == 1) {
            vectors.push_back(triangular_eigenvector(t, u, c.members.front()));
        } else {
            vectors = eigenspace_basis(a, c.center, c.members.size(),
                                       options.null_space_tolerance * std::max(scale, 1.0));
        }
        for (auto& v : vectors) {
            normalize_eigenvector(v);
            if (c.center.imag() == 0.0) {
                for (Complex& z : v) z = z.real();
                normalize_eigenvector(v);
            }
        }
        return vectors;
    };

    for (std::size_t ci = 0; ci < clusters.size(); ++ci) {
        if (done[ci]) continue;
        const Cluster& c = clusters[ci];
        if (c.self_conjugate || c.center.imag() == 0.0) {
            for (auto& v : compute(ci)) columns.push_back({c.center, std::move(v), ci});
            done[ci] = true;
            continue;
        }
        // Pair the cluster with its mirror image and emit exact conjugates.
        std::size_t mirror = clusters.size();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t cj = 0; cj < clusters.size(); ++cj) {
            if (cj == ci || done[cj] || clusters[cj].members.size() != c.members.size()) continue;
            const double gap = std::abs(clusters[cj].center - std::conj(c.center));
            if (gap < best) {
                best = gap;
                mirror = cj;
            }
        }
        const std::size_t upper =
            (mirror == clusters.size() || c.center.imag() > 0.0) ? ci : mirror;
        const Complex value = clusters[upper].center;
        auto vectors = compute(upper);
        for (auto& v : vectors) {
            std::vector<Complex> conj_v(v.size());
            std::transform(v.begin(), v.end(), conj_v.begin(), [](Complex z) { return std::conj(z); });
            columns.push_back({value, std::move(v), upper});
            if (mirror != clusters.size()) columns.push_back({std::conj(value), std::move(conj_v), upper == ci ? mirror : ci});
        }
        done[ci] = true;
        if (mirror != clusters.size()) done[mirror] = true;
    }

    std::stable_sort(columns.begin(), columns.end(), [](const Column& x, const Column& y) {
        return eigenvalue_order(x.value, y.value);
    });

    EigenDecomposition out;
    out.basis = DenseMatrix(n, n);
    std::vector<std::size_t> renumber(clusters.size(), clusters.size());
    std::size_t next_space = 0;
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues.push_back(columns[k].value);
        out.basis.set_column(k, columns[k].vector);
        std::size_t& id = renumber[columns[k].cluster];
        if (id == clusters.size()) id = next_space++;
        out.eigenspace.push_back(id);
    }

    try {
        out.basis_inverse = invert(out.basis);
    } catch (const NumericalError&) {
        throw DefectiveMatrixError("eigenvector matrix is singular; matrix is not diagonalizable");
    }
    const double norm_c = operator_norm(out.basis);
    const double norm_c_inv = operator_norm(out.basis_inverse);
    out.basis_sigma_min = 1.0 / norm_c_inv;
    out.basis_condition = norm_c * norm_c_inv;
    if (out.basis_sigma_min < options.min_basis_singular_value ||
        out.basis_condition > options.max_basis_condition) {
        std::ostringstream msg;
        msg << "eigenvector matrix is numerically singular (sigma_min = " << out.basis_sigma_min
            << ", kappa = " << out.basis_condition << "); matrix is not diagonalizable";
        throw DefectiveMatrixError(msg.str());
    }

    const DenseMatrix product = out.basis * out.basis_inverse;
    out.inverse_residual = (product - DenseMatrix::identity(n)).frobenius_norm();
    if (out.inverse_residual > 1e-9 * static_cast<double>(n)) {
        std::ostringstream msg;
        msg << "eigenvector matrix too ill-conditioned to invert accurately (||C C^-1 - I||_F = "
            << out.inverse_residual << ", kappa = " << out.basis_condition
            << "); treating matrix as not diagonalizable";
        throw DefectiveMatrixError(msg.str());
    }

    DenseMatrix ac = a * out.basis;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) ac(r, c) -= out.basis(r, c) * out.eigenvalues[c];
    }
    out.residual = ac.frobenius_norm();
    const double allowed = options.residual_tolerance * a.frobenius_norm();
    if (out.residual > allowed) {
        std::ostringstream msg;
        msg << "eigen residual " << out.residual << " exceeds tolerance " << allowed;
        throw NumericalError(msg.str());
    }
    return out;
}

}  // namespace dgspec
