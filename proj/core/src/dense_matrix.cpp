#include "dgspec/dense_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "dgspec/errors.hpp"

namespace dgspec {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw PreconditionError("matrix entry count does not match its shape");
    }
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw PreconditionError("ragged matrix literal");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> values) {
    DenseMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

DenseMatrix DenseMatrix::from_real(std::size_t rows, std::size_t cols,
                                   std::span<const double> entries) {
    if (entries.size() != rows * cols) {
        throw PreconditionError("matrix entry count does not match its shape");
    }
    return DenseMatrix(rows, cols, std::vector<Complex>(entries.begin(), entries.end()));
}

std::vector<Complex> DenseMatrix::column(std::size_t c) const {
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void DenseMatrix::set_column(std::size_t c, std::span<const Complex> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool DenseMatrix::is_real() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex& z) { return z.imag() == 0.0; });
}

bool DenseMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    });
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    }
    return out;
}

DenseMatrix DenseMatrix::transpose() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

double DenseMatrix::frobenius_norm() const {
    double scale = max_abs();
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& z : entries_) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

double DenseMatrix::inf_norm() const {
    double best = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) {
        double sum = 0.0;
        for (const Complex& z : row(r)) sum += std::abs(z);
        best = std::max(best, sum);
    }
    return best;
}

double DenseMatrix::max_abs() const {
    double best = 0.0;
    for (const Complex& z : entries_) best = std::max(best, std::abs(z));
    return best;
}

Complex DenseMatrix::trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) sum += (*this)(i, i);
    return sum;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("shape mismatch in +");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw PreconditionError("shape mismatch in -");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) z *= scalar;
    return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw PreconditionError("shape mismatch in *");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            auto b_row = b.row(k);
            for (std::size_t j = 0; j < b.cols_; ++j) out_row[j] += aik * b_row[j];
        }
    }
    return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> x) const {
    if (x.size() != cols_) throw PreconditionError("shape mismatch in apply");
    std::vector<Complex> y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Complex sum = 0.0;
        auto rr = row(r);
        for (std::size_t c = 0; c < cols_; ++c) sum += rr[c] * x[c];
        y[r] = sum;
    }
    return y;
}

std::vector<Complex> DenseMatrix::apply_adjoint(std::span<const Complex> x) const {
    if (x.size() != rows_) throw PreconditionError("shape mismatch in apply_adjoint");
    std::vector<Complex> y(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto rr = row(r);
        for (std::size_t c = 0; c < cols_; ++c) y[c] += std::conj(rr[c]) * x[r];
    }
    return y;
}

double norm2(std::span<const Complex> v) {
    double scale = 0.0;
    for (const Complex& z : v) scale = std::max(scale, std::abs(z));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (const Complex& z : v) sum += std::norm(z / scale);
    return scale * std::sqrt(sum);
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += std::conj(x[i]) * y[i];
    return sum;
}

}  // namespace dgspec
