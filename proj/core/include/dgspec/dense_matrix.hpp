#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dgspec {

using Complex = std::complex<double>;

/// Row-major dense matrix of complex doubles. Real matrices are stored with
/// zero imaginary parts.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    DenseMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix diagonal(std::span<const Complex> values);
    static DenseMatrix from_real(std::size_t rows, std::size_t cols, std::span<const double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
    std::vector<Complex> column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Complex> values);
    std::span<const Complex> entries() const noexcept { return entries_; }

    /// True when every imaginary part is exactly zero.
    bool is_real() const;
    bool all_finite() const;

    DenseMatrix adjoint() const;
    DenseMatrix transpose() const;

    double frobenius_norm() const;
    /// Maximum absolute row sum.
    double inf_norm() const;
    /// Maximum modulus of any entry.
    double max_abs() const;
    Complex trace() const;

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator-=(const DenseMatrix& other);
    DenseMatrix& operator*=(Complex scalar);

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
    friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

    /// y = A x
    std::vector<Complex> apply(std::span<const Complex> x) const;
    /// y = A^H x
    std::vector<Complex> apply_adjoint(std::span<const Complex> x) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

double norm2(std::span<const Complex> v);
Complex dot(std::span<const Complex> x, std::span<const Complex> y);  // x^H y

}  // namespace dgspec
