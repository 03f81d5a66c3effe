#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "werner/errors.hpp"
#include "werner/shape.hpp"

namespace werner {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
class DenseMatrix {
public:
    explicit DenseMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }

    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    Complex trace() const {
        Complex sum = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) sum += (*this)(i, i);
        return sum;
    }

    double max_abs() const {
        double m = 0.0;
        for (const Complex& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    double frobenius_norm() const {
        double sum = 0.0;
        for (const Complex& z : entries_) sum += std::norm(z);
        return std::sqrt(sum);
    }

    DenseMatrix transpose() const {
        DenseMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    DenseMatrix adjoint() const {
        DenseMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    /// max|A - A^dagger| <= rel_tol * max|A| (zero matrix counts as Hermitian).
    bool is_hermitian(double rel_tol = 1e-12) const {
        double dev = 0.0;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                dev = std::max(dev, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return dev <= rel_tol * max_abs();
    }

    DenseMatrix& operator+=(const DenseMatrix& rhs) {
        require_same_dim(rhs, "+=");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
        return *this;
    }

    DenseMatrix& operator-=(const DenseMatrix& rhs) {
        require_same_dim(rhs, "-=");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
        return *this;
    }

    DenseMatrix& operator*=(Complex scale) {
        for (Complex& z : entries_) z *= scale;
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs += rhs; }
    friend DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) { return lhs -= rhs; }
    friend DenseMatrix operator*(Complex scale, DenseMatrix m) { return m *= scale; }

    friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
        lhs.require_same_dim(rhs, "*");
        const std::size_t n = lhs.dim_;
        DenseMatrix out(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex a = lhs(i, k);
                if (a == Complex{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
            }
        }
        return out;
    }

private:
    void require_same_dim(const DenseMatrix& rhs, const char* op) const {
        if (dim_ != rhs.dim_) {
            throw std::invalid_argument(std::string("DenseMatrix: dimension mismatch in ") + op +
                                        ": " + std::to_string(dim_) + " vs " +
                                        std::to_string(rhs.dim_));
        }
    }

    std::size_t dim_;
    std::vector<Complex> entries_;
};

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) dev = std::max(dev, std::abs(a(i, j) - b(i, j)));
    return dev;
}

/// Kronecker product. entry[(i*db+k), (j*db+l)] = a(i,j) * b(k,l).
inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b,
                        std::size_t dim_cap = kDefaultDimCap) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    if (da != 0 && da * db / da != db) {
        throw CapacityError("kron: dimension overflow");
    }
    if (da * db > dim_cap) {
        throw CapacityError("kron: result dimension " + std::to_string(da * db) + " exceeds cap " +
                            std::to_string(dim_cap));
    }
    DenseMatrix out(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) out(i * db + k, j * db + l) = aij * b(k, l);
        }
    return out;
}

/// d-fold Kronecker power.
inline DenseMatrix kron_power(const DenseMatrix& a, int count,
                              std::size_t dim_cap = kDefaultDimCap) {
    if (count < 1) {
        throw std::invalid_argument("kron_power: count must be >= 1");
    }
    DenseMatrix out = a;
    for (int k = 1; k < count; ++k) out = kron(out, a, dim_cap);
    return out;
}

}  // namespace werner
