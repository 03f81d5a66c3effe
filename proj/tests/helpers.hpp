#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "werner/matrix.hpp"
#include "werner/shape.hpp"

namespace test_helpers {

using werner::Complex;
using werner::DenseMatrix;
using werner::MultiIndex;
using werner::SystemShape;

inline std::mt19937 seeded_rng(unsigned seed) { return std::mt19937{seed}; }

inline DenseMatrix random_complex_matrix(std::size_t dim, std::mt19937& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = Complex{gauss(rng), gauss(rng)};
    return m;
}

// (B + B^dagger)/2 is exactly Hermitian in floating point: conjugation is
// exact and addition is commutative.
inline DenseMatrix random_hermitian(std::size_t dim, std::mt19937& rng) {
    const DenseMatrix b = random_complex_matrix(dim, rng);
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = 0.5 * (b(i, j) + std::conj(b(j, i)));
    return m;
}

/// Largest pointwise gap between two equally sized sorted lists.
inline double sorted_max_deviation(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
    double dev = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) dev = std::max(dev, std::abs(a[k] - b[k]));
    return dev;
}

/// Relabel subsystems: entry (r, c) of the result reads the input at the
/// digit-permuted indices. perm[k] gives the source position for digit k.
inline DenseMatrix permute_subsystems(const DenseMatrix& m, const SystemShape& shape,
                                      const std::vector<int>& perm) {
    DenseMatrix out(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        const MultiIndex rd = multi_index(shape, r);
        MultiIndex rp(rd.size());
        for (std::size_t k = 0; k < rd.size(); ++k)
            rp[k] = rd[static_cast<std::size_t>(perm[k])];
        const std::size_t rr = flat_index(shape, rp);
        for (std::size_t c = 0; c < m.dim(); ++c) {
            const MultiIndex cd = multi_index(shape, c);
            MultiIndex cp(cd.size());
            for (std::size_t k = 0; k < cd.size(); ++k)
                cp[k] = cd[static_cast<std::size_t>(perm[k])];
            out(r, c) = m(rr, flat_index(shape, cp));
        }
    }
    return out;
}

}  // namespace test_helpers
